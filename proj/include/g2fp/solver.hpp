#pragma once

// Classification of weight data from moment values alone, assuming the
// manifold has the integral cohomology ring of the oriented Grassmannian.
// That assumption enters only through predicted_products(); the search then
// enforces divisibility, index, negation-closure and localization
// constraints and returns every surviving weight assignment.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "g2fp/exactnum.hpp"
#include "g2fp/fpdata.hpp"

namespace g2fp {

/// n even >= 2 and n+2 moment values, strictly increasing except possibly
/// between positions n/2 and n/2 + 1. Throws InvalidProfile.
class MomentProfile {
 public:
  MomentProfile(int n, std::vector<BigInt> phi);

  int n() const { return n_; }
  int half() const { return n_ / 2; }
  std::size_t size() const { return phi_.size(); }
  const BigInt& operator[](std::size_t i) const { return phi_[i]; }
  std::span<const BigInt> values() const { return phi_; }

  static MomentProfile of(const FixedPointData& data);

 private:
  int n_;
  std::vector<BigInt> phi_;
};

struct SignedProducts {
  BigInt minus;  // product of the negative weights
  BigInt plus;   // product of the positive weights

  friend bool operator==(const SignedProducts&, const SignedProducts&) = default;
};

/// Weight products at every fixed point forced by the moment values. Throws
/// DegenerateProfile on a vanishing denominator and InconsistentProfile when
/// a forced product is not an integer.
std::vector<SignedProducts> predicted_products(const MomentProfile& profile);

/// Every weight assignment with |w| <= weight_bound satisfying the search
/// constraints and passing validate(), in lexicographic order.
std::vector<FixedPointData> enumerate_candidates(const MomentProfile& profile,
                                                 const BigInt& weight_bound);

/// phi_{n+1} - phi_0.
BigInt default_weight_bound(const MomentProfile& profile);

/// phi(P_i) - phi(P_{n/2}) == phi(P_{n/2+1}) - phi(P_{n+1-i}) for i < n/2.
bool check_symmetry(const MomentProfile& profile);

/// Whether the data carries weights {phi_j - phi_i : j != i, n+1-i}.
bool has_standard_weights(const FixedPointData& data);

struct ClassificationVerdict {
  std::vector<FixedPointData> candidates;
  bool is_unique_standard = false;
};

ClassificationVerdict classify(const MomentProfile& profile, const BigInt& weight_bound);

}  // namespace g2fp
