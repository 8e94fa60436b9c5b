#pragma once

// Fixed-point data of a Hamiltonian circle action with isolated fixed points:
// moment values and weight multisets, the standard oriented-Grassmannian
// generator, and the necessary-condition validator.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "g2fp/exactnum.hpp"

namespace g2fp {

struct FixedPoint {
  BigInt phi;
  std::vector<BigInt> weights;

  /// Number of negative weights; the Morse index is twice this.
  std::size_t negative_count() const;
  std::size_t positive_count() const;

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

/// n plus n+2 fixed points in moment order. The constructor only checks the
/// shape (point and weight counts); everything else is left to validate().
class FixedPointData {
 public:
  FixedPointData(int n, std::vector<FixedPoint> points);

  int n() const { return n_; }
  int half() const { return n_ / 2; }
  std::size_t size() const { return points_.size(); }
  const FixedPoint& operator[](std::size_t i) const { return points_[i]; }
  std::span<const FixedPoint> points() const { return points_; }

  friend bool operator==(const FixedPointData&, const FixedPointData&) = default;

 private:
  int n_;
  std::vector<FixedPoint> points_;
};

/// Negative-weight count forced at position i: i below the middle pair,
/// i - 1 from position n/2 + 1 on.
std::size_t expected_negative_count(int n, std::size_t i);

struct PointInvariants {
  BigInt gamma;         // sum of weights
  BigInt lambda_full;   // product of weights
  BigInt lambda_minus;  // product of negative weights
  BigInt lambda_plus;   // product of positive weights
};

PointInvariants point_invariants(const FixedPointData& data, std::size_t i);

/// Weights {phi_j - phi_i : j != i, n+1-i} at every point for a moment
/// profile of n+2 values.
std::vector<std::vector<BigInt>> standard_weights(std::span<const BigInt> phi);

/// Fixed-point data of the circle action on the Grassmannian of oriented
/// 2-planes in R^{n+2} rotating the k-th coordinate plane with speed b[k].
/// The |b[k]| must be distinct, otherwise some fixed point carries a zero
/// weight. Throws InvalidGenerator.
FixedPointData make_standard_g2(std::span<const BigInt> b);

struct ValidationEntry {
  std::string name;
  bool pass;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationEntry> entries;

  bool passed() const;
  /// nullptr if no entry carries that name.
  const ValidationEntry* find(std::string_view name) const;
};

namespace check {
inline constexpr std::string_view kEvenDimension = "even-dimension";
inline constexpr std::string_view kNonzeroWeights = "nonzero-weights";
inline constexpr std::string_view kMomentOrder = "moment-order";
inline constexpr std::string_view kMorseIndexPattern = "morse-index-pattern";
inline constexpr std::string_view kNegationClosure = "negation-closure";
inline constexpr std::string_view kIndexBound = "index-bound";
inline constexpr std::string_view kIsotropyDivisibility = "isotropy-divisibility";
inline constexpr std::string_view kLocalizationOfOne = "localization-of-one";
}  // namespace check

/// Runs every necessary condition and reports each one; never throws.
ValidationReport validate(const FixedPointData& data);

std::string format_weights(std::span<const BigInt> weights);

}  // namespace g2fp
