#pragma once

// Integral cohomology ring of the oriented Grassmannian of 2-planes in
// R^{n+2}, n even, on the graded basis
//
//   1, x, ..., x^{n/2-1}   (degrees 0 .. n-2)
//   y, z                   (degree n)
//   g_k = x^k y, 1<=k<=n/2 (degree n + 2k)
//
// with x^{n/2} = y + z, x y = x z, and either y^2 = z^2 = 0, yz = g_{n/2}
// (n = 2 mod 4) or y^2 = z^2 = g_{n/2}, yz = 0 (n = 0 mod 4).
//
// Label index j has the same degree as basis class alpha_j, which is what
// identify_ring() uses to compare the ring with one computed from fixed-point
// data.

#include <cstddef>
#include <string>
#include <vector>

#include "g2fp/basis.hpp"
#include "g2fp/exactnum.hpp"
#include "g2fp/fpdata.hpp"
#include "g2fp/localize.hpp"

namespace g2fp {

struct RingElement {
  int n = 0;
  std::vector<BigInt> coeffs;

  friend bool operator==(const RingElement&, const RingElement&) = default;
};

class RingTable {
 public:
  int n() const { return n_; }
  int half() const { return n_ / 2; }
  std::size_t rank() const { return static_cast<std::size_t>(n_) + 2; }

  const std::string& label(std::size_t i) const { return labels_[i]; }
  /// Half-degree of basis label i.
  unsigned degree(std::size_t i) const { return basis_degree(n_, i); }

  std::size_t unit() const { return 0; }
  /// 1 <= k <= n/2 - 1.
  std::size_t x_power(int k) const { return static_cast<std::size_t>(k); }
  std::size_t y() const { return static_cast<std::size_t>(half()); }
  std::size_t z() const { return static_cast<std::size_t>(half()) + 1; }
  /// 1 <= k <= n/2.
  std::size_t g(int k) const { return static_cast<std::size_t>(half() + 1 + k); }

  const RingElement& product(std::size_t a, std::size_t b) const { return table_[a][b]; }

  RingElement zero() const;
  RingElement basis_element(std::size_t i) const;

 private:
  friend RingTable ring_make(int n);
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<RingElement>> table_;
};

/// Throws InvalidRingDimension unless n >= 2 is even.
RingTable ring_make(int n);

/// Throws MismatchedTables if an operand belongs to a different n.
RingElement ring_mul(const RingTable& table, const RingElement& a, const RingElement& b);
RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_scale(const BigInt& s, const RingElement& a);

/// x^k written in the label basis (x^{n/2} = y + z, x^{n/2+k} = 2 g_k).
RingElement x_power_element(const RingTable& table, int k);

/// Coefficient of the top class g_{n/2} in a*b.
BigInt ring_pairing(const RingTable& table, const RingElement& a, const RingElement& b);

std::string format(const RingTable& table, const RingElement& e);

/// Ranks of H^0, H^2, ..., H^{2n}. Throws InvalidRingDimension.
std::vector<int> betti(int n);

/// Ordinary cohomology ring read off the equivariant basis: the image of
/// alpha_i alpha_j with t set to zero, in the basis of images of alpha_k.
struct DataRing {
  int n = 0;
  /// structure[i][j][k]: coefficient of alpha_k in alpha_i alpha_j.
  std::vector<std::vector<std::vector<BigInt>>> structure;

  std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b) const;
};

/// Throws IntegralityViolation if a structure constant is not an integer.
DataRing ordinary_ring(const FixedPointData& data, const BasisRestrictions& basis);

/// A ring isomorphism between the label basis and the images of the alpha_j.
struct RingIdentification {
  /// images[l]: coordinates of label l over the alpha_j.
  IntMatrix images;
  /// inverse[j]: coordinates of alpha_j over the labels.
  IntMatrix inverse;
};

/// x goes to the class of alpha_1 (the symplectic class); y and z are the two
/// integral solutions in degree n of <y, x^{n/2}> = 1 together with the
/// parity relation on <y, y>. Of the two (related by y <-> z) the one with
/// the larger alpha_{n/2} coordinate is taken as y. Throws RingMismatch if no
/// unimodular ring isomorphism exists.
RingIdentification identify_ring(const FixedPointData& data, const BasisRestrictions& basis,
                                 const RingTable& table);

/// c_1(M) .. c_n(M) in the label basis. Throws IntegralityViolation if an
/// equivariant Chern class has a non-integral basis expansion.
std::vector<RingElement> ordinary_chern(const FixedPointData& data,
                                        const BasisRestrictions& basis,
                                        const RingTable& table);

}  // namespace g2fp
