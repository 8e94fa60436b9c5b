#pragma once

// Equivariant classes stored as their restrictions to the fixed points, and
// integration over the manifold by localization.

#include <cstddef>
#include <span>
#include <vector>

#include "g2fp/exactnum.hpp"
#include "g2fp/fpdata.hpp"

namespace g2fp {

struct BasisRestrictions;

/// Homogeneous class of cohomological degree 2*degree_half whose restriction
/// to P_i is coeffs[i] * t^degree_half.
struct EquivClass {
  unsigned degree_half = 0;
  std::vector<BigRational> coeffs;

  friend bool operator==(const EquivClass&, const EquivClass&) = default;
};

EquivClass unit_class(std::size_t points);

/// Pointwise product; degrees add.
EquivClass product(const EquivClass& a, const EquivClass& b);
EquivClass power(const EquivClass& a, unsigned exponent);

/// Equivariant extension of the symplectic class normalized to vanish at the
/// minimum: restriction phi(P_0) - phi(P_i) at P_i.
EquivClass build_u_tilde(const FixedPointData& data);

/// i-th elementary symmetric polynomial of the weights at every point.
EquivClass chern_restriction(const FixedPointData& data, int i);

/// Sum over fixed points of restriction / equivariant Euler class. Below the
/// top degree the sum must vanish (NotAManifold otherwise) and the zero
/// monomial is returned; otherwise the result has t-degree d - n.
TMonomial integrate(const FixedPointData& data, const EquivClass& cls);

/// Integral of the product of Chern classes c_{p_1} ... c_{p_k}. The parts
/// must be in 1..n and sum to n.
BigRational chern_number(const FixedPointData& data, std::span<const int> partition);

/// All partitions of n into parts >= 1, largest part first, in reverse
/// lexicographic order.
std::vector<std::vector<int>> partitions(int n);

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Poincare pairing of the basis classes: entry (i, j) integrates
/// alpha_i * alpha_j when the degrees are complementary, 0 otherwise.
IntMatrix pairing_matrix(const FixedPointData& data, const BasisRestrictions& basis);

}  // namespace g2fp
