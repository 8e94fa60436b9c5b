#pragma once

// The canonical basis alpha_0 .. alpha_{n+1} of equivariant cohomology as a
// module over H*(CP^infty), given by its restrictions to the fixed points.
//
// alpha_i vanishes at every P_k with k < i and restricts to Lambda_i^- t^deg
// at P_i, where deg = i up to the middle point and i - 1 after it. Entries
// below the diagonal of the restriction matrix are therefore zero and the
// expansion of any class is a forward substitution in moment order.

#include <cstddef>
#include <vector>

#include "g2fp/exactnum.hpp"
#include "g2fp/fpdata.hpp"
#include "g2fp/localize.hpp"

namespace g2fp {

/// Half-degree of alpha_i for dimension 2n.
unsigned basis_degree(int n, std::size_t i);

struct BasisRestrictions {
  int n = 0;
  /// rows[i][k] = alpha_i restricted to P_k.
  std::vector<std::vector<TMonomial>> rows;

  unsigned row_degree(std::size_t i) const { return basis_degree(n, i); }
  EquivClass row_class(std::size_t i) const;
};

/// Throws DegenerateGamma when two points in the same half share a weight sum.
BasisRestrictions build_basis(const FixedPointData& data);

struct BasisExpansion {
  /// terms[i] = c_i t^{d - deg alpha_i}; zero when deg alpha_i > d.
  std::vector<TMonomial> terms;
  bool integral = true;
};

/// Unique p_i with cls = sum_i p_i alpha_i. Throws InconsistentExpansion if
/// the restrictions do not come from a class in the span of the basis.
BasisExpansion express_in_basis(const FixedPointData& data, const BasisRestrictions& basis,
                                const EquivClass& cls);

}  // namespace g2fp
