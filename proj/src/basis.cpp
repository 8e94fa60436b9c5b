#include "g2fp/basis.hpp"

namespace g2fp {

unsigned basis_degree(int n, std::size_t i) {
  const std::size_t half = static_cast<std::size_t>(n / 2);
  return static_cast<unsigned>(i <= half ? i : i - 1);
}

EquivClass BasisRestrictions::row_class(std::size_t i) const {
  EquivClass c{row_degree(i), {}};
  for (const TMonomial& m : rows[i]) c.coeffs.push_back(m.coeff());
  return c;
}

namespace {

void require_distinct_gamma(const std::vector<PointInvariants>& inv, std::size_t lo,
                            std::size_t hi) {
  for (std::size_t a = lo; a < hi; ++a) {
    for (std::size_t b = a + 1; b < hi; ++b) {
      if (inv[a].gamma == inv[b].gamma) {
        throw DegenerateGamma("Gamma_" + std::to_string(a) + " = Gamma_" + std::to_string(b) +
                              " = " + to_string(inv[a].gamma));
      }
    }
  }
}

}  // namespace

BasisRestrictions build_basis(const FixedPointData& data) {
  const std::size_t count = data.size();
  const std::size_t half = static_cast<std::size_t>(data.half());
  std::vector<PointInvariants> inv;
  for (std::size_t i = 0; i < count; ++i) inv.push_back(point_invariants(data, i));
  require_distinct_gamma(inv, 0, half + 1);
  require_distinct_gamma(inv, half + 1, count);

  BasisRestrictions basis;
  basis.n = data.n();
  basis.rows.assign(count, std::vector<TMonomial>(count));

  for (std::size_t i = 0; i < count; ++i) {
    const unsigned deg = basis.row_degree(i);
    auto& row = basis.rows[i];
    row[i] = TMonomial(BigRational(inv[i].lambda_minus), deg);
    for (std::size_t k = i + 1; k < count; ++k) {
      BigRational value;
      if (i <= half) {
        // Restriction of Lambda_i^- prod_{j<i} (c_1 - Gamma_j t) / (Gamma_i - Gamma_j).
        value = inv[i].lambda_minus;
        for (std::size_t j = 0; j < i; ++j) {
          value *= BigRational(inv[k].gamma - inv[j].gamma) /
                   BigRational(inv[i].gamma - inv[j].gamma);
        }
      } else {
        // alpha_i * prod_{j>i, j!=k} (c_1 - Gamma_j t) has degree below 2n and
        // is supported on {P_i, P_k}; its vanishing integral fixes alpha_i|P_k.
        value = -BigRational(inv[k].lambda_full) / BigRational(inv[i].lambda_plus);
        for (std::size_t j = i + 1; j < count; ++j) {
          if (j == k) continue;
          value *= BigRational(inv[i].gamma - inv[j].gamma) /
                   BigRational(inv[k].gamma - inv[j].gamma);
        }
      }
      row[k] = TMonomial(std::move(value), deg);
    }
  }
  return basis;
}

BasisExpansion express_in_basis(const FixedPointData& data, const BasisRestrictions& basis,
                                const EquivClass& cls) {
  const std::size_t count = data.size();
  if (basis.rows.size() != count || cls.coeffs.size() != count) {
    throw MalformedData("basis, class and data disagree on the number of fixed points");
  }
  const unsigned d = cls.degree_half;
  BasisExpansion out;
  out.terms.assign(count, TMonomial());
  std::vector<BigRational> c(count, BigRational(0));

  // Points are visited in moment order; at the middle tie row n/2 is solved
  // before row n/2 + 1, which restricts to zero at P_{n/2}.
  for (std::size_t k = 0; k < count; ++k) {
    BigRational residual = cls.coeffs[k];
    for (std::size_t i = 0; i < k; ++i) residual -= c[i] * basis.rows[i][k].coeff();
    const unsigned deg = basis.row_degree(k);
    if (deg > d) {
      if (sgn(residual) != 0) {
        throw InconsistentExpansion("degree-" + std::to_string(2 * d) +
                                    " class leaves residual " + to_string(residual) + " at P" +
                                    std::to_string(k));
      }
      continue;
    }
    const BigRational& diag = basis.rows[k][k].coeff();
    if (sgn(diag) == 0) throw InconsistentExpansion("zero diagonal at P" + std::to_string(k));
    c[k] = residual / diag;
    out.terms[k] = TMonomial(c[k], d - deg);
    if (!is_integer(c[k])) out.integral = false;
  }
  return out;
}

}  // namespace g2fp
