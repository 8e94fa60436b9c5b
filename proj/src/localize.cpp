#include "g2fp/localize.hpp"

#include "g2fp/basis.hpp"

namespace g2fp {

EquivClass unit_class(std::size_t points) {
  return EquivClass{0, std::vector<BigRational>(points, BigRational(1))};
}

EquivClass product(const EquivClass& a, const EquivClass& b) {
  if (a.coeffs.size() != b.coeffs.size()) {
    throw MalformedData("classes restrict to different numbers of fixed points");
  }
  EquivClass out{a.degree_half + b.degree_half, {}};
  out.coeffs.reserve(a.coeffs.size());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs.emplace_back(a.coeffs[i] * b.coeffs[i]);
  return out;
}

EquivClass power(const EquivClass& a, unsigned exponent) {
  EquivClass out = unit_class(a.coeffs.size());
  for (unsigned k = 0; k < exponent; ++k) out = product(out, a);
  return out;
}

EquivClass build_u_tilde(const FixedPointData& data) {
  EquivClass u{1, {}};
  for (const auto& p : data.points()) u.coeffs.emplace_back(data[0].phi - p.phi);
  return u;
}

EquivClass chern_restriction(const FixedPointData& data, int i) {
  if (i < 1 || i > data.n()) {
    throw IndexOutOfRange("Chern class index " + std::to_string(i) + " out of range 1.." +
                          std::to_string(data.n()));
  }
  EquivClass c{static_cast<unsigned>(i), {}};
  for (const auto& p : data.points()) {
    // sigma[k] = e_k of the weights seen so far.
    std::vector<BigInt> sigma(static_cast<std::size_t>(i) + 1, BigInt(0));
    sigma[0] = 1;
    for (const BigInt& w : p.weights) {
      for (std::size_t k = sigma.size() - 1; k >= 1; --k) sigma[k] += w * sigma[k - 1];
    }
    c.coeffs.emplace_back(sigma.back());
  }
  return c;
}

TMonomial integrate(const FixedPointData& data, const EquivClass& cls) {
  if (cls.coeffs.size() != data.size()) {
    throw MalformedData("class has " + std::to_string(cls.coeffs.size()) +
                        " restrictions for " + std::to_string(data.size()) + " fixed points");
  }
  BigRational sum = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    BigInt euler = point_invariants(data, i).lambda_full;
    if (sgn(euler) == 0) throw NotAManifold("zero weight at P" + std::to_string(i));
    sum += cls.coeffs[i] / BigRational(euler);
  }
  const unsigned n = static_cast<unsigned>(data.n());
  if (cls.degree_half < n) {
    if (sgn(sum) != 0) {
      throw NotAManifold("localization of a degree-" + std::to_string(2 * cls.degree_half) +
                         " class sums to " + to_string(sum) + " instead of 0");
    }
    return TMonomial();
  }
  return TMonomial(sum, cls.degree_half - n);
}

BigRational chern_number(const FixedPointData& data, std::span<const int> partition) {
  int total = 0;
  for (int part : partition) {
    if (part < 1 || part > data.n()) {
      throw IndexOutOfRange("partition part " + std::to_string(part) + " out of range");
    }
    total += part;
  }
  if (total != data.n()) {
    throw IndexOutOfRange("partition sums to " + std::to_string(total) + ", expected " +
                          std::to_string(data.n()));
  }
  EquivClass cls = unit_class(data.size());
  for (int part : partition) cls = product(cls, chern_restriction(data, part));
  return integrate(data, cls).coeff();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

IntMatrix pairing_matrix(const FixedPointData& data, const BasisRestrictions& basis) {
  const std::size_t rows = basis.rows.size();
  const unsigned n = static_cast<unsigned>(data.n());
  IntMatrix m(rows, std::vector<BigInt>(rows, BigInt(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = i; j < rows; ++j) {
      if (basis.row_degree(i) + basis.row_degree(j) != n) continue;
      TMonomial v = integrate(data, product(basis.row_class(i), basis.row_class(j)));
      m[i][j] = m[j][i] = to_integer(v.coeff());
    }
  }
  return m;
}

}  // namespace g2fp
