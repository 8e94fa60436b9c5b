#include "g2fp/gring.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace g2fp {

RingElement RingTable::zero() const { return RingElement{n_, std::vector<BigInt>(rank(), BigInt(0))}; }

RingElement RingTable::basis_element(std::size_t i) const {
  RingElement e = zero();
  e.coeffs.at(i) = 1;
  return e;
}

RingTable ring_make(int n) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidRingDimension("ring needs even n >= 2, got " + std::to_string(n));
  }
  RingTable t;
  t.n_ = n;
  const int m = n / 2;
  t.labels_.push_back("1");
  for (int k = 1; k < m; ++k) t.labels_.push_back(k == 1 ? "x" : "x^" + std::to_string(k));
  t.labels_.push_back("y");
  t.labels_.push_back("z");
  for (int k = 1; k <= m; ++k) t.labels_.push_back("g_" + std::to_string(k));

  const std::size_t r = t.rank();
  const bool y_squared_top = n % 4 == 0;
  t.table_.assign(r, std::vector<RingElement>(r, t.zero()));

  // x-exponent of a label: k for x^k, -1 for y, z, g_k.
  auto x_exp = [&](std::size_t i) -> int {
    return i < static_cast<std::size_t>(m) ? static_cast<int>(i) : -1;
  };
  auto g_index = [&](std::size_t i) -> int {
    return i > t.z() ? static_cast<int>(i - t.z()) : 0;
  };

  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      RingElement& out = t.table_[a][b];
      const int xa = x_exp(a), xb = x_exp(b);
      if (xa >= 0 && xb >= 0) {
        int k = xa + xb;
        if (k < m) {
          out.coeffs[static_cast<std::size_t>(k)] += 1;
        } else if (k == m) {
          out.coeffs[t.y()] += 1;
          out.coeffs[t.z()] += 1;
        } else {
          out.coeffs[t.g(k - m)] += 2;
        }
        continue;
      }
      if (xa >= 0 || xb >= 0) {
        // x^k times one of y, z, g_j.
        const int k = xa >= 0 ? xa : xb;
        const std::size_t other = xa >= 0 ? b : a;
        const int j = (other == t.y() || other == t.z()) ? 0 : g_index(other);
        if (k == 0) {
          out.coeffs[other] += 1;
        } else if (j + k <= m) {
          out.coeffs[t.g(j + k)] += 1;
        }
        continue;
      }
      // Both factors in degree >= n: only the middle-degree products survive.
      const bool a_mid = a == t.y() || a == t.z();
      const bool b_mid = b == t.y() || b == t.z();
      if (!a_mid || !b_mid) continue;
      const bool same = a == b;
      if (same == y_squared_top) out.coeffs[t.g(m)] += 1;
    }
  }
  return t;
}

namespace {

void require_same(const RingTable& table, const RingElement& e) {
  if (e.n != table.n() || e.coeffs.size() != table.rank()) {
    throw MismatchedTables("ring element for n = " + std::to_string(e.n) +
                           " used with table for n = " + std::to_string(table.n()));
  }
}

}  // namespace

RingElement ring_mul(const RingTable& table, const RingElement& a, const RingElement& b) {
  require_same(table, a);
  require_same(table, b);
  RingElement out = table.zero();
  for (std::size_t i = 0; i < table.rank(); ++i) {
    if (sgn(a.coeffs[i]) == 0) continue;
    for (std::size_t j = 0; j < table.rank(); ++j) {
      if (sgn(b.coeffs[j]) == 0) continue;
      const BigInt s = a.coeffs[i] * b.coeffs[j];
      const RingElement& p = table.product(i, j);
      for (std::size_t k = 0; k < table.rank(); ++k) out.coeffs[k] += s * p.coeffs[k];
    }
  }
  return out;
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
  if (a.n != b.n || a.coeffs.size() != b.coeffs.size()) {
    throw MismatchedTables("adding ring elements of different tables");
  }
  RingElement out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

RingElement ring_scale(const BigInt& s, const RingElement& a) {
  RingElement out = a;
  for (auto& c : out.coeffs) c *= s;
  return out;
}

RingElement x_power_element(const RingTable& table, int k) {
  const int m = table.half();
  RingElement e = table.zero();
  if (k == 0) {
    e.coeffs[table.unit()] = 1;
  } else if (k < m) {
    e.coeffs[table.x_power(k)] = 1;
  } else if (k == m) {
    e.coeffs[table.y()] = 1;
    e.coeffs[table.z()] = 1;
  } else if (k <= table.n()) {
    e.coeffs[table.g(k - m)] = 2;
  }
  return e;
}

BigInt ring_pairing(const RingTable& table, const RingElement& a, const RingElement& b) {
  return ring_mul(table, a, b).coeffs[table.g(table.half())];
}

std::string format(const RingTable& table, const RingElement& e) {
  std::string s;
  for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
    const BigInt& c = e.coeffs[i];
    if (sgn(c) == 0) continue;
    const std::string& name = table.label(i);
    BigInt mag = abs(c);
    std::string term = (name == "1") ? to_string(mag) : (mag == 1 ? name : to_string(mag) + name);
    if (s.empty()) {
      s = (sgn(c) < 0 ? "-" : "") + term;
    } else {
      s += (sgn(c) < 0 ? " - " : " + ") + term;
    }
  }
  return s.empty() ? "0" : s;
}

std::vector<int> betti(int n) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidRingDimension("Betti numbers need even n >= 2, got " + std::to_string(n));
  }
  std::vector<int> ranks(static_cast<std::size_t>(n) + 1, 1);
  ranks[static_cast<std::size_t>(n / 2)] = 2;
  return ranks;
}

std::vector<BigInt> DataRing::multiply(const std::vector<BigInt>& a,
                                       const std::vector<BigInt>& b) const {
  const std::size_t r = structure.size();
  std::vector<BigInt> out(r, BigInt(0));
  for (std::size_t i = 0; i < r; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (sgn(b[j]) == 0) continue;
      const BigInt s = a[i] * b[j];
      for (std::size_t k = 0; k < r; ++k) out[k] += s * structure[i][j][k];
    }
  }
  return out;
}

DataRing ordinary_ring(const FixedPointData& data, const BasisRestrictions& basis) {
  const std::size_t r = data.size();
  const unsigned n = static_cast<unsigned>(data.n());
  DataRing ring;
  ring.n = data.n();
  ring.structure.assign(r, std::vector<std::vector<BigInt>>(r, std::vector<BigInt>(r, BigInt(0))));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      const unsigned d = basis.row_degree(i) + basis.row_degree(j);
      if (d > n) continue;
      BasisExpansion e =
          express_in_basis(data, basis, product(basis.row_class(i), basis.row_class(j)));
      for (std::size_t k = 0; k < r; ++k) {
        // Terms carrying a positive power of t vanish in ordinary cohomology.
        if (basis.row_degree(k) != d) continue;
        const BigRational& c = e.terms[k].coeff();
        if (!is_integer(c)) {
          throw IntegralityViolation("alpha_" + std::to_string(i) + " * alpha_" +
                                     std::to_string(j) + " has coefficient " + to_string(c) +
                                     " on alpha_" + std::to_string(k));
        }
        ring.structure[i][j][k] = ring.structure[j][i][k] = c.get_num();
      }
    }
  }
  return ring;
}

namespace {

std::optional<BigRational> rational_sqrt(const BigRational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const BigInt& num = q.get_num();
  const BigInt& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  return rat_normalize(sqrt(num), sqrt(den));
}

using Vec2 = std::pair<BigRational, BigRational>;

BigRational quad(const RationalMatrix& p, const Vec2& a, const Vec2& b) {
  return a.first * (p[0][0] * b.first + p[0][1] * b.second) +
         a.second * (p[1][0] * b.first + p[1][1] * b.second);
}

// Integral y in the middle degree with <y, X> = 1 and <y, y> = target.
std::vector<std::pair<BigInt, BigInt>> middle_solutions(const RationalMatrix& p, const Vec2& x,
                                                        const BigRational& target) {
  const BigRational l1 = p[0][0] * x.first + p[0][1] * x.second;
  const BigRational l2 = p[1][0] * x.first + p[1][1] * x.second;
  if (sgn(l1) == 0 && sgn(l2) == 0) throw RingMismatch("x^{n/2} pairs to zero with H^n");

  const Vec2 base = sgn(l1) != 0 ? Vec2{1 / l1, 0} : Vec2{0, 1 / l2};
  const Vec2 dir{-l2, l1};
  const BigRational qa = quad(p, dir, dir);
  const BigRational qb = 2 * quad(p, base, dir);
  const BigRational qc = quad(p, base, base) - target;

  std::vector<BigRational> roots;
  if (sgn(qa) == 0) {
    if (sgn(qb) == 0) throw RingMismatch("middle-degree pairing is degenerate");
    roots.push_back(-qc / qb);
  } else {
    auto r = rational_sqrt(qb * qb - 4 * qa * qc);
    if (!r) return {};
    roots.push_back((-qb + *r) / (2 * qa));
    roots.push_back((-qb - *r) / (2 * qa));
  }

  std::vector<std::pair<BigInt, BigInt>> out;
  for (const BigRational& s : roots) {
    BigRational u = base.first + s * dir.first;
    BigRational v = base.second + s * dir.second;
    if (is_integer(u) && is_integer(v)) out.emplace_back(u.get_num(), v.get_num());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<BigInt> unit_vector(std::size_t r, std::size_t i) {
  std::vector<BigInt> v(r, BigInt(0));
  v[i] = 1;
  return v;
}

}  // namespace

RingIdentification identify_ring(const FixedPointData& data, const BasisRestrictions& basis,
                                 const RingTable& table) {
  if (table.n() != data.n()) throw MismatchedTables("ring table and data differ in n");
  const std::size_t r = data.size();
  const int m = data.half();
  const std::size_t mid = static_cast<std::size_t>(m);
  const DataRing ring = ordinary_ring(data, basis);
  const IntMatrix pairing = pairing_matrix(data, basis);

  std::vector<std::vector<BigInt>> xpow(static_cast<std::size_t>(m) + 1);
  xpow[0] = unit_vector(r, 0);
  for (std::size_t k = 1; k <= mid; ++k) xpow[k] = ring.multiply(xpow[k - 1], unit_vector(r, 1));

  RationalMatrix p{{BigRational(pairing[mid][mid]), BigRational(pairing[mid][mid + 1])},
                   {BigRational(pairing[mid + 1][mid]), BigRational(pairing[mid + 1][mid + 1])}};
  const Vec2 xm{BigRational(xpow[mid][mid]), BigRational(xpow[mid][mid + 1])};
  const BigRational target = data.n() % 4 == 0 ? 1 : 0;
  auto sols = middle_solutions(p, xm, target);
  if (sols.empty()) throw RingMismatch("no integral class y with the required pairings");
  const auto [yu, yv] = sols.back();

  std::vector<BigInt> y(r, BigInt(0)), z = xpow[mid];
  y[mid] = yu;
  y[mid + 1] = yv;
  z[mid] -= yu;
  z[mid + 1] -= yv;

  RingIdentification id;
  id.images.assign(r, {});
  id.images[table.unit()] = xpow[0];
  for (int k = 1; k < m; ++k) id.images[table.x_power(k)] = xpow[static_cast<std::size_t>(k)];
  id.images[table.y()] = y;
  id.images[table.z()] = z;
  for (int k = 1; k <= m; ++k) id.images[table.g(k)] = ring.multiply(xpow[static_cast<std::size_t>(k)], y);

  // Columns of `images` are the labels; invert to get the alpha_j in labels.
  RationalMatrix a(r, std::vector<BigRational>(r));
  for (std::size_t l = 0; l < r; ++l) {
    for (std::size_t j = 0; j < r; ++j) a[j][l] = id.images[l][j];
  }
  const BigRational det = determinant(a);
  if (det != 1 && det != -1) {
    throw RingMismatch("label images span a sublattice of index " + to_string(abs(det)));
  }
  id.inverse.assign(r, std::vector<BigInt>(r, BigInt(0)));
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<BigRational> rhs(r, BigRational(0));
    rhs[j] = 1;
    auto sol = solve_linear(a, rhs);
    for (std::size_t l = 0; l < r; ++l) id.inverse[j][l] = to_integer((*sol)[l]);
  }

  auto image_of = [&](const RingElement& e) {
    std::vector<BigInt> v(r, BigInt(0));
    for (std::size_t l = 0; l < r; ++l) {
      for (std::size_t j = 0; j < r; ++j) v[j] += e.coeffs[l] * id.images[l][j];
    }
    return v;
  };
  for (std::size_t a1 = 0; a1 < r; ++a1) {
    for (std::size_t b1 = a1; b1 < r; ++b1) {
      if (image_of(table.product(a1, b1)) != ring.multiply(id.images[a1], id.images[b1])) {
        throw RingMismatch("product " + table.label(a1) + "*" + table.label(b1) +
                           " is not preserved");
      }
    }
  }
  return id;
}

std::vector<RingElement> ordinary_chern(const FixedPointData& data,
                                        const BasisRestrictions& basis,
                                        const RingTable& table) {
  std::vector<BasisExpansion> expansions;
  for (int i = 1; i <= data.n(); ++i) {
    expansions.push_back(express_in_basis(data, basis, chern_restriction(data, i)));
    if (!expansions.back().integral) {
      throw IntegralityViolation("c_" + std::to_string(i) +
                                 " has a non-integral basis expansion");
    }
  }
  const RingIdentification id = identify_ring(data, basis, table);
  std::vector<RingElement> out;
  for (int i = 1; i <= data.n(); ++i) {
    const BasisExpansion& e = expansions[static_cast<std::size_t>(i - 1)];
    RingElement c = table.zero();
    for (std::size_t j = 0; j < data.size(); ++j) {
      if (basis.row_degree(j) != static_cast<unsigned>(i)) continue;
      const BigInt coeff = e.terms[j].coeff().get_num();
      for (std::size_t l = 0; l < table.rank(); ++l) c.coeffs[l] += coeff * id.inverse[j][l];
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace g2fp
