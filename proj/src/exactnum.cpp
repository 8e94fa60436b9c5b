#include "g2fp/exactnum.hpp"

#include <cctype>
#include <utility>

namespace g2fp {

BigRational rat_normalize(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw MalformedScalar("zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigInt parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size()) {
    throw MalformedScalar("not a decimal integer: '" + std::string(text) + "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw MalformedScalar("not a decimal integer: '" + std::string(text) + "'");
    }
  }
  // mpz_set_str rejects a leading '+'.
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  BigInt v;
  if (v.set_str(digits, 10) != 0) {
    throw MalformedScalar("not a decimal integer: '" + std::string(text) + "'");
  }
  return v;
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

std::string to_string(const BigRational& v) {
  if (is_integer(v)) return v.get_num().get_str(10);
  return v.get_str(10);
}

bool is_integer(const BigRational& v) { return v.get_den() == 1; }

BigInt to_integer(const BigRational& v) {
  if (!is_integer(v)) throw IntegralityViolation("non-integral value " + to_string(v));
  return v.get_num();
}

bool divides(const BigInt& a, const BigInt& b) {
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

TMonomial::TMonomial(BigRational coeff, unsigned degree)
    : coeff_(std::move(coeff)), degree_(sgn(coeff_) == 0 ? 0 : degree) {}

TMonomial mono_mul(const TMonomial& a, const TMonomial& b) {
  return TMonomial(BigRational(a.coeff() * b.coeff()), a.degree() + b.degree());
}

std::string to_string(const TMonomial& m) {
  if (m.is_zero()) return "0";
  std::string c = to_string(m.coeff());
  if (m.degree() == 0) return c;
  std::string t = m.degree() == 1 ? "t" : "t^" + std::to_string(m.degree());
  if (m.coeff() == 1) return t;
  if (m.coeff() == -1) return "-" + t;
  return c + "*" + t;
}

BigRational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  BigRational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      BigRational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::optional<std::vector<BigRational>> solve_linear(RationalMatrix a,
                                                     std::vector<BigRational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      BigRational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<BigRational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace g2fp
