#pragma once

// Exact scalars. BigInt and BigRational are the GMP C++ classes; mpq_class
// keeps every arithmetic result in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2fp/error.hpp"

namespace g2fp {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds num/den in canonical form. Throws MalformedScalar if den == 0.
BigRational rat_normalize(const BigInt& num, const BigInt& den);

/// Parses an optionally signed decimal integer. Throws MalformedScalar.
BigInt parse_bigint(std::string_view text);

std::string to_string(const BigInt& v);
/// "p" when integral, "p/q" otherwise.
std::string to_string(const BigRational& v);

bool is_integer(const BigRational& v);
/// Numerator of an integral rational. Throws IntegralityViolation otherwise.
BigInt to_integer(const BigRational& v);

/// `a` divides `b` (b may be zero). `a` must be nonzero.
bool divides(const BigInt& a, const BigInt& b);

/// coeff * t^degree, with the zero monomial pinned to degree 0.
class TMonomial {
 public:
  TMonomial() = default;
  TMonomial(BigRational coeff, unsigned degree);

  const BigRational& coeff() const { return coeff_; }
  unsigned degree() const { return degree_; }
  bool is_zero() const { return sgn(coeff_) == 0; }

  friend bool operator==(const TMonomial& a, const TMonomial& b) {
    return a.degree_ == b.degree_ && a.coeff_ == b.coeff_;
  }

 private:
  BigRational coeff_{0};
  unsigned degree_ = 0;
};

TMonomial mono_mul(const TMonomial& a, const TMonomial& b);

std::string to_string(const TMonomial& m);

using RationalMatrix = std::vector<std::vector<BigRational>>;

/// Determinant by Gaussian elimination over the rationals.
BigRational determinant(RationalMatrix m);

/// Unique solution of A x = b for square nonsingular A, nullopt if singular.
std::optional<std::vector<BigRational>> solve_linear(RationalMatrix a,
                                                     std::vector<BigRational> b);

}  // namespace g2fp
