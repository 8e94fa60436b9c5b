#pragma once
// Shared helpers and independent oracles for the test binaries.
#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "g2fp/exactnum.hpp"
#include "g2fp/fpdata.hpp"

namespace g2fp::testing {

inline std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline FixedPointData standard(std::initializer_list<long> b) {
  const auto v = ints(b);
  return make_standard_g2(v);
}

/// count distinct nonzero speeds with magnitude <= limit, random signs.
inline std::vector<BigInt> random_speeds(std::mt19937_64& rng, int count, long limit) {
  std::uniform_int_distribution<long> mag(1, limit);
  std::bernoulli_distribution neg(0.5);
  std::set<long> used;
  std::vector<BigInt> out;
  while (static_cast<int>(out.size()) < count) {
    long m = mag(rng);
    if (!used.insert(m).second) continue;
    out.emplace_back(neg(rng) ? -m : m);
  }
  return out;
}

/// Tangent weights of the Grassmannian read off plane by plane: at the
/// oriented plane k with orientation s the moment value is s|b_k| and the
/// weights are +-|b_j| - s|b_k| for every other plane j. Returned in moment
/// order with sorted weights.
inline std::vector<FixedPoint> grassmannian_points(const std::vector<BigInt>& b) {
  std::vector<FixedPoint> pts;
  for (std::size_t k = 0; k < b.size(); ++k) {
    for (int s : {-1, 1}) {
      FixedPoint p;
      const BigInt bk = abs(b[k]);
      p.phi = s * bk;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (j == k) continue;
        const BigInt bj = abs(b[j]);
        p.weights.push_back(bj - s * bk);
        p.weights.push_back(-bj - s * bk);
      }
      std::sort(p.weights.begin(), p.weights.end());
      pts.push_back(std::move(p));
    }
  }
  std::sort(pts.begin(), pts.end(), [](const FixedPoint& a, const FixedPoint& c) { return a.phi < c.phi; });
  return pts;
}

/// Elementary symmetric polynomial by enumerating subsets.
inline BigInt esym_bruteforce(const std::vector<BigInt>& w, int i) {
  BigInt total = 0;
  const std::uint64_t limit = std::uint64_t{1} << w.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != i) continue;
    BigInt prod = 1;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (mask >> k & 1) prod *= w[k];
    }
    total += prod;
  }
  return total;
}

/// Coefficient of x^i in (1+x)^{n+2} / (1+2x).
inline BigInt standard_chern_coefficient(int n, int i) {
  BigInt total = 0;
  BigInt pow2 = 1;
  for (int j = 0; j <= i; ++j) {
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n + 2), static_cast<unsigned long>(i - j));
    total += pow2 * binom;
    pow2 *= -2;
  }
  return total;
}

}  // namespace g2fp::testing

namespace g2fp::testing {

/// One random modification of the data; the result differs from the input.
inline FixedPointData tamper(const FixedPointData& d, std::mt19937_64& rng, int* kind_out = nullptr) {
  std::vector<FixedPoint> pts(d.points().begin(), d.points().end());
  std::uniform_int_distribution<std::size_t> point(0, pts.size() - 1);
  std::uniform_int_distribution<std::size_t> slot(0, static_cast<std::size_t>(d.n()) - 1);
  std::uniform_int_distribution<long> delta(1, 3);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> kind(0, 4);
  for (;;) {
    const int k = kind(rng);
    const std::size_t i = point(rng), j = point(rng);
    const std::size_t s = slot(rng), t = slot(rng);
    const long step = coin(rng) ? delta(rng) : -delta(rng);
    switch (k) {
      case 0:  // perturb one weight
        pts[i].weights[s] += step;
        break;
      case 1:  // flip the sign of one weight
        pts[i].weights[s] = -pts[i].weights[s];
        break;
      case 2:  // exchange one weight between two points
        if (i == j || pts[i].weights[s] == pts[j].weights[t]) continue;
        std::swap(pts[i].weights[s], pts[j].weights[t]);
        break;
      case 3:  // move one moment value
        pts[i].phi += step;
        break;
      default:  // exchange whole weight sets
        if (pts[i].weights == pts[j].weights) continue;
        std::swap(pts[i].weights, pts[j].weights);
        break;
    }
    for (auto& p : pts) std::sort(p.weights.begin(), p.weights.end());
    if (kind_out) *kind_out = k;
    return FixedPointData(d.n(), std::move(pts));
  }
}

}  // namespace g2fp::testing
