#include "g2fp/solver.hpp"

#include <algorithm>
#include <map>

#include "g2fp/localize.hpp"

namespace g2fp {

MomentProfile::MomentProfile(int n, std::vector<BigInt> phi) : n_(n), phi_(std::move(phi)) {
  if (n_ < 2 || n_ % 2 != 0) throw InvalidProfile("n must be even and >= 2");
  if (phi_.size() != static_cast<std::size_t>(n_) + 2) {
    throw InvalidProfile("expected " + std::to_string(n_ + 2) + " moment values, got " +
                         std::to_string(phi_.size()));
  }
  const std::size_t m = static_cast<std::size_t>(half());
  for (std::size_t i = 0; i + 1 < phi_.size(); ++i) {
    const int c = cmp(phi_[i], phi_[i + 1]);
    if (c > 0 || (c == 0 && i != m)) {
      throw InvalidProfile("moment values out of order at position " + std::to_string(i));
    }
  }
}

MomentProfile MomentProfile::of(const FixedPointData& data) {
  std::vector<BigInt> phi;
  for (const auto& p : data.points()) phi.push_back(p.phi);
  return MomentProfile(data.n(), std::move(phi));
}

namespace {

BigInt exact_quotient(const BigInt& num, const BigInt& den, std::size_t i, const char* which) {
  if (sgn(den) == 0) {
    throw DegenerateProfile(std::string(which) + " at P" + std::to_string(i) +
                            " has a vanishing denominator");
  }
  if (!divides(den, num)) {
    throw InconsistentProfile(std::string(which) + " at P" + std::to_string(i) + " would be " +
                              to_string(rat_normalize(num, den)));
  }
  return BigInt(num / den);
}

}  // namespace

std::vector<SignedProducts> predicted_products(const MomentProfile& profile) {
  const std::size_t count = profile.size();
  const std::size_t m = static_cast<std::size_t>(profile.half());
  const auto& phi = profile;
  std::vector<SignedProducts> out(count, SignedProducts{1, 1});

  auto below = [&](std::size_t i, std::size_t limit) {
    BigInt p = 1;
    for (std::size_t j = 0; j < limit; ++j) p *= phi[j] - phi[i];
    return p;
  };
  auto above = [&](std::size_t i, std::size_t from) {
    BigInt p = 1;
    for (std::size_t j = from; j < count; ++j) p *= phi[j] - phi[i];
    return p;
  };
  auto middle_sum = [&](std::size_t i) {
    return BigInt((phi[m] - phi[i]) + (phi[m + 1] - phi[i]));
  };

  // Negative products.
  for (std::size_t i = 0; i <= m; ++i) out[i].minus = below(i, i);
  out[m + 1].minus = below(m + 1, m);
  for (std::size_t i = m + 2; i < count; ++i) {
    if (profile.n() == 2) {
      // Four points: the top point sees exactly P_1 and P_2 below it.
      out[i].minus = (phi[1] - phi[i]) * (phi[2] - phi[i]);
    } else {
      out[i].minus = exact_quotient(below(i, i), middle_sum(i), i, "negative product");
    }
  }

  // Positive products, mirrored.
  for (std::size_t i = m + 1; i < count; ++i) out[i].plus = above(i, i + 1);
  out[m].plus = above(m, m + 2);
  for (std::size_t i = 0; i + 1 <= m; ++i) {
    if (profile.n() == 2) {
      out[i].plus = (phi[1] - phi[i]) * (phi[2] - phi[i]);
    } else {
      out[i].plus = exact_quotient(above(i, i + 1), middle_sum(i), i, "positive product");
    }
  }
  return out;
}

BigInt default_weight_bound(const MomentProfile& profile) {
  return profile[profile.size() - 1] - profile[0];
}

bool check_symmetry(const MomentProfile& profile) {
  const std::size_t m = static_cast<std::size_t>(profile.half());
  const std::size_t last = profile.size() - 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (profile[i] - profile[m] != profile[m + 1] - profile[last - i]) return false;
  }
  return true;
}

bool has_standard_weights(const FixedPointData& data) {
  MomentProfile profile = MomentProfile::of(data);
  auto expected = standard_weights(profile.values());
  for (std::size_t i = 0; i < data.size(); ++i) {
    auto got = data[i].weights;
    std::sort(got.begin(), got.end());
    if (got != expected[i]) return false;
  }
  return true;
}

namespace {

// w at P_i must divide some moment gap phi_j - phi_i of its own sign.
bool weight_admissible(const MomentProfile& phi, std::size_t i, const BigInt& w) {
  for (std::size_t j = 0; j < phi.size(); ++j) {
    if (j == i) continue;
    BigInt gap = phi[j] - phi[i];
    if (sgn(gap) == sgn(w) && divides(w, gap)) return true;
  }
  return false;
}

// Nondecreasing factor lists (in absolute value) of `target` into `count`
// factors of magnitude <= bound, each admissible with sign `sign`.
void factorizations(const MomentProfile& phi, std::size_t i, int sign, const BigInt& target,
                    std::size_t count, const BigInt& min_factor, const BigInt& bound,
                    std::vector<BigInt>& cur, std::vector<std::vector<BigInt>>& out) {
  if (count == 0) {
    if (target == 1) out.push_back(cur);
    return;
  }
  for (BigInt f = min_factor; f <= bound && f <= target; ++f) {
    if (!divides(f, target)) continue;
    BigInt w = sign * f;
    if (!weight_admissible(phi, i, w)) continue;
    BigInt rest = target / f;
    // The remaining count - 1 factors are each >= f.
    if (count > 1 && rest < f) break;
    cur.push_back(w);
    factorizations(phi, i, sign, rest, count - 1, f, bound, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<BigInt>> signed_choices(const MomentProfile& phi, std::size_t i, int sign,
                                                const BigInt& product, std::size_t count,
                                                const BigInt& bound) {
  std::vector<std::vector<BigInt>> out;
  // The sign of a product of `count` weights of sign `sign` is forced.
  const int want = (sign < 0 && count % 2 == 1) ? -1 : 1;
  if (sgn(product) != want) return out;
  std::vector<BigInt> cur;
  factorizations(phi, i, sign, BigInt(abs(product)), count, BigInt(1), bound, cur, out);
  return out;
}

struct Search {
  const MomentProfile& profile;
  std::vector<std::vector<std::vector<BigInt>>> options;  // per point, sorted weight lists
  std::map<BigInt, long> balance;                         // count(v) - count(-v), v > 0
  long imbalance = 0;
  std::vector<std::vector<BigInt>> chosen;
  std::vector<FixedPointData> found;

  void adjust(const std::vector<BigInt>& ws, long dir) {
    for (const BigInt& w : ws) {
      BigInt key = abs(w);
      long& b = balance[key];
      imbalance -= std::labs(b);
      b += dir * sgn(w);
      imbalance += std::labs(b);
    }
  }

  void run(std::size_t i) {
    const std::size_t count = profile.size();
    const long remaining = static_cast<long>((count - i) * static_cast<std::size_t>(profile.n()));
    if (imbalance > remaining) return;
    if (i == count) {
      if (imbalance == 0) accept();
      return;
    }
    for (const auto& ws : options[i]) {
      adjust(ws, +1);
      chosen.push_back(ws);
      run(i + 1);
      chosen.pop_back();
      adjust(ws, -1);
    }
  }

  void accept() {
    std::vector<FixedPoint> points;
    for (std::size_t i = 0; i < profile.size(); ++i) points.push_back({profile[i], chosen[i]});
    FixedPointData data(profile.n(), std::move(points));
    if (!validate(data).passed()) return;
    const EquivClass u = build_u_tilde(data);
    try {
      for (int a = 0; a < profile.n(); ++a) integrate(data, power(u, static_cast<unsigned>(a)));
    } catch (const NotAManifold&) {
      return;
    }
    found.push_back(std::move(data));
  }
};

}  // namespace

std::vector<FixedPointData> enumerate_candidates(const MomentProfile& profile,
                                                 const BigInt& weight_bound) {
  std::vector<SignedProducts> products;
  try {
    products = predicted_products(profile);
  } catch (const DegenerateProfile&) {
    return {};
  } catch (const InconsistentProfile&) {
    return {};
  }

  Search search{profile, {}, {}, 0, {}, {}};
  const std::size_t n = static_cast<std::size_t>(profile.n());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const std::size_t neg = expected_negative_count(profile.n(), i);
    auto negs = signed_choices(profile, i, -1, products[i].minus, neg, weight_bound);
    auto poss = signed_choices(profile, i, +1, products[i].plus, n - neg, weight_bound);
    std::vector<std::vector<BigInt>> opts;
    for (const auto& a : negs) {
      for (const auto& b : poss) {
        std::vector<BigInt> ws = a;
        ws.insert(ws.end(), b.begin(), b.end());
        std::sort(ws.begin(), ws.end());
        opts.push_back(std::move(ws));
      }
    }
    std::sort(opts.begin(), opts.end());
    if (opts.empty()) return {};
    search.options.push_back(std::move(opts));
  }
  search.run(0);

  std::sort(search.found.begin(), search.found.end(),
            [](const FixedPointData& a, const FixedPointData& b) {
              return std::lexicographical_compare(
                  a.points().begin(), a.points().end(), b.points().begin(), b.points().end(),
                  [](const FixedPoint& p, const FixedPoint& q) { return p.weights < q.weights; });
            });
  return search.found;
}

ClassificationVerdict classify(const MomentProfile& profile, const BigInt& weight_bound) {
  ClassificationVerdict v;
  v.candidates = enumerate_candidates(profile, weight_bound);
  v.is_unique_standard = v.candidates.size() == 1 && has_standard_weights(v.candidates.front());
  return v;
}

}  // namespace g2fp
