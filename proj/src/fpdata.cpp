#include "g2fp/fpdata.hpp"

#include <algorithm>

namespace g2fp {

std::size_t FixedPoint::negative_count() const {
  return static_cast<std::size_t>(
      std::count_if(weights.begin(), weights.end(), [](const BigInt& w) { return sgn(w) < 0; }));
}

std::size_t FixedPoint::positive_count() const {
  return static_cast<std::size_t>(
      std::count_if(weights.begin(), weights.end(), [](const BigInt& w) { return sgn(w) > 0; }));
}

FixedPointData::FixedPointData(int n, std::vector<FixedPoint> points)
    : n_(n), points_(std::move(points)) {
  if (n_ < 1) throw MalformedData("n must be positive, got " + std::to_string(n_));
  if (points_.size() != static_cast<std::size_t>(n_) + 2) {
    throw MalformedData("expected " + std::to_string(n_ + 2) + " fixed points, got " +
                        std::to_string(points_.size()));
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].weights.size() != static_cast<std::size_t>(n_)) {
      throw MalformedData("point " + std::to_string(i) + " has " +
                          std::to_string(points_[i].weights.size()) + " weights, expected " +
                          std::to_string(n_));
    }
  }
}

std::size_t expected_negative_count(int n, std::size_t i) {
  const std::size_t half = static_cast<std::size_t>(n / 2);
  return i <= half ? i : i - 1;
}

PointInvariants point_invariants(const FixedPointData& data, std::size_t i) {
  if (i >= data.size()) {
    throw IndexOutOfRange("fixed point index " + std::to_string(i) + " out of range 0.." +
                          std::to_string(data.size() - 1));
  }
  PointInvariants inv{0, 1, 1, 1};
  for (const BigInt& w : data[i].weights) {
    inv.gamma += w;
    inv.lambda_full *= w;
    if (sgn(w) < 0) inv.lambda_minus *= w;
    if (sgn(w) > 0) inv.lambda_plus *= w;
  }
  return inv;
}

std::vector<std::vector<BigInt>> standard_weights(std::span<const BigInt> phi) {
  const std::size_t count = phi.size();
  std::vector<std::vector<BigInt>> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (j == i || j == count - 1 - i) continue;
      out[i].push_back(phi[j] - phi[i]);
    }
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

FixedPointData make_standard_g2(std::span<const BigInt> b) {
  if (b.size() < 2) throw InvalidGenerator("need at least two rotation speeds");
  std::vector<BigInt> magnitudes;
  for (const BigInt& v : b) magnitudes.push_back(abs(v));
  std::sort(magnitudes.begin(), magnitudes.end());
  if (std::adjacent_find(magnitudes.begin(), magnitudes.end()) != magnitudes.end()) {
    throw InvalidGenerator("rotation speeds must have distinct absolute values");
  }

  // Each plane contributes +-b; orientation flips the sign, so only |b| matters.
  std::vector<BigInt> phi;
  for (const BigInt& m : magnitudes) {
    phi.push_back(-m);
    phi.push_back(m);
  }
  std::sort(phi.begin(), phi.end());

  const int n = static_cast<int>(2 * (b.size() - 1));
  auto weights = standard_weights(phi);
  std::vector<FixedPoint> points;
  points.reserve(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) points.push_back({phi[i], std::move(weights[i])});
  return FixedPointData(n, std::move(points));
}

bool ValidationReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
}

const ValidationEntry* ValidationReport::find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::string format_weights(std::span<const BigInt> weights) {
  std::string s = "{";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) s += ",";
    s += to_string(weights[i]);
  }
  return s + "}";
}

namespace {

bool has_zero_weight(const FixedPointData& data) {
  for (const auto& p : data.points()) {
    for (const auto& w : p.weights) {
      if (sgn(w) == 0) return true;
    }
  }
  return false;
}

ValidationEntry check_even(const FixedPointData& data) {
  bool ok = data.n() >= 2 && data.n() % 2 == 0;
  return {std::string(check::kEvenDimension), ok, "n = " + std::to_string(data.n())};
}

ValidationEntry check_nonzero(const FixedPointData& data) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (const auto& w : data[i].weights) {
      if (sgn(w) == 0) {
        return {std::string(check::kNonzeroWeights), false,
                "zero weight at P" + std::to_string(i)};
      }
    }
  }
  return {std::string(check::kNonzeroWeights), true, "all weights nonzero"};
}

ValidationEntry check_order(const FixedPointData& data) {
  const bool even = data.n() % 2 == 0;
  const std::size_t half = static_cast<std::size_t>(data.half());
  for (std::size_t i = 0; i + 1 < data.size(); ++i) {
    const bool tie_allowed = even && i == half;
    const int c = cmp(data[i].phi, data[i + 1].phi);
    if (c > 0 || (c == 0 && !tie_allowed)) {
      return {std::string(check::kMomentOrder), false,
              "phi(P" + std::to_string(i) + ") = " + to_string(data[i].phi) +
                  (c > 0 ? " > " : " = ") + "phi(P" + std::to_string(i + 1) +
                  ") = " + to_string(data[i + 1].phi)};
    }
  }
  return {std::string(check::kMomentOrder), true,
          "strictly increasing except possibly at the middle pair"};
}

ValidationEntry check_index_pattern(const FixedPointData& data) {
  if (data.n() % 2 != 0) {
    return {std::string(check::kMorseIndexPattern), false, "no index pattern exists for odd n"};
  }
  std::string observed;
  bool ok = true;
  for (std::size_t i = 0; i < data.size(); ++i) {
    std::size_t got = data[i].negative_count();
    if (i) observed += ",";
    observed += std::to_string(2 * got);
    if (got != expected_negative_count(data.n(), i)) ok = false;
  }
  std::string expected;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (i) expected += ",";
    expected += std::to_string(2 * expected_negative_count(data.n(), i));
  }
  return {std::string(check::kMorseIndexPattern), ok,
          "indices (" + observed + "), required (" + expected + ")"};
}

ValidationEntry check_negation(const FixedPointData& data) {
  std::vector<BigInt> all;
  for (const auto& p : data.points()) all.insert(all.end(), p.weights.begin(), p.weights.end());
  std::vector<BigInt> negated;
  for (const auto& w : all) negated.push_back(-w);
  std::sort(all.begin(), all.end());
  std::sort(negated.begin(), negated.end());
  bool ok = all == negated;
  return {std::string(check::kNegationClosure), ok,
          ok ? "weight multiset equals its negation"
             : "weight multiset is not closed under negation"};
}

ValidationEntry check_index_bound(const FixedPointData& data) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    std::size_t below = 0;
    for (const auto& q : data.points()) {
      if (q.phi < data[i].phi) ++below;
    }
    // Isolated points: each lower fixed point contributes dim + 2 = 2.
    if (data[i].negative_count() > below) {
      return {std::string(check::kIndexBound), false,
              "P" + std::to_string(i) + " has index " +
                  std::to_string(2 * data[i].negative_count()) + " but only " +
                  std::to_string(below) + " fixed points lie below it"};
    }
  }
  return {std::string(check::kIndexBound), true, "2*lambda <= 2*(points below) everywhere"};
}

// A weight w at P with |w| = k lies in the Z_k-isotropy component through P.
// That component is compact and carries the restricted moment map, so its
// extremum in the direction of w is another fixed point Q with
// k | phi(Q) - phi(P) and a weight of the opposite sign divisible by k.
ValidationEntry check_isotropy(const FixedPointData& data) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (const BigInt& w : data[i].weights) {
      const int s = sgn(w);
      if (s == 0) continue;
      const BigInt k = abs(w);
      bool found = false;
      for (std::size_t j = 0; j < data.size() && !found; ++j) {
        if (j == i) continue;
        BigInt gap = data[j].phi - data[i].phi;
        if (sgn(gap) != s || !divides(k, gap)) continue;
        for (const BigInt& v : data[j].weights) {
          if (sgn(v) == -s && divides(k, v)) {
            found = true;
            break;
          }
        }
      }
      if (!found) {
        return {std::string(check::kIsotropyDivisibility), false,
                "weight " + to_string(w) + " at P" + std::to_string(i) +
                    " has no partner fixed point"};
      }
    }
  }
  return {std::string(check::kIsotropyDivisibility), true,
          "every weight has a partner point at a divisible moment gap"};
}

ValidationEntry check_localization(const FixedPointData& data) {
  if (has_zero_weight(data)) {
    return {std::string(check::kLocalizationOfOne), false, "undefined: zero weight present"};
  }
  BigRational sum = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    sum += BigRational(1) / BigRational(point_invariants(data, i).lambda_full);
  }
  return {std::string(check::kLocalizationOfOne), sgn(sum) == 0,
          "sum of 1/Lambda_i = " + to_string(sum)};
}

}  // namespace

ValidationReport validate(const FixedPointData& data) {
  ValidationReport r;
  r.entries.push_back(check_even(data));
  r.entries.push_back(check_nonzero(data));
  r.entries.push_back(check_order(data));
  r.entries.push_back(check_index_pattern(data));
  r.entries.push_back(check_negation(data));
  r.entries.push_back(check_index_bound(data));
  r.entries.push_back(check_isotropy(data));
  r.entries.push_back(check_localization(data));
  return r;
}

}  // namespace g2fp
