#include <random>

#include "doctest.h"
#include "g2fp/error.hpp"
#include "g2fp/fpdata.hpp"
#include "support.hpp"

using namespace g2fp;
using namespace g2fp::testing;

namespace {

FixedPointData with_points(const FixedPointData& d, std::vector<FixedPoint> pts) {
  return FixedPointData(d.n(), std::move(pts));
}

std::vector<FixedPoint> copy_points(const FixedPointData& d) {
  return {d.points().begin(), d.points().end()};
}

bool check_passes(const ValidationReport& r, std::string_view name) {
  const ValidationEntry* e = r.find(name);
  REQUIRE(e != nullptr);
  return e->pass;
}

}  // namespace

TEST_CASE("standard data for b = 2,1") {
  const FixedPointData d = standard({2, 1});
  CHECK(d.n() == 2);
  REQUIRE(d.size() == 4);
  CHECK(d[0].phi == -2);
  CHECK(d[1].phi == -1);
  CHECK(d[2].phi == 1);
  CHECK(d[3].phi == 2);
  CHECK(d[0].weights == ints({1, 3}));
  CHECK(d[1].weights == ints({-1, 3}));
  CHECK(d[2].weights == ints({-3, 1}));
  CHECK(d[3].weights == ints({-3, -1}));
  CHECK(d[3].phi - d[2].phi == d[1].phi - d[0].phi);
  CHECK(d == standard({1, 2}));
  CHECK(d == standard({-2, 1}));
}

TEST_CASE("standard data for b = 3,2,1") {
  const FixedPointData d = standard({3, 2, 1});
  CHECK(d.n() == 4);
  std::vector<BigInt> phi;
  for (const auto& p : d.points()) phi.push_back(p.phi);
  CHECK(phi == ints({-3, -2, -1, 1, 2, 3}));
  CHECK(d[0].weights == ints({1, 2, 4, 5}));
  CHECK(d[2].weights == ints({-2, -1, 3, 4}));
  CHECK(d[3].weights == ints({-4, -3, 1, 2}));
  BigRational sum = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    BigInt prod = 1;
    for (const auto& w : d[i].weights) prod *= w;
    sum += BigRational(1) / BigRational(prod);
  }
  CHECK(sum == 0);
}

TEST_CASE("generator agrees with the plane-by-plane weight oracle") {
  std::mt19937_64 rng(11);
  for (int planes = 2; planes <= 6; ++planes) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto b = random_speeds(rng, planes, 40);
      const FixedPointData d = make_standard_g2(b);
      CHECK(d.points().size() == grassmannian_points(b).size());
      CHECK(std::equal(d.points().begin(), d.points().end(), grassmannian_points(b).begin()));
      CHECK(validate(d).passed());
    }
  }
}

TEST_CASE("generator rejects bad speeds") {
  CHECK_THROWS_AS(make_standard_g2(ints({1, 1})), InvalidGenerator);
  CHECK_THROWS_AS(make_standard_g2(ints({2, -2, 1})), InvalidGenerator);
  CHECK_THROWS_AS(make_standard_g2(ints({5})), InvalidGenerator);
}

TEST_CASE("point invariants") {
  const FixedPointData d = standard({2, 1});
  PointInvariants p0 = point_invariants(d, 0);
  CHECK(p0.gamma == 4);
  CHECK(p0.lambda_full == 3);
  CHECK(p0.lambda_minus == 1);
  CHECK(p0.lambda_plus == 3);
  PointInvariants p1 = point_invariants(d, 1);
  CHECK(p1.gamma == 2);
  CHECK(p1.lambda_full == -3);
  CHECK(p1.lambda_minus == -1);
  CHECK(p1.lambda_plus == 3);
  CHECK_THROWS_AS(point_invariants(d, 4), IndexOutOfRange);
  const FixedPointData e = standard({7, -3, 4, 1});
  for (std::size_t i = 0; i < e.size(); ++i) {
    PointInvariants q = point_invariants(e, i);
    CHECK(q.lambda_full == q.lambda_minus * q.lambda_plus);
    CHECK((sgn(q.lambda_minus) < 0) == (e[i].negative_count() % 2 == 1));
  }
  CHECK(point_invariants(e, 0).lambda_minus == 1);
}

TEST_CASE("validate accepts standard data") {
  const ValidationReport r = validate(standard({2, 1}));
  CHECK(r.passed());
  CHECK(r.entries.size() == 8);
  for (const auto& e : r.entries) CHECK_MESSAGE(e.pass, e.name);
}

TEST_CASE("validate: weight 3 at P0 replaced by 4") {
  const FixedPointData d = standard({2, 1});
  auto pts = copy_points(d);
  pts[0].weights = ints({1, 4});
  const ValidationReport r = validate(with_points(d, pts));
  CHECK_FALSE(r.passed());
  CHECK_FALSE(check_passes(r, check::kLocalizationOfOne));
  CHECK_FALSE(check_passes(r, check::kNegationClosure));
}

TEST_CASE("validate: P1 and P2 weight sets swapped") {
  // Both points carry one negative weight, so the index pattern survives the
  // swap; the divisibility condition is what rejects it.
  const FixedPointData d = standard({2, 1});
  auto pts = copy_points(d);
  std::swap(pts[1].weights, pts[2].weights);
  const ValidationReport r = validate(with_points(d, pts));
  CHECK_FALSE(r.passed());
  CHECK(check_passes(r, check::kMorseIndexPattern));
  CHECK_FALSE(check_passes(r, check::kIsotropyDivisibility));
}

TEST_CASE("validate: index and shape failures") {
  const FixedPointData d = standard({2, 1});
  auto pts = copy_points(d);
  std::swap(pts[0].weights, pts[1].weights);
  CHECK_FALSE(check_passes(validate(with_points(d, pts)), check::kMorseIndexPattern));

  auto order = copy_points(d);
  std::swap(order[0].phi, order[1].phi);
  CHECK_FALSE(check_passes(validate(with_points(d, order)), check::kMomentOrder));

  auto zero = copy_points(d);
  zero[0].weights[0] = 0;
  const ValidationReport rz = validate(with_points(d, zero));
  CHECK_FALSE(check_passes(rz, check::kNonzeroWeights));
  CHECK_FALSE(check_passes(rz, check::kLocalizationOfOne));

  std::vector<FixedPoint> odd;
  for (int i = 0; i < 5; ++i) odd.push_back({BigInt(i), ints({1, 1, 1})});
  CHECK_FALSE(check_passes(validate(FixedPointData(3, odd)), check::kEvenDimension));

  CHECK_THROWS_AS(FixedPointData(2, {d[0], d[1]}), MalformedData);
}

TEST_CASE("validate accepts a middle tie") {
  std::vector<FixedPoint> pts{{-2, ints({1, 3})}, {-1, ints({-1, 3})}, {-1, ints({-3, 1})}, {2, ints({-3, -1})}};
  const ValidationReport r = validate(FixedPointData(2, pts));
  CHECK(check_passes(r, check::kMomentOrder));
}

TEST_CASE("standard data properties") {
  std::mt19937_64 rng(99);
  for (int planes = 2; planes <= 5; ++planes) {
    for (int trial = 0; trial < 10; ++trial) {
      const FixedPointData d = make_standard_g2(random_speeds(rng, planes, 30));
      const int n = d.n();
      std::multiset<BigInt> all, neg;
      for (const auto& p : d.points()) {
        for (const auto& w : p.weights) {
          all.insert(w);
          neg.insert(-w);
        }
      }
      CHECK(all == neg);
      for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(d[i].negative_count() == expected_negative_count(n, i));
        for (std::size_t j = 0; j < d.size(); ++j) {
          if (d[i].phi == d[j].phi) continue;
          const BigRational ratio = rat_normalize(point_invariants(d, i).gamma - point_invariants(d, j).gamma,
                                  d[j].phi - d[i].phi);
          CHECK(ratio == n);
        }
      }
    }
  }
}
