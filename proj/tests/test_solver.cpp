#include <random>

#include "doctest.h"
#include "g2fp/error.hpp"
#include "g2fp/solver.hpp"
#include "support.hpp"

using namespace g2fp;
using namespace g2fp::testing;

namespace {

MomentProfile profile(std::initializer_list<long> phi) {
  return MomentProfile(static_cast<int>(phi.size()) - 2, ints(phi));
}

}  // namespace

TEST_CASE("moment profile validation") {
  CHECK_NOTHROW(profile({-2, -1, 1, 2}));
  CHECK_NOTHROW(profile({-2, 0, 0, 2}));
  CHECK_THROWS_AS(profile({-2, 1, -1, 2}), InvalidProfile);
  CHECK_THROWS_AS(profile({0, 0, 1, 2}), InvalidProfile);
  CHECK_THROWS_AS(profile({0, 1, 2}), InvalidProfile);
  CHECK_THROWS_AS(MomentProfile(2, ints({0, 1, 2})), InvalidProfile);
  CHECK(MomentProfile::of(standard({3, 2, 1})).values().size() == 6);
}

TEST_CASE("predicted products match standard data") {
  std::mt19937_64 rng(31);
  for (int planes = 2; planes <= 6; ++planes) {
    for (int trial = 0; trial < 10; ++trial) {
      const FixedPointData d = make_standard_g2(random_speeds(rng, planes, 60));
      const auto predicted = predicted_products(MomentProfile::of(d));
      REQUIRE(predicted.size() == d.size());
      for (std::size_t i = 0; i < d.size(); ++i) {
        const PointInvariants inv = point_invariants(d, i);
        CHECK(predicted[i].minus == inv.lambda_minus);
        CHECK(predicted[i].plus == inv.lambda_plus);
      }
    }
  }
  const auto p4 = predicted_products(profile({-3, -2, -1, 1, 2, 3}));
  CHECK(p4[4].minus == -15);
  CHECK(p4[0].plus == 40);
}

TEST_CASE("predicted products reject non-integral profiles") {
  // At P5 the forced product is -720 / -7.
  CHECK_THROWS_AS(predicted_products(profile({0, 1, 2, 3, 4, 6})), InconsistentProfile);
  CHECK(classify(profile({0, 1, 2, 3, 4, 6}), 6).candidates.empty());
}

TEST_CASE("symmetry relation") {
  CHECK(check_symmetry(profile({-2, -1, 1, 2})));
  CHECK_FALSE(check_symmetry(profile({-2, -1, 0, 3})));
  CHECK_FALSE(check_symmetry(profile({-2 + 5, -1 + 5, 0 + 5, 3 + 5})));
  CHECK(check_symmetry(profile({8, 9, 11, 12})));
  std::mt19937_64 rng(37);
  for (int planes = 2; planes <= 6; ++planes) {
    for (int trial = 0; trial < 5; ++trial) {
      const FixedPointData d = make_standard_g2(random_speeds(rng, planes, 40));
      CHECK(check_symmetry(MomentProfile::of(d)));
      CHECK(has_standard_weights(d));
    }
  }
}

TEST_CASE("classification of the two small profiles") {
  const ClassificationVerdict v2 = classify(profile({-2, -1, 1, 2}), 4);
  REQUIRE(v2.candidates.size() == 1);
  CHECK(v2.candidates[0] == standard({2, 1}));
  CHECK(v2.is_unique_standard);

  const ClassificationVerdict v4 = classify(profile({-3, -2, -1, 1, 2, 3}), 6);
  REQUIRE(v4.candidates.size() == 1);
  CHECK(v4.candidates[0] == standard({3, 2, 1}));
  CHECK(v4.is_unique_standard);
}

TEST_CASE("classification of a non-symmetric profile") {
  const MomentProfile p = profile({-2, -1, 0, 3});
  const ClassificationVerdict v = classify(p, default_weight_bound(p));
  CHECK(v.candidates.empty());
  CHECK_FALSE(v.is_unique_standard);
}

TEST_CASE("classification is translation invariant") {
  const ClassificationVerdict a = classify(profile({-2, -1, 1, 2}), 4);
  const ClassificationVerdict b = classify(profile({8, 9, 11, 12}), 4);
  REQUIRE(b.candidates.size() == 1);
  CHECK(b.is_unique_standard);
  CHECK(a.candidates[0][0].weights == b.candidates[0][0].weights);
}

TEST_CASE("every candidate passes validation") {
  for (const auto& phi : {ints({-3, -1, 1, 3}), ints({-5, -1, 1, 5}), ints({0, 2, 3, 5})}) {
    const MomentProfile p(2, phi);
    for (const auto& c : enumerate_candidates(p, default_weight_bound(p))) CHECK(validate(c).passed());
  }
}
