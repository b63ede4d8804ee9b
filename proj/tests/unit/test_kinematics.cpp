#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kaonbell/errors.hpp"
#include "kaonbell/kinematics.hpp"

using namespace kaonbell;

TEST_CASE("survival at tau = 1 matches frozen values") {
  const auto e = survival(DecayParams::defaults(), 1.0);
  CHECK(e.short_lived == doctest::Approx(0.367879441171442321).epsilon(1e-15));
  CHECK(e.long_lived == doctest::Approx(0.998274374889323282).epsilon(1e-15));
}

TEST_CASE("q weights at tau = 13 (one full oscillation)") {
  const auto q = q_weights(DecayParams::defaults(), 13.0);
  CHECK(q.plus == doctest::Approx(0.501520408759592817).epsilon(1e-13));
}

TEST_CASE("q weights sum to one exactly") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> tau(0.0, 50.0);
  const auto p = DecayParams::defaults();
  for (int i = 0; i < 10000; ++i) {
    const auto q = q_weights(p, tau(rng));
    CHECK(q.plus + q.minus == 1.0);
    CHECK(q.plus >= 0.0);
    CHECK(q.minus >= 0.0);
  }
}

TEST_CASE("visibility is sech of half the width difference") {
  const auto p = DecayParams::defaults();
  for (double t : {0.0, 0.3, 1.0, 4.0, 20.0}) {
    const auto e = survival(p, t);
    const double direct = 2.0 * std::sqrt(e.short_lived * e.long_lived) /
                          (e.short_lived + e.long_lived);
    CHECK(interference_visibility(p, t) == doctest::Approx(direct).epsilon(1e-14));
  }
  CHECK(interference_visibility(DecayParams::stable_limit(), 3.0) == 1.0);
  CHECK(interference_visibility(p, 2000.0) >= 0.0);
}

TEST_CASE("stable limit keeps the oscillation frequency") {
  const auto s = DecayParams::stable_limit();
  CHECK(s.is_stable_limit());
  CHECK(s.delta_m == DecayParams::defaults().delta_m);
  const auto q = q_weights(s, 13.0 / 4.0);
  CHECK(q.plus == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("locality ratio") {
  CHECK(locality_max_ratio(0.22) == doctest::Approx(1.22 / 0.78));
  CHECK(locality_max_ratio(0.85) == doctest::Approx(1.85 / 0.15));
  CHECK(locality_max_ratio(0.0) == 1.0);
  CHECK_THROWS_AS(locality_max_ratio(1.0), DomainError);
  CHECK_THROWS_AS(locality_max_ratio(-0.1), DomainError);
}

TEST_CASE("space-like classification") {
  CHECK(is_spacelike(1.0, 1.5, 0.22));
  CHECK(is_spacelike(1.5, 1.0, 0.22));
  CHECK_FALSE(is_spacelike(1.0, 1.6, 0.22));
  CHECK(is_spacelike(0.0, 0.0, 0.22));
  CHECK_FALSE(is_spacelike(0.0, 1.0, 0.22));
}

TEST_CASE("validate rejects unphysical constants") {
  DecayParams p;
  CHECK_NOTHROW(p.validate());
  p.gamma_s = -1.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = {};
  p.velocity = 1.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = {};
  p.delta_m = std::nan("");
  CHECK_THROWS_AS(p.validate(), DomainError);
  CHECK_THROWS_AS(survival(DecayParams::defaults(), -1.0), DomainError);
}
