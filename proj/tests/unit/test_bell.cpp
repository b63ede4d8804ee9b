#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kaonbell/bell.hpp"
#include "kaonbell/errors.hpp"

using namespace kaonbell;

namespace {
const DecayParams kP = DecayParams::defaults();
}

TEST_CASE("Wigner time pattern") {
  const auto w = wigner_W_kaon(kP, 2.0, WignerConfig{});
  CHECK(w.tau1 == 2.0);
  CHECK(w.tau2 == 3.0);
  CHECK(w.tau3 == 2.5);
  CHECK(w.w == doctest::Approx(w.p12 - w.p13 - w.p32).epsilon(1e-15));
  CHECK(w.p12 == qm_joint_strangeness(kP, Strangeness::K0bar, Strangeness::K0bar, 2.0, 3.0).value);
}

TEST_CASE("Wigner value near its maximum, frozen") {
  const auto w = wigner_W_kaon(kP, 1.568, WignerConfig{});
  CHECK(w.w == doctest::Approx(0.002557).epsilon(2e-3));
  CHECK(w.p12 == doctest::Approx(0.005211).epsilon(2e-3));
  CHECK(w.p13 == doctest::Approx(0.001584).epsilon(2e-3));
  CHECK(w.p32 == doctest::Approx(0.001070).epsilon(2e-3));
}

TEST_CASE("Wigner config validation and locality") {
  CHECK_THROWS_AS(WignerConfig{0.9}.validate(), DomainError);
  CHECK(WignerConfig{1.5}.locality_compliant(kP));
  CHECK_FALSE(WignerConfig{1.6}.locality_compliant(kP));
}

TEST_CASE("spin singlet Wigner") {
  const auto v = wigner_W_spin(std::numbers::pi / 3);
  CHECK(v.p_ab == doctest::Approx(0.375));
  CHECK(v.p_ac == doctest::Approx(0.125));
  CHECK(v.p_ac + v.p_cb == doctest::Approx(0.25));
  CHECK(v.w == doctest::Approx(0.125));
  for (double th : {0.1, 0.7, 1.4, 2.5})
    CHECK(v.w >= wigner_W_spin(th).w);
  CHECK_THROWS_AS(wigner_W_spin(-0.1), DomainError);
  CHECK_THROWS_AS(wigner_W_spin(4.0), DomainError);
}

TEST_CASE("renormalized joints depend only on the time difference") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> tau(0.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const double t = tau(rng), d = tau(rng);
    CHECK(renormalized_joint(kP, t, t + d) ==
          doctest::Approx((1.0 - qm_asymmetry(kP, d)) / 4.0).epsilon(1e-12).scale(1e-14));
  }
}

TEST_CASE("renormalized CHSH matches the closed form and is independent of p") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> tau(0.0, 5.0), pd(0.0, 3.0);
  for (int i = 0; i < 500; ++i) {
    const double t = tau(rng);
    const double closed = chsh_S_closed_form(kP, t);
    const auto a = chsh_S(kP, t, CHSHConfig{pd(rng), true});
    const auto b = chsh_S(kP, t, CHSHConfig{pd(rng), true});
    CHECK(a.s == doctest::Approx(closed).epsilon(1e-12));
    CHECK(std::abs(a.s - b.s) < 1e-12);
    CHECK(a.single2 == 0.5);
  }
}

TEST_CASE("CHSH minimum, frozen") {
  const auto v = chsh_S(kP, 0.8075, CHSHConfig{});
  CHECK(v.s == doctest::Approx(-1.08749).epsilon(1e-4));
  CHECK(v.tau1 == doctest::Approx(0.8075));
  CHECK(v.tau4 == doctest::Approx(4 * 0.8075));
}

TEST_CASE("stable-limit CHSH extremes") {
  const auto s = DecayParams::stable_limit();
  const double quarter = std::numbers::pi / 4 / s.delta_m;
  CHECK(chsh_S_closed_form(s, quarter) == doctest::Approx(-0.5 - std::sqrt(2.0) / 2).epsilon(1e-12));
  CHECK(chsh_S_closed_form(s, 3 * quarter) ==
        doctest::Approx(-0.5 + std::sqrt(2.0) / 2).epsilon(1e-12));
}

TEST_CASE("unrenormalized CHSH") {
  const CHSHConfig raw{1.0, false};
  const auto v = chsh_S(kP, 0.7, raw);
  CHECK(v.single2 == qm_single(kP, Strangeness::K0bar, v.tau2));
  CHECK(v.single3 == qm_single(kP, Strangeness::K0bar, v.tau3));
  CHECK(chsh_S(kP, 0.0, raw).s == doctest::Approx(-1.0));
  CHECK_THROWS_AS(CHSHConfig{-1.0}.validate(), DomainError);
  CHECK_FALSE(CHSHConfig{1.0}.locality_compliant(kP));
}
