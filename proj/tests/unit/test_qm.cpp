#include <doctest.h>

#include <cmath>
#include <random>

#include "kaonbell/errors.hpp"
#include "kaonbell/qm.hpp"
#include "oracles.hpp"

using namespace kaonbell;

namespace {
int sign(Strangeness s) { return s == Strangeness::K0 ? 1 : -1; }
constexpr Strangeness kS[] = {Strangeness::K0, Strangeness::K0bar};
}  // namespace

TEST_CASE("strangeness joints, frozen values") {
  const auto p = DecayParams::defaults();
  CHECK(qm_joint_strangeness(p, Strangeness::K0bar, Strangeness::K0bar, 0.55, 1.92).value ==
        doctest::Approx(0.0329673492310059832).epsilon(1e-13));
  CHECK(qm_joint_strangeness(p, Strangeness::K0, Strangeness::K0bar, 0.55, 1.92).value ==
        doctest::Approx(0.147409536239214012).epsilon(1e-13));
}

TEST_CASE("strangeness joints agree with the state-vector oracle") {
  const auto p = DecayParams::defaults();
  const oracle::Constants c;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> tau(0.0, 12.0);
  for (int i = 0; i < 2000; ++i) {
    const double t1 = tau(rng), t2 = tau(rng);
    for (auto s1 : kS)
      for (auto s2 : kS) {
        const double expected = oracle::strangeness_joint_from_state(c, sign(s1), sign(s2), t1, t2);
        CHECK(qm_joint_strangeness(p, s1, s2, t1, t2).value ==
              doctest::Approx(expected).epsilon(1e-12).scale(1e-14));
      }
  }
}

TEST_CASE("like strangeness vanishes at equal times") {
  const auto p = DecayParams::defaults();
  for (double t : {0.0, 0.55, 1.0, 7.3}) {
    CHECK(qm_joint_strangeness(p, Strangeness::K0, Strangeness::K0, t, t).value == 0.0);
    CHECK(qm_joint_strangeness(p, Strangeness::K0bar, Strangeness::K0bar, t, t).value == 0.0);
  }
}

TEST_CASE("CP and mixed joints, frozen values") {
  const auto p = DecayParams::defaults();
  CHECK(qm_joint_cp(p, CPState::KS, CPState::KL, 1.0, 2.0).value ==
        doctest::Approx(0.183305446316727203).epsilon(1e-14));
  CHECK(qm_joint_cp(p, CPState::KS, CPState::KS, 1.0, 2.0).value == 0.0);
  const auto mixed = qm_joint_mixed(p, CPState::KL, Strangeness::K0bar, 1.0, 1.0);
  CHECK(mixed.value == doctest::Approx(0.0918111547925137906).epsilon(1e-14));
  CHECK(mixed.basis == JointBasis::CPStrangeness);
  CHECK(qm_joint_mixed(p, Strangeness::K0, CPState::KS, 1.0, 1.0).basis ==
        JointBasis::StrangenessCP);
  CHECK(qm_single(p, CPState::KL, 1.0) == doctest::Approx(0.499137187444661641).epsilon(1e-14));
}

TEST_CASE("marginals: joints sum to singles and to the undecayed probability") {
  const auto p = DecayParams::defaults();
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> tau(0.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const double t1 = tau(rng), t2 = tau(rng);
    const auto j = qm_strangeness_joints(p, t1, t2);
    const double total = j.k0_k0bar + j.k0bar_k0 + j.k0_k0 + j.k0bar_k0bar;
    CHECK(total == doctest::Approx(undecayed_pair_probability(p, t1, t2)).epsilon(1e-13));
    // Summing over the right outcome at tau2 -> 0 would give the single; at
    // finite tau2 the strangeness sum on the right equals the CP sum.
    double cp_total = 0.0;
    for (auto a : {CPState::KS, CPState::KL})
      for (auto b : {CPState::KS, CPState::KL}) cp_total += qm_joint_cp(p, a, b, t1, t2).value;
    CHECK(cp_total == doctest::Approx(total).epsilon(1e-13));
    for (auto c : {CPState::KS, CPState::KL}) {
      double over_s = 0.0;
      for (auto s : kS) over_s += qm_joint_mixed(p, c, s, t1, t2).value;
      CHECK(over_s == doctest::Approx(qm_joint_cp(p, c, c == CPState::KS ? CPState::KL : CPState::KS,
                                                  t1, t2).value)
                          .epsilon(1e-13));
    }
  }
}

TEST_CASE("asymmetry") {
  const auto p = DecayParams::defaults();
  CHECK(qm_asymmetry(p, 0.0) == 1.0);
  CHECK(qm_asymmetry(p, 1.37) == doctest::Approx(0.6345).epsilon(1e-3));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> tau(0.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const double t1 = tau(rng), t2 = t1 + tau(rng);
    CHECK(asymmetry_from_joints(qm_strangeness_joints(p, t1, t2)) ==
          doctest::Approx(qm_asymmetry(p, t2 - t1)).epsilon(1e-11));
  }
  CHECK_THROWS_AS(qm_asymmetry(p, -0.1), DomainError);
}

TEST_CASE("stable limit reduces to the spin-singlet form") {
  const auto p = DecayParams::stable_limit();
  for (double t1 : {0.0, 0.9, 2.2})
    for (double d : {0.0, 0.4, 1.7, 6.5}) {
      const double c = std::cos(p.delta_m * d);
      const auto j = qm_strangeness_joints(p, t1, t1 + d);
      CHECK(j.k0_k0bar == doctest::Approx(0.25 * (1 + c)).epsilon(1e-13));
      CHECK(j.k0bar_k0 == doctest::Approx(0.25 * (1 + c)).epsilon(1e-13));
      CHECK(j.k0_k0 == doctest::Approx(0.25 * (1 - c)).scale(1e-15).epsilon(1e-13));
      CHECK(j.k0bar_k0bar == doctest::Approx(0.25 * (1 - c)).scale(1e-15).epsilon(1e-13));
    }
  for (auto c1 : {CPState::KS, CPState::KL})
    for (auto c2 : {CPState::KS, CPState::KL})
      CHECK(qm_joint_cp(DecayParams::defaults(), c1, c2, 0.3, 0.8).value >= 0.0);
}
