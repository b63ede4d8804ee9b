#include "kaonbell/qm.hpp"

#include <cmath>
#include <string>

#include "kaonbell/errors.hpp"

namespace kaonbell {

namespace {

void require_times(double tau1, double tau2) {
  if (!(tau1 >= 0.0) || !(tau2 >= 0.0)) {
    throw DomainError("detection times must be non-negative, got (" + std::to_string(tau1) +
                      ", " + std::to_string(tau2) + ")");
  }
}

}  // namespace

JointProbability qm_joint_strangeness(const DecayParams& params, Strangeness s1, Strangeness s2,
                                      double tau1, double tau2) {
  require_times(tau1, tau2);
  const auto e1 = survival(params, tau1);
  const auto e2 = survival(params, tau2);
  const auto esum = survival(params, tau1 + tau2);
  const double coherence = std::sqrt(esum.long_lived * esum.short_lived);
  const double phase = params.delta_m * (tau2 - tau1);
  double value = 0.0;
  if (s1 != s2) {
    value = (e1.long_lived * e2.short_lived + e1.short_lived * e2.long_lived +
             2.0 * coherence * std::cos(phase)) /
            8.0;
  } else {
    // Like strangeness written as a sum of squares: non-negative, and exactly
    // zero at equal times.
    const double mismatch =
        std::sqrt(e1.long_lived * e2.short_lived) - std::sqrt(e1.short_lived * e2.long_lived);
    const double half_sine = std::sin(0.5 * phase);
    value = (mismatch * mismatch + 4.0 * coherence * half_sine * half_sine) / 8.0;
  }
  return {value, JointBasis::StrangenessStrangeness};
}

JointProbability qm_joint_cp(const DecayParams& params, CPState c1, CPState c2, double tau1,
                             double tau2) {
  require_times(tau1, tau2);
  double value = 0.0;
  if (c1 != c2) {
    const auto e1 = survival(params, tau1);
    const auto e2 = survival(params, tau2);
    value = c1 == CPState::KL ? 0.5 * e1.long_lived * e2.short_lived
                              : 0.5 * e1.short_lived * e2.long_lived;
  }
  return {value, JointBasis::CPCP};
}

JointProbability qm_joint_mixed(const DecayParams& params, CPState c1, Strangeness /*s2*/,
                                double tau1, double tau2) {
  require_times(tau1, tau2);
  const auto e1 = survival(params, tau1);
  const auto e2 = survival(params, tau2);
  const double value = c1 == CPState::KS ? 0.25 * e1.short_lived * e2.long_lived
                                         : 0.25 * e1.long_lived * e2.short_lived;
  return {value, JointBasis::CPStrangeness};
}

JointProbability qm_joint_mixed(const DecayParams& params, Strangeness /*s1*/, CPState c2,
                                double tau1, double tau2) {
  require_times(tau1, tau2);
  const auto e1 = survival(params, tau1);
  const auto e2 = survival(params, tau2);
  // The right kaon's CP value fixes the left one's by anti-correlation.
  const double value = c2 == CPState::KL ? 0.25 * e1.short_lived * e2.long_lived
                                         : 0.25 * e1.long_lived * e2.short_lived;
  return {value, JointBasis::StrangenessCP};
}

double qm_single(const DecayParams& params, Strangeness /*s*/, double tau) {
  const auto e = survival(params, tau);
  return 0.25 * (e.short_lived + e.long_lived);
}

double qm_single(const DecayParams& params, CPState c, double tau) {
  const auto e = survival(params, tau);
  return 0.5 * (c == CPState::KS ? e.short_lived : e.long_lived);
}

double undecayed_pair_probability(const DecayParams& params, double tau1, double tau2) {
  require_times(tau1, tau2);
  const auto e1 = survival(params, tau1);
  const auto e2 = survival(params, tau2);
  return 0.5 * (e1.short_lived * e2.long_lived + e1.long_lived * e2.short_lived);
}

double qm_asymmetry(const DecayParams& params, double dtau) {
  if (!(dtau >= 0.0)) {
    throw DomainError("time difference must be non-negative, got " + std::to_string(dtau));
  }
  return interference_visibility(params, dtau) * std::cos(params.delta_m * dtau);
}

StrangenessJoints qm_strangeness_joints(const DecayParams& params, double tau1, double tau2) {
  using S = Strangeness;
  return {qm_joint_strangeness(params, S::K0, S::K0bar, tau1, tau2).value,
          qm_joint_strangeness(params, S::K0bar, S::K0, tau1, tau2).value,
          qm_joint_strangeness(params, S::K0, S::K0, tau1, tau2).value,
          qm_joint_strangeness(params, S::K0bar, S::K0bar, tau1, tau2).value};
}

double asymmetry_from_joints(const StrangenessJoints& j) {
  const double unlike = j.k0_k0bar + j.k0bar_k0;
  const double like = j.k0_k0 + j.k0bar_k0bar;
  const double total = unlike + like;
  if (!(total > 0.0)) throw DomainError("asymmetry undefined: no undecayed pairs");
  return (unlike - like) / total;
}

}  // namespace kaonbell
