#include "kaonbell/bell.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "kaonbell/errors.hpp"

namespace kaonbell {

namespace {

void require_tau(double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw DomainError(fmt::format("tau must be finite and non-negative, got {}", tau));
  }
}

double like_joint(const DecayParams& params, Strangeness species, double t_left, double t_right) {
  return qm_joint_strangeness(params, species, species, t_left, t_right).value;
}

}  // namespace

void WignerConfig::validate() const {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw DomainError(fmt::format("Wigner time ratio p must be >= 1, got {}", p));
  }
}

bool WignerConfig::locality_compliant(const DecayParams& params) const {
  return p >= 1.0 && p < locality_max_ratio(params.velocity);
}

void CHSHConfig::validate() const {
  if (!(p >= 0.0) || !std::isfinite(p)) {
    throw DomainError(fmt::format("CHSH time offset p must be >= 0, got {}", p));
  }
}

bool CHSHConfig::locality_compliant(const DecayParams& params) const {
  return p > 0.0 && (p + 3.0) / p < locality_max_ratio(params.velocity);
}

double renormalized_joint(const DecayParams& params, double tau, double tau_prime,
                          Strangeness species) {
  require_tau(tau);
  require_tau(tau_prime);
  const double undecayed = undecayed_pair_probability(params, tau, tau_prime);
  if (!(undecayed > 0.0)) {
    throw DomainError("renormalized joint undefined: survival probability underflows");
  }
  return like_joint(params, species, tau, tau_prime) / undecayed;
}

WignerValue wigner_W_kaon(const DecayParams& params, double tau, const WignerConfig& config) {
  require_tau(tau);
  config.validate();
  WignerValue v{};
  v.tau1 = tau;
  v.tau2 = config.p * tau;
  v.tau3 = 0.5 * (config.p + 1.0) * tau;
  v.p12 = like_joint(params, config.species, v.tau1, v.tau2);
  v.p13 = like_joint(params, config.species, v.tau1, v.tau3);
  v.p32 = like_joint(params, config.species, v.tau3, v.tau2);
  v.w = v.p12 - v.p13 - v.p32;
  return v;
}

double spin_singlet_like_probability(double angle) { return 0.25 * (1.0 - std::cos(angle)); }

SpinWignerValue wigner_W_spin(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw DomainError(fmt::format("theta must lie in [0, pi], got {}", theta));
  }
  SpinWignerValue v{};
  v.p_ab = spin_singlet_like_probability(2.0 * theta);
  v.p_ac = spin_singlet_like_probability(theta);
  v.p_cb = v.p_ac;
  v.w = v.p_ab - v.p_ac - v.p_cb;
  return v;
}

CHSHValue chsh_S(const DecayParams& params, double tau, const CHSHConfig& config) {
  require_tau(tau);
  config.validate();
  CHSHValue v{};
  v.tau1 = config.p * tau;
  v.tau2 = (config.p + 2.0) * tau;
  v.tau3 = (config.p + 1.0) * tau;
  v.tau4 = (config.p + 3.0) * tau;

  const auto joint = [&](double left, double right) {
    return config.renormalized ? renormalized_joint(params, left, right, config.species)
                               : like_joint(params, config.species, left, right);
  };
  v.p13 = joint(v.tau1, v.tau3);
  v.p14 = joint(v.tau1, v.tau4);
  v.p23 = joint(v.tau2, v.tau3);
  v.p24 = joint(v.tau2, v.tau4);
  if (config.renormalized) {
    v.single2 = 0.5;
    v.single3 = 0.5;
  } else {
    v.single2 = qm_single(params, config.species, v.tau2);
    v.single3 = qm_single(params, config.species, v.tau3);
  }
  v.s = v.p13 - v.p14 + v.p23 + v.p24 - v.single2 - v.single3;
  return v;
}

double chsh_S_closed_form(const DecayParams& params, double tau) {
  require_tau(tau);
  return 0.25 * (2.0 - 3.0 * qm_asymmetry(params, tau) + qm_asymmetry(params, 3.0 * tau)) - 1.0;
}

}  // namespace kaonbell
