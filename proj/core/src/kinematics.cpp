#include "kaonbell/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kaonbell/errors.hpp"

namespace kaonbell {

namespace {

void require_time(double tau, const char* what) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw DomainError(std::string(what) + " must be a finite non-negative proper time, got " +
                      std::to_string(tau));
  }
}

void require_velocity(double v) {
  if (!(v >= 0.0 && v < 1.0)) {
    throw DomainError("velocity must lie in [0, 1), got " + std::to_string(v));
  }
}

}  // namespace

void DecayParams::validate() const {
  if (!std::isfinite(gamma_s) || !std::isfinite(gamma_l) || !std::isfinite(delta_m)) {
    throw DomainError("decay constants must be finite");
  }
  if (is_stable_limit()) {
    require_velocity(velocity);
    return;
  }
  if (!(gamma_s > 0.0)) throw DomainError("gamma_s must be positive");
  if (!(gamma_l >= 0.0)) throw DomainError("gamma_l must be non-negative");
  if (gamma_l > gamma_s) throw DomainError("gamma_l must not exceed gamma_s");
  require_velocity(velocity);
}

Survival survival(const DecayParams& params, double tau) {
  require_time(tau, "tau");
  return {std::exp(-params.gamma_s * tau), std::exp(-params.gamma_l * tau)};
}

double interference_visibility(const DecayParams& params, double tau) {
  require_time(tau, "tau");
  // 2 sqrt(E_S E_L) / (E_S + E_L) == sech((Gamma_S - Gamma_L) tau / 2); this form
  // stays finite when both exponentials underflow.
  return 1.0 / std::cosh(0.5 * (params.gamma_s - params.gamma_l) * tau);
}

QWeights q_weights(const DecayParams& params, double tau) {
  const double plus = 0.5 * (1.0 + interference_visibility(params, tau) *
                                       std::cos(params.delta_m * tau));
  return {plus, 1.0 - plus};
}

double locality_max_ratio(double velocity) {
  require_velocity(velocity);
  return (1.0 + velocity) / (1.0 - velocity);
}

bool is_spacelike(double tau1, double tau2, double velocity) {
  require_time(tau1, "tau1");
  require_time(tau2, "tau2");
  const double bound = locality_max_ratio(velocity);
  const double lo = std::min(tau1, tau2);
  const double hi = std::max(tau1, tau2);
  if (hi == 0.0) return 1.0 < bound;
  if (lo == 0.0) return false;
  const double ratio = hi / lo;
  return ratio >= 1.0 && ratio < bound;
}

}  // namespace kaonbell
