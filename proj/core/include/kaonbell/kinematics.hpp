#pragma once

#include <numbers>

namespace kaonbell {

// All times are proper times in units of the K_S lifetime; rates and the mass
// difference are in units of 1/tau_S.
struct DecayParams {
  double gamma_s = 1.0;
  double gamma_l = 1.0 / 579.0;
  double delta_m = 2.0 * std::numbers::pi / 13.0;
  double velocity = 0.22;

  /// Physical defaults for a phi-factory pair.
  static DecayParams defaults() { return {}; }

  /// Gamma_S = Gamma_L = 0. The oscillation frequency keeps its default so the
  /// stable curves share the time axis of the physical ones.
  static DecayParams stable_limit() {
    DecayParams p;
    p.gamma_s = 0.0;
    p.gamma_l = 0.0;
    return p;
  }

  bool is_stable_limit() const { return gamma_s == 0.0 && gamma_l == 0.0; }

  /// Throws DomainError unless the constants describe an allowed kaon system.
  void validate() const;

  friend bool operator==(const DecayParams&, const DecayParams&) = default;
};

struct Survival {
  double short_lived;  // E_S(tau)
  double long_lived;   // E_L(tau)
};

struct QWeights {
  double plus;
  double minus;
};

/// E_S and E_L at proper time `tau`.
Survival survival(const DecayParams& params, double tau);

/// The interference weight 2 sqrt(E_L E_S) / (E_L + E_S) multiplying cos(dm tau).
/// Equals 1 in the stable limit.
double interference_visibility(const DecayParams& params, double tau);

/// Q+(tau) and Q-(tau). `minus` is computed as 1 - plus so the pair sums to
/// one exactly.
QWeights q_weights(const DecayParams& params, double tau);

/// Largest tau2/tau1 that keeps two back-to-back detections space-like
/// separated: (1 + v) / (1 - v).
double locality_max_ratio(double velocity);

/// True iff 1 <= max/min < locality_max_ratio(v). Both times must be > 0,
/// except that two zero times count as coincident (ratio 1).
bool is_spacelike(double tau1, double tau2, double velocity);

}  // namespace kaonbell
