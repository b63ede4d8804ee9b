#pragma once

#include "kaonbell/kinematics.hpp"
#include "kaonbell/qm.hpp"

namespace kaonbell {

/// Three detection times tau1 = tau, tau2 = p tau, tau3 = (p + 1) tau / 2, so that
/// tau2 - tau1 = 2 (tau3 - tau1) = 2 (tau2 - tau3).
struct WignerConfig {
  double p = 1.5;
  /// Both K0K0 and K0barK0bar inequalities share the same joints.
  Strangeness species = Strangeness::K0bar;

  void validate() const;
  /// 1 <= p < (1 + v) / (1 - v).
  bool locality_compliant(const DecayParams& params) const;
};

/// Four detection times tau1 = p tau, tau2 = (p + 2) tau, tau3 = (p + 1) tau,
/// tau4 = (p + 3) tau; tau1, tau2 on the left and tau3, tau4 on the right.
struct CHSHConfig {
  double p = 1.0;
  bool renormalized = true;
  Strangeness species = Strangeness::K0bar;

  void validate() const;
  /// tau4 / tau1 = (p + 3) / p < (1 + v) / (1 - v).
  bool locality_compliant(const DecayParams& params) const;
};

/// Like-strangeness joint divided by the probability that both kaons survive;
/// equals [1 - A(|tau - tau'|)] / 4.
double renormalized_joint(const DecayParams& params, double tau, double tau_prime,
                          Strangeness species = Strangeness::K0bar);

struct WignerValue {
  double w;      // p12 - p13 - p32; positive means QM violates the inequality
  double p12;    // P[(tau1), (tau2)]
  double p13;    // P[(tau1), (tau3)]
  double p32;    // P[(tau3), (tau2)]
  double tau1, tau2, tau3;
};

WignerValue wigner_W_kaon(const DecayParams& params, double tau, const WignerConfig& config);

struct SpinWignerValue {
  double w;
  double p_ab;  // analyzers 2 theta apart
  double p_ac;
  double p_cb;
};

/// P(-,-) = (1 - cos angle) / 4 for the spin singlet.
double spin_singlet_like_probability(double angle);

/// Wigner's inequality for the singlet with theta_ab = 2 theta_ac = 2 theta_cb = 2 theta.
SpinWignerValue wigner_W_spin(double theta);

struct CHSHValue {
  double s;
  double p13, p14, p23, p24;  // joints (renormalized or raw, per config)
  double single2, single3;    // single-kaon terms subtracted
  double tau1, tau2, tau3, tau4;
};

/// Assembles S from the four joints and two singles; local realism requires
/// -1 <= S <= 0.
CHSHValue chsh_S(const DecayParams& params, double tau, const CHSHConfig& config);

/// [2 - 3 A(tau) + A(3 tau)] / 4 - 1, the renormalized S in closed form.
double chsh_S_closed_form(const DecayParams& params, double tau);

}  // namespace kaonbell
