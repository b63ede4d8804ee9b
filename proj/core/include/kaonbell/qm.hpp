#pragma once

#include "kaonbell/kinematics.hpp"

namespace kaonbell {

enum class Strangeness { K0, K0bar };
enum class CPState { KS, KL };

enum class JointBasis { StrangenessStrangeness, CPCP, CPStrangeness, StrangenessCP };

/// A joint detection probability together with the measurement bases it was
/// computed in.
struct JointProbability {
  double value;
  JointBasis basis;
};

/// Probability per initial pair of finding strangeness s1 at tau1 on the left and
/// s2 at tau2 on the right. Unlike strangeness carries the + interference sign.
JointProbability qm_joint_strangeness(const DecayParams& params, Strangeness s1, Strangeness s2,
                                      double tau1, double tau2);

/// (KL,KS) -> E_L(tau1) E_S(tau2) / 2, (KS,KL) mirrored, equal CP values -> 0.
JointProbability qm_joint_cp(const DecayParams& params, CPState c1, CPState c2, double tau1,
                             double tau2);

/// CP measured on the left, strangeness on the right. Independent of the
/// strangeness outcome.
JointProbability qm_joint_mixed(const DecayParams& params, CPState c1, Strangeness s2, double tau1,
                                double tau2);

/// Strangeness measured on the left, CP on the right.
JointProbability qm_joint_mixed(const DecayParams& params, Strangeness s1, CPState c2, double tau1,
                                double tau2);

double qm_single(const DecayParams& params, Strangeness s, double tau);
double qm_single(const DecayParams& params, CPState c, double tau);

/// Probability that both kaons are still undecayed at (tau1, tau2):
/// [E_S(tau1) E_L(tau2) + E_L(tau1) E_S(tau2)] / 2. Identical in QM and LR.
double undecayed_pair_probability(const DecayParams& params, double tau1, double tau2);

/// Closed-form QM asymmetry; depends only on the time difference.
double qm_asymmetry(const DecayParams& params, double dtau);

/// The four strangeness joints at one time pair.
struct StrangenessJoints {
  double k0_k0bar;
  double k0bar_k0;
  double k0_k0;
  double k0bar_k0bar;
};

StrangenessJoints qm_strangeness_joints(const DecayParams& params, double tau1, double tau2);

/// (unlike - like) / (unlike + like) for any theory's four joints.
double asymmetry_from_joints(const StrangenessJoints& joints);

}  // namespace kaonbell
