#pragma once

// The most general local hidden-variable description of the kaon pair.
//
// A single kaon carries definite strangeness and CP at every instant; the four
// realistic states are
//
//   K1 = (S=+1, CP=+1)   K2 = (S=-1, CP=+1)
//   K3 = (S=+1, CP=-1)   K4 = (S=-1, CP=-1)
//
// and a pair observed at (tau1 <= tau2) occupies one of 18 joint states, two of
// which have both kaons decayed. Every theory of the class is fixed, at a given
// time pair, by four three-time probabilities (p111, p112, p333, p334), each
// stored normalized by E_S(tau2) or E_L(tau2). All remaining three-time
// probabilities follow from the two linear systems they satisfy.

#include <array>
#include <cstddef>
#include <string>
#include <variant>

#include "kaonbell/kinematics.hpp"
#include "kaonbell/qm.hpp"

namespace kaonbell {

/// Tolerance used when checking a model against its closed feasibility intervals.
inline constexpr double kFeasibilityTolerance = 1e-12;

struct Interval {
  double lo;
  double hi;

  bool contains(double x, double tol = 0.0) const { return x >= lo - tol && x <= hi + tol; }
  double width() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
  /// lo + fraction * (hi - lo).
  double at(double fraction) const { return lo + fraction * (hi - lo); }
};

// ---------------------------------------------------------------------------
// Single kaon

/// p_ij(tau|0): probability of state K_i at tau given K_j at 0. Indices are
/// 1-based to match the state labels.
struct SingleKaonMatrix {
  std::array<std::array<double, 4>, 4> entries{};
  double delta = 0.0;

  double operator()(int i, int j) const { return entries[i - 1][j - 1]; }
};

/// The symmetric single-kaon matrix with free offset `delta`. Throws
/// InfeasibleError if `delta` pushes any entry outside [0, 1].
SingleKaonMatrix single_matrix(const DecayParams& params, double tau, double delta = 0.0);

/// p11(tau|0) E_L(tau) - p44(tau|0) E_S(tau). A pair description is consistent
/// only where this vanishes, which happens iff delta == 0; otherwise it equals
/// delta [E_L(tau) + E_S(tau)].
double pair_consistency_defect(const DecayParams& params, const SingleKaonMatrix& matrix,
                               double tau);

// ---------------------------------------------------------------------------
// Model parameters

/// The four free three-time probabilities, each divided by its E_S(tau2) or
/// E_L(tau2) normalizer.
struct LRModelParams {
  double p111_norm = 0.0;
  double p112_norm = 0.0;
  double p333_norm = 0.0;
  double p334_norm = 0.0;

  friend bool operator==(const LRModelParams&, const LRModelParams&) = default;
};

/// Closed intervals the normalized parameters must inhabit at (tau1, tau2).
struct FeasibilityBox {
  Interval p111;
  Interval p112;
  Interval p333;
  Interval p334;

  /// Each parameter at lo + fraction * width.
  LRModelParams at(double f111, double f112, double f333, double f334) const;
  LRModelParams lower_corner() const { return at(0, 0, 0, 0); }
  LRModelParams upper_corner() const { return at(1, 1, 1, 1); }
  LRModelParams midpoint() const { return at(0.5, 0.5, 0.5, 0.5); }

  bool contains(const LRModelParams& m, double tol = kFeasibilityTolerance) const;
};

/// Requires 0 <= tau1 <= tau2 (OrderingError otherwise).
FeasibilityBox feasibility_box(const DecayParams& params, double tau1, double tau2);

/// Throws InfeasibleError naming the first violated interval.
void require_feasible(const FeasibilityBox& box, const LRModelParams& model);

// ---------------------------------------------------------------------------
// Derived probabilities

/// The eight three-time probabilities p_ijk(tau2, tau1 | 0) of one CP sector, in
/// sector-local labels (1, 2 stand for K1, K2 or for K3, K4).
struct ThreeTimeSector {
  double p111, p121, p211, p221;
  double p112, p122, p212, p222;
};

struct ThreeTimeProbabilities {
  ThreeTimeSector cp_even;  // K1, K2; normalizer E_S
  ThreeTimeSector cp_odd;   // K3, K4; normalizer E_L
};

/// Back-solves both linear systems from the four free parameters.
ThreeTimeProbabilities three_time_probabilities(const DecayParams& params,
                                                const LRModelParams& model, double tau1,
                                                double tau2);

/// p_ij(tau2 | tau1) for both CP sectors.
struct ConditionalProbs {
  double p11, p12, p21, p22;
  double p33, p34, p43, p44;
};

ConditionalProbs conditional_probs(const DecayParams& params, const LRModelParams& model,
                                   double tau1, double tau2);

enum class RealisticState { K1, K2, K3, K4, DecayedEven, DecayedOdd };

struct PairRow {
  RealisticState left;   // direction 1 at tau1
  RealisticState right;  // direction 2 at tau2
};

/// Row layout of the 18-state pair table.
inline constexpr std::array<PairRow, 18> kPairRows{{
    {RealisticState::K1, RealisticState::K4},
    {RealisticState::K1, RealisticState::DecayedOdd},
    {RealisticState::DecayedEven, RealisticState::K4},
    {RealisticState::K1, RealisticState::K3},
    {RealisticState::K2, RealisticState::K3},
    {RealisticState::K2, RealisticState::DecayedOdd},
    {RealisticState::DecayedEven, RealisticState::K3},
    {RealisticState::K2, RealisticState::K4},
    {RealisticState::K3, RealisticState::K2},
    {RealisticState::K3, RealisticState::DecayedEven},
    {RealisticState::DecayedOdd, RealisticState::K2},
    {RealisticState::K3, RealisticState::K1},
    {RealisticState::K4, RealisticState::K1},
    {RealisticState::K4, RealisticState::DecayedEven},
    {RealisticState::DecayedOdd, RealisticState::K1},
    {RealisticState::K4, RealisticState::K2},
    {RealisticState::DecayedEven, RealisticState::DecayedOdd},
    {RealisticState::DecayedOdd, RealisticState::DecayedEven},
}};

struct PairStateTable {
  std::array<double, 18> probabilities{};

  /// P_i with the 1-based row number used in the table layout.
  double P(std::size_t row) const { return probabilities.at(row - 1); }
  double total() const;
};

PairStateTable pair_state_table(const DecayParams& params, const LRModelParams& model,
                                double tau1, double tau2);

// ---------------------------------------------------------------------------
// Observables

using Outcome = std::variant<Strangeness, CPState>;
enum class Side { Left, Right };

/// True if an undecayed realistic state answers `outcome` when measured.
bool state_matches(RealisticState state, Outcome outcome);

/// Sum of table rows whose left state matches `left` and right state matches `right`.
double table_joint(const PairStateTable& table, Outcome left, Outcome right);

/// Sum of table rows whose state on `side` matches `outcome`.
double table_single(const PairStateTable& table, Side side, Outcome outcome);

/// Closed-form LR joint probability; strangeness joints carry the model's
/// asymmetry, all other bases are model independent.
JointProbability lr_joint(const DecayParams& params, const LRModelParams& model, Outcome left,
                          Outcome right, double tau1, double tau2);

/// Single-kaon probability read off the pair table (left kaon at tau1 or right
/// kaon at tau2).
double lr_single(const DecayParams& params, const LRModelParams& model, Side side,
                 Outcome outcome, double tau1, double tau2);

double lr_asymmetry(const DecayParams& params, const LRModelParams& model, double tau1,
                    double tau2);

/// [2|Q+(tau2) - Q-(tau1)| - 1, 1 - 2|Q+(tau2) - Q+(tau1)|].
Interval lr_asymmetry_bounds(const DecayParams& params, double tau1, double tau2);

/// QM joints in the same variant form, for side-by-side comparisons.
JointProbability qm_joint(const DecayParams& params, Outcome left, Outcome right, double tau1,
                          double tau2);

// ---------------------------------------------------------------------------
// Serialization

/// A model together with the time pair it was validated against.
struct ModelRecord {
  LRModelParams model;
  double tau1 = 0.0;
  double tau2 = 0.0;
};

/// Flat JSON object {p111_norm, p112_norm, p333_norm, p334_norm, tau1, tau2}.
std::string model_to_json(const ModelRecord& record);

/// Parses and re-validates against feasibility_box(tau1, tau2); throws
/// DomainError on malformed input and InfeasibleError on an infeasible model.
ModelRecord model_from_json(const DecayParams& params, const std::string& text);

}  // namespace kaonbell
