#include "kaonbell/lr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "kaonbell/errors.hpp"

namespace kaonbell {

namespace {

void require_ordered(double tau1, double tau2) {
  if (!(tau1 >= 0.0) || !(tau2 >= 0.0)) {
    throw DomainError(fmt::format("detection times must be non-negative, got ({}, {})", tau1, tau2));
  }
  if (tau1 > tau2) {
    throw OrderingError(fmt::format("pair table needs tau1 <= tau2, got ({}, {})", tau1, tau2));
  }
}

// Lower/upper limits of the two interval families shared by both CP sectors.
Interval diagonal_interval(const QWeights& q1, const QWeights& q2) {
  return {std::max(0.0, q2.plus - q1.minus), std::min(q1.plus, q2.plus)};
}

Interval offdiagonal_interval(const QWeights& q1, const QWeights& q2) {
  return {std::max(0.0, q1.minus - q2.plus), std::min(q1.minus, q2.minus)};
}

ThreeTimeSector solve_sector(double normalizer, double diag_norm, double offdiag_norm,
                             const QWeights& q1, const QWeights& q2) {
  ThreeTimeSector s{};
  // First system: p111 + p121 = N Q+(t2), p221 + p211 = N Q-(t2), p111 + p211 = N Q+(t1).
  s.p111 = normalizer * diag_norm;
  s.p121 = normalizer * q2.plus - s.p111;
  s.p211 = normalizer * q1.plus - s.p111;
  s.p221 = normalizer * q2.minus - s.p211;
  // Second system: p222 + p212 = N Q+(t2), p112 + p122 = N Q-(t2), p222 + p122 = N Q+(t1).
  s.p112 = normalizer * offdiag_norm;
  s.p122 = normalizer * q2.minus - s.p112;
  s.p222 = normalizer * q1.plus - s.p122;
  s.p212 = normalizer * q2.plus - s.p222;
  return s;
}

// Sum of the two free normalized parameters of one sector, i.e.
// p_11(t2|t1) / E(t2 - t1). Rounding at closed endpoints can push it a few ulp
// above one.
double sector_weight(double diag_norm, double offdiag_norm) {
  return std::clamp(diag_norm + offdiag_norm, 0.0, 1.0);
}

}  // namespace

// ---------------------------------------------------------------------------

SingleKaonMatrix single_matrix(const DecayParams& params, double tau, double delta) {
  const auto e = survival(params, tau);
  const auto q = q_weights(params, tau);
  SingleKaonMatrix m;
  m.delta = delta;
  auto& p = m.entries;
  p[0][0] = e.short_lived * q.plus + delta;
  p[0][1] = e.short_lived * q.minus - delta;
  p[1][0] = p[0][1];
  p[1][1] = p[0][0];
  p[2][2] = e.long_lived * q.plus - delta;
  p[2][3] = e.long_lived * q.minus + delta;
  p[3][2] = p[2][3];
  p[3][3] = p[2][2];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (p[i][j] < 0.0 || p[i][j] > 1.0) {
        throw InfeasibleError(fmt::format("delta = {} puts p{}{}({}|0) = {} outside [0, 1]", delta,
                                          i + 1, j + 1, tau, p[i][j]));
      }
    }
  }
  return m;
}

double pair_consistency_defect(const DecayParams& params, const SingleKaonMatrix& matrix,
                               double tau) {
  const auto e = survival(params, tau);
  return matrix(1, 1) * e.long_lived - matrix(4, 4) * e.short_lived;
}

// ---------------------------------------------------------------------------

LRModelParams FeasibilityBox::at(double f111, double f112, double f333, double f334) const {
  return {p111.at(f111), p112.at(f112), p333.at(f333), p334.at(f334)};
}

bool FeasibilityBox::contains(const LRModelParams& m, double tol) const {
  return p111.contains(m.p111_norm, tol) && p112.contains(m.p112_norm, tol) &&
         p333.contains(m.p333_norm, tol) && p334.contains(m.p334_norm, tol);
}

FeasibilityBox feasibility_box(const DecayParams& params, double tau1, double tau2) {
  require_ordered(tau1, tau2);
  const auto q1 = q_weights(params, tau1);
  const auto q2 = q_weights(params, tau2);
  const Interval diag = diagonal_interval(q1, q2);
  const Interval offdiag = offdiagonal_interval(q1, q2);
  return {diag, offdiag, diag, offdiag};
}

void require_feasible(const FeasibilityBox& box, const LRModelParams& model) {
  const auto check = [](const char* name, const Interval& iv, double x) {
    if (!std::isfinite(x) || !iv.contains(x, kFeasibilityTolerance)) {
      throw InfeasibleError(
          fmt::format("{} = {} outside feasible interval [{}, {}]", name, x, iv.lo, iv.hi));
    }
  };
  check("p111_norm", box.p111, model.p111_norm);
  check("p112_norm", box.p112, model.p112_norm);
  check("p333_norm", box.p333, model.p333_norm);
  check("p334_norm", box.p334, model.p334_norm);
}

// ---------------------------------------------------------------------------

ThreeTimeProbabilities three_time_probabilities(const DecayParams& params,
                                                const LRModelParams& model, double tau1,
                                                double tau2) {
  require_feasible(feasibility_box(params, tau1, tau2), model);
  const auto q1 = q_weights(params, tau1);
  const auto q2 = q_weights(params, tau2);
  const auto e2 = survival(params, tau2);
  return {solve_sector(e2.short_lived, model.p111_norm, model.p112_norm, q1, q2),
          solve_sector(e2.long_lived, model.p333_norm, model.p334_norm, q1, q2)};
}

ConditionalProbs conditional_probs(const DecayParams& params, const LRModelParams& model,
                                   double tau1, double tau2) {
  require_feasible(feasibility_box(params, tau1, tau2), model);
  const auto gap = survival(params, tau2 - tau1);
  // (p111 + p112) / E_S(t1) = (x + y) E_S(t2) / E_S(t1) = (x + y) E_S(t2 - t1).
  const double even = sector_weight(model.p111_norm, model.p112_norm);
  const double odd = sector_weight(model.p333_norm, model.p334_norm);
  ConditionalProbs c{};
  c.p11 = even * gap.short_lived;
  c.p12 = (1.0 - even) * gap.short_lived;
  c.p21 = c.p12;
  c.p22 = c.p11;
  c.p33 = odd * gap.long_lived;
  c.p34 = (1.0 - odd) * gap.long_lived;
  c.p43 = c.p34;
  c.p44 = c.p33;
  return c;
}

double PairStateTable::total() const {
  return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

PairStateTable pair_state_table(const DecayParams& params, const LRModelParams& model,
                                double tau1, double tau2) {
  const auto c = conditional_probs(params, model, tau1, tau2);
  const auto e1 = survival(params, tau1);
  const auto e2 = survival(params, tau2);
  const double s1 = e1.short_lived;
  const double l1 = e1.long_lived;
  const double s2 = e2.short_lived;
  const double l2 = e2.long_lived;
  const double both = 0.25 * s1 * l1;

  PairStateTable t;
  auto& P = t.probabilities;
  P[0] = both * c.p44;
  P[1] = 0.25 * s1 * (1.0 - l2);
  P[2] = 0.25 * (1.0 - s1) * l1 * (c.p43 + c.p44);
  P[3] = both * c.p34;
  P[4] = both * c.p33;
  P[5] = P[1];
  P[6] = 0.25 * (1.0 - s1) * l1 * (c.p33 + c.p34);
  P[7] = both * c.p43;
  P[8] = both * c.p22;
  P[9] = 0.25 * l1 * (1.0 - s2);
  P[10] = 0.25 * s1 * (1.0 - l1) * (c.p21 + c.p22);
  P[11] = both * c.p12;
  P[12] = both * c.p11;
  P[13] = P[9];
  P[14] = 0.25 * s1 * (1.0 - l1) * (c.p11 + c.p12);
  P[15] = both * c.p21;
  P[16] = 0.5 * (1.0 - s1) * (1.0 - l2);
  P[17] = 0.5 * (1.0 - l1) * (1.0 - s2);
  return t;
}

// ---------------------------------------------------------------------------

bool state_matches(RealisticState state, Outcome outcome) {
  using RS = RealisticState;
  if (state == RS::DecayedEven || state == RS::DecayedOdd) return false;
  if (const auto* s = std::get_if<Strangeness>(&outcome)) {
    const bool positive = state == RS::K1 || state == RS::K3;
    return positive == (*s == Strangeness::K0);
  }
  const bool even = state == RS::K1 || state == RS::K2;
  return even == (std::get<CPState>(outcome) == CPState::KS);
}

double table_joint(const PairStateTable& table, Outcome left, Outcome right) {
  double sum = 0.0;
  for (std::size_t i = 0; i < kPairRows.size(); ++i) {
    if (state_matches(kPairRows[i].left, left) && state_matches(kPairRows[i].right, right)) {
      sum += table.probabilities[i];
    }
  }
  return sum;
}

double table_single(const PairStateTable& table, Side side, Outcome outcome) {
  double sum = 0.0;
  for (std::size_t i = 0; i < kPairRows.size(); ++i) {
    const auto state = side == Side::Left ? kPairRows[i].left : kPairRows[i].right;
    if (state_matches(state, outcome)) sum += table.probabilities[i];
  }
  return sum;
}

double lr_asymmetry(const DecayParams& params, const LRModelParams& model, double tau1,
                    double tau2) {
  require_feasible(feasibility_box(params, tau1, tau2), model);
  const auto gap = survival(params, tau2 - tau1);
  // (p111 + p112) / E_S(t1) == (x + y) E_S(t2 - t1), likewise for the CP-odd sector.
  const double even = gap.short_lived * (model.p111_norm + model.p112_norm);
  const double odd = gap.long_lived * (model.p333_norm + model.p334_norm);
  return 2.0 * (even + odd) / (gap.short_lived + gap.long_lived) - 1.0;
}

Interval lr_asymmetry_bounds(const DecayParams& params, double tau1, double tau2) {
  require_ordered(tau1, tau2);
  const auto q1 = q_weights(params, tau1);
  const auto q2 = q_weights(params, tau2);
  return {2.0 * std::abs(q2.plus - q1.minus) - 1.0, 1.0 - 2.0 * std::abs(q2.plus - q1.plus)};
}

JointProbability lr_joint(const DecayParams& params, const LRModelParams& model, Outcome left,
                          Outcome right, double tau1, double tau2) {
  const auto* s1 = std::get_if<Strangeness>(&left);
  const auto* s2 = std::get_if<Strangeness>(&right);
  if (s1 && s2) {
    const double asym = lr_asymmetry(params, model, tau1, tau2);
    const double undecayed = undecayed_pair_probability(params, tau1, tau2);
    const double sign = *s1 == *s2 ? -1.0 : 1.0;
    return {0.25 * undecayed * (1.0 + sign * asym), JointBasis::StrangenessStrangeness};
  }
  // Outside the strangeness-strangeness basis every feasible model agrees with QM.
  require_feasible(feasibility_box(params, tau1, tau2), model);
  return qm_joint(params, left, right, tau1, tau2);
}

double lr_single(const DecayParams& params, const LRModelParams& model, Side side,
                 Outcome outcome, double tau1, double tau2) {
  return table_single(pair_state_table(params, model, tau1, tau2), side, outcome);
}

JointProbability qm_joint(const DecayParams& params, Outcome left, Outcome right, double tau1,
                          double tau2) {
  return std::visit(
      [&](auto l, auto r) -> JointProbability {
        using L = decltype(l);
        using R = decltype(r);
        if constexpr (std::is_same_v<L, Strangeness> && std::is_same_v<R, Strangeness>) {
          return qm_joint_strangeness(params, l, r, tau1, tau2);
        } else if constexpr (std::is_same_v<L, CPState> && std::is_same_v<R, CPState>) {
          return qm_joint_cp(params, l, r, tau1, tau2);
        } else {
          return qm_joint_mixed(params, l, r, tau1, tau2);
        }
      },
      left, right);
}

}  // namespace kaonbell
