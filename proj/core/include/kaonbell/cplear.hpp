#pragma once

#include <array>
#include <string>
#include <vector>

#include "kaonbell/kinematics.hpp"
#include "kaonbell/lr.hpp"

namespace kaonbell {

/// One published asymmetry measurement from p-pbar -> K0 K0bar annihilation at rest.
struct CplearRow {
  double dtau;      // tau2 - tau1, tau_S units
  double measured;  // asymmetry
  double error;     // one standard deviation
  double tau1;      // corrected times as published
  double tau2;
};

/// Kaon velocity in the annihilation centre-of-mass frame.
inline constexpr double kCplearVelocity = 0.85;

inline constexpr std::array<CplearRow, 2> kCplearRows{{
    {0.0, 0.88, 0.17, 0.55, 0.55},
    {1.37, 0.56, 0.12, 0.55, 1.92},
}};

struct CplearRowReport {
  CplearRow row;
  double qm_prediction;
  Interval lr_interval;
  bool qm_compatible;  // |measured - qm| <= error
  bool lr_compatible;  // [measured - error, measured + error] meets the LR interval
};

struct CplearReport {
  std::vector<CplearRowReport> rows;
  double velocity;
  double time_ratio;          // tau2 / tau1 of the unequal-time row
  double locality_max_ratio;  // (1 + v) / (1 - v)
  bool spacelike;
};

/// Compares each row with A_QM(dtau) and the LR envelope at the published
/// times. `params` supplies the decay constants; the velocity is replaced by
/// kCplearVelocity for the locality check.
CplearReport cplear_compare(const DecayParams& params = DecayParams::defaults());

std::string cplear_report_text(const CplearReport& report);
std::string cplear_report_json(const CplearReport& report);

}  // namespace kaonbell
