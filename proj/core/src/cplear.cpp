#include "kaonbell/cplear.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

#include "kaonbell/csv.hpp"
#include "kaonbell/qm.hpp"

namespace kaonbell {

CplearReport cplear_compare(const DecayParams& params) {
  DecayParams p = params;
  p.velocity = kCplearVelocity;
  p.validate();

  CplearReport report;
  report.velocity = p.velocity;
  report.locality_max_ratio = locality_max_ratio(p.velocity);
  for (const auto& row : kCplearRows) {
    CplearRowReport r{row, qm_asymmetry(p, row.dtau), lr_asymmetry_bounds(p, row.tau1, row.tau2),
                      false, false};
    r.qm_compatible = std::abs(row.measured - r.qm_prediction) <= row.error;
    r.lr_compatible = row.measured + row.error >= r.lr_interval.lo &&
                      row.measured - row.error <= r.lr_interval.hi;
    report.rows.push_back(r);
  }
  const auto& unequal = kCplearRows[1];
  report.time_ratio = unequal.tau2 / unequal.tau1;
  report.spacelike = is_spacelike(unequal.tau1, unequal.tau2, p.velocity);
  return report;
}

std::string cplear_report_text(const CplearReport& report) {
  std::string out;
  out += "dtau,measured,error,tau1,tau2,qm,lr_lo,lr_hi,qm_1sigma,lr_1sigma\n";
  for (const auto& r : report.rows) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", format_number(r.row.dtau),
                       format_number(r.row.measured), format_number(r.row.error),
                       format_number(r.row.tau1), format_number(r.row.tau2),
                       format_number(r.qm_prediction), format_number(r.lr_interval.lo),
                       format_number(r.lr_interval.hi), r.qm_compatible ? "yes" : "no",
                       r.lr_compatible ? "yes" : "no");
  }
  out += fmt::format("locality: v={} tau2/tau1={} window=[1,{}) {}\n",
                     format_number(report.velocity), format_number(report.time_ratio),
                     format_number(report.locality_max_ratio),
                     report.spacelike ? "space-like OK" : "NOT space-like");
  out += "times: corrected times as published\n";
  return out;
}

std::string cplear_report_json(const CplearReport& report) {
  nlohmann::ordered_json j;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    nlohmann::ordered_json row;
    row["dtau"] = r.row.dtau;
    row["measured"] = r.row.measured;
    row["error"] = r.row.error;
    row["tau1"] = r.row.tau1;
    row["tau2"] = r.row.tau2;
    row["qm"] = r.qm_prediction;
    row["lr_interval"] = {r.lr_interval.lo, r.lr_interval.hi};
    row["qm_compatible"] = r.qm_compatible;
    row["lr_compatible"] = r.lr_compatible;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["times"] = "corrected times as published";
  nlohmann::ordered_json loc;
  loc["velocity"] = report.velocity;
  loc["time_ratio"] = report.time_ratio;
  loc["locality_max_ratio"] = report.locality_max_ratio;
  loc["spacelike"] = report.spacelike;
  j["locality"] = loc;
  return j.dump(2);
}

}  // namespace kaonbell
