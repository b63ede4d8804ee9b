#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kaonbell/bell.hpp"
#include "kaonbell/kinematics.hpp"

namespace kaonbell {

enum class ScanVariable {
  Tau1WithRatio,  // tau1, with tau2 = ratio * tau1
  WignerTau,      // tau of the Wigner time pattern
  WignerTheta,    // spin-singlet half angle theta
  ChshTau,        // tau of the CHSH time pattern
};

struct ScanSpec {
  ScanVariable variable = ScanVariable::Tau1WithRatio;
  double lo = 0.0;
  double hi = 5.0;
  std::size_t steps = 2000;
  std::size_t refine_iterations = 200;
  /// tau2/tau1 for Tau1WithRatio scans. Wigner and CHSH scans take p from their
  /// config.
  double ratio_or_p = 1.5;

  void validate() const;
  /// `steps` equally spaced points from lo to hi inclusive.
  std::vector<double> grid() const;
};

/// Numeric table with named columns; rows share the column order. NaN marks
/// an undefined cell.
struct ScanTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t column_index(const std::string& name) const;
  std::vector<double> column(const std::string& name) const;
};

struct ExtremumResult {
  double location = 0.0;
  double value = 0.0;
  /// Named quantities evaluated at `location`, in a fixed order.
  std::vector<std::pair<std::string, double>> context;

  double at(const std::string& key) const;
};

struct ScanResult {
  ScanTable table;
  std::optional<ExtremumResult> maximum;
  std::optional<ExtremumResult> minimum;
};

enum class Direction { Maximize, Minimize };

/// Golden-section interval width at which refinement stops.
inline constexpr double kRefineTolerance = 1e-10;

/// Finds the best grid value (ties go to the smaller abscissa; NaN values never
/// win), then refines by golden-section search inside the cell pair bracketing
/// it. Returns nullopt if every value is NaN.
std::optional<std::pair<double, double>> locate_extremum(const std::function<double(double)>& f,
                                                         const std::vector<double>& grid,
                                                         const std::vector<double>& values,
                                                         Direction direction,
                                                         std::size_t max_iterations);

/// Evaluates `f` on every grid point. Work is split across threads; the output
/// is independent of the split.
std::vector<double> evaluate_grid(const std::function<double(double)>& f,
                                  const std::vector<double>& grid);

/// Upper end of the first run of grid points, starting at or after `from`, on
/// which `predicate_value > 0`; refined by bisection to kRefineTolerance.
/// Returns nullopt if no such run exists or it reaches the end of the grid.
std::optional<double> region_upper_edge(const std::function<double(double)>& predicate_value,
                                        const std::vector<double>& grid, double from);

/// Columns: tau1, tau2, a_qm, a_lr_min, a_lr_max, diff, rel_gap, spacelike.
/// diff = a_qm - a_lr_max; rel_gap = diff / a_qm, NaN where a_qm <= 0.05.
/// The maximum is taken over rel_gap. Throws OrderingError for ratio < 1.
ScanResult asymmetry_discrepancy_scan(const DecayParams& params, const ScanSpec& spec);

/// Columns: tau, tau1, tau2, tau3, p12, p13, p32, w. Maximum of w.
/// WignerTheta specs scan the spin singlet instead (columns: theta, p_ab, p_ac,
/// p_cb, w).
ScanResult wigner_scan(const DecayParams& params, const ScanSpec& spec,
                       const WignerConfig& config = {});

/// Columns: tau, s, p13, p14, p23, p24, single2, single3. Both extrema. The
/// minimum's context carries `violation_upper_edge` when S < -1 somewhere.
ScanResult chsh_scan(const DecayParams& params, const ScanSpec& spec, const CHSHConfig& config);

/// Extremum as a JSON object {location, value, context:{...}} with stable key order.
/// `significant_digits` > 0 rounds every number first; NaN becomes null.
std::string extremum_to_json(const ExtremumResult& result, int significant_digits = 0);

}  // namespace kaonbell
