#include "kaonbell/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include <fmt/format.h>
#include <json.hpp>

#include "kaonbell/errors.hpp"
#include "kaonbell/lr.hpp"
#include "kaonbell/qm.hpp"

namespace kaonbell {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Relative gaps are only meaningful away from the zeros of A_QM.
constexpr double kRelativeGapFloor = 0.05;
constexpr std::size_t kMinPointsPerThread = 256;

bool better(double candidate, double incumbent, Direction d) {
  if (std::isnan(candidate)) return false;
  if (std::isnan(incumbent)) return true;
  return d == Direction::Maximize ? candidate > incumbent : candidate < incumbent;
}

// Golden-section search for the extremum of f on [a, b].
std::pair<double, double> golden_section(const std::function<double(double)>& f, double a, double b,
                                         Direction d, std::size_t max_iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double e = a + inv_phi * (b - a);
  double fc = f(c);
  double fe = f(e);
  for (std::size_t it = 0; it < max_iterations && (b - a) > kRefineTolerance; ++it) {
    if (better(fc, fe, d) || (!better(fe, fc, d) && !std::isnan(fc))) {
      b = e;
      e = c;
      fe = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + inv_phi * (b - a);
      fe = f(e);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

std::vector<double> row_of(std::initializer_list<double> values) { return {values}; }

}  // namespace

// ---------------------------------------------------------------------------

void ScanSpec::validate() const {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw DomainError(fmt::format("scan range needs lo < hi, got [{}, {}]", lo, hi));
  }
  if (steps < 2) throw DomainError(fmt::format("scan needs at least 2 steps, got {}", steps));
  if (variable != ScanVariable::WignerTheta && lo < 0.0) {
    throw DomainError(fmt::format("time scans must start at tau >= 0, got {}", lo));
  }
  if (variable == ScanVariable::WignerTheta && (lo < 0.0 || hi > std::numbers::pi)) {
    throw DomainError(fmt::format("theta scans must stay inside [0, pi], got [{}, {}]", lo, hi));
  }
}

std::vector<double> ScanSpec::grid() const {
  validate();
  std::vector<double> g(steps);
  const double h = (hi - lo) / static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) g[i] = lo + h * static_cast<double>(i);
  g.back() = hi;
  return g;
}

std::size_t ScanTable::column_index(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw DomainError("no column named '" + name + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> ScanTable::column(const std::string& name) const {
  const auto idx = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.at(idx));
  return out;
}

double ExtremumResult::at(const std::string& key) const {
  for (const auto& [k, v] : context) {
    if (k == key) return v;
  }
  throw DomainError("extremum context has no entry '" + key + "'");
}

// ---------------------------------------------------------------------------

std::vector<double> evaluate_grid(const std::function<double(double)>& f,
                                  const std::vector<double>& grid) {
  std::vector<double> out(grid.size());
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, grid.size() / kMinPointsPerThread + 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = f(grid[i]);
    return out;
  }
  const std::size_t chunk = (grid.size() + workers - 1) / workers;
  std::vector<std::jthread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(grid.size(), begin + chunk);
        for (std::size_t i = begin; i < end; ++i) out[i] = f(grid[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  pool.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::optional<std::pair<double, double>> locate_extremum(const std::function<double(double)>& f,
                                                         const std::vector<double>& grid,
                                                         const std::vector<double>& values,
                                                         Direction direction,
                                                         std::size_t max_iterations) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!best ? !std::isnan(values[i]) : better(values[i], values[*best], direction)) best = i;
  }
  if (!best) return std::nullopt;

  const std::size_t i = *best;
  const double a = grid[i == 0 ? 0 : i - 1];
  const double b = grid[std::min(i + 1, grid.size() - 1)];
  const auto [x, fx] = golden_section(f, a, b, direction, max_iterations);
  if (better(fx, values[i], direction)) return std::pair{x, fx};
  return std::pair{grid[i], values[i]};
}

std::optional<double> region_upper_edge(const std::function<double(double)>& predicate_value,
                                        const std::vector<double>& grid, double from) {
  std::size_t i = 0;
  while (i < grid.size() && (grid[i] < from || !(predicate_value(grid[i]) > 0.0))) ++i;
  if (i == grid.size()) return std::nullopt;
  while (i + 1 < grid.size() && predicate_value(grid[i + 1]) > 0.0) ++i;
  if (i + 1 == grid.size()) return std::nullopt;

  double inside = grid[i];
  double outside = grid[i + 1];
  while (outside - inside > kRefineTolerance) {
    const double mid = 0.5 * (inside + outside);
    (predicate_value(mid) > 0.0 ? inside : outside) = mid;
  }
  return 0.5 * (inside + outside);
}

// ---------------------------------------------------------------------------

ScanResult asymmetry_discrepancy_scan(const DecayParams& params, const ScanSpec& spec) {
  const double alpha = spec.ratio_or_p;
  if (!(alpha >= 1.0)) {
    throw OrderingError(fmt::format("tau2 = alpha tau1 needs alpha >= 1, got {}", alpha));
  }
  const auto grid = spec.grid();
  const double window = locality_max_ratio(params.velocity);

  struct Point {
    double a_qm, lo, hi, diff, rel_gap;
  };
  const auto evaluate = [&](double tau1) {
    const double tau2 = alpha * tau1;
    const double a_qm = qm_asymmetry(params, tau2 - tau1);
    const auto bounds = lr_asymmetry_bounds(params, tau1, tau2);
    const double diff = a_qm - bounds.hi;
    const double rel = a_qm > kRelativeGapFloor ? diff / a_qm : kNaN;
    return Point{a_qm, bounds.lo, bounds.hi, diff, rel};
  };
  const auto rel_gap = [&](double tau1) { return evaluate(tau1).rel_gap; };
  const auto diff = [&](double tau1) { return evaluate(tau1).diff; };

  ScanResult result;
  result.table.columns = {"tau1", "tau2", "a_qm", "a_lr_min", "a_lr_max",
                          "diff", "rel_gap", "spacelike"};
  const auto gaps = evaluate_grid(rel_gap, grid);
  for (double tau1 : grid) {
    const auto pt = evaluate(tau1);
    const double spacelike = tau1 > 0.0 && alpha < window ? 1.0 : 0.0;
    result.table.rows.push_back(
        row_of({tau1, alpha * tau1, pt.a_qm, pt.lo, pt.hi, pt.diff, pt.rel_gap, spacelike}));
  }

  if (const auto best = locate_extremum(rel_gap, grid, gaps, Direction::Maximize,
                                        spec.refine_iterations)) {
    const auto pt = evaluate(best->first);
    ExtremumResult ex;
    ex.location = best->first;
    ex.value = best->second;
    ex.context = {{"alpha", alpha},
                  {"tau1", best->first},
                  {"tau2", alpha * best->first},
                  {"a_qm", pt.a_qm},
                  {"a_lr_max", pt.hi},
                  {"a_lr_min", pt.lo},
                  {"diff", pt.diff},
                  {"rel_gap", pt.rel_gap},
                  {"locality_max_ratio", window},
                  {"spacelike", alpha < window ? 1.0 : 0.0}};
    // tau1 = 0 is always a tie (diff = 0), so the window starts just after it.
    if (const auto edge = region_upper_edge(diff, grid, grid[1])) {
      ex.context.emplace_back("incompatibility_upper_edge", *edge);
    }
    result.maximum = ex;
  }
  return result;
}

namespace {

ScanResult wigner_theta_scan(const ScanSpec& spec) {
  const auto grid = spec.grid();
  const auto w = [](double theta) { return wigner_W_spin(theta).w; };
  ScanResult result;
  result.table.columns = {"theta", "p_ab", "p_ac", "p_cb", "w"};
  for (double theta : grid) {
    const auto v = wigner_W_spin(theta);
    result.table.rows.push_back(row_of({theta, v.p_ab, v.p_ac, v.p_cb, v.w}));
  }
  const auto values = evaluate_grid(w, grid);
  if (const auto best =
          locate_extremum(w, grid, values, Direction::Maximize, spec.refine_iterations)) {
    const auto v = wigner_W_spin(best->first);
    result.maximum = ExtremumResult{
        best->first, best->second, {{"p_ab", v.p_ab}, {"p_ac", v.p_ac}, {"p_cb", v.p_cb}}};
  }
  return result;
}

}  // namespace

ScanResult wigner_scan(const DecayParams& params, const ScanSpec& spec,
                       const WignerConfig& config) {
  if (spec.variable == ScanVariable::WignerTheta) return wigner_theta_scan(spec);
  config.validate();
  const auto grid = spec.grid();
  const auto w = [&](double tau) { return wigner_W_kaon(params, tau, config).w; };

  ScanResult result;
  result.table.columns = {"tau", "tau1", "tau2", "tau3", "p12", "p13", "p32", "w"};
  for (double tau : grid) {
    const auto v = wigner_W_kaon(params, tau, config);
    result.table.rows.push_back(row_of({tau, v.tau1, v.tau2, v.tau3, v.p12, v.p13, v.p32, v.w}));
  }
  const auto values = evaluate_grid(w, grid);
  if (const auto best =
          locate_extremum(w, grid, values, Direction::Maximize, spec.refine_iterations)) {
    const auto v = wigner_W_kaon(params, best->first, config);
    result.maximum = ExtremumResult{best->first,
                                    best->second,
                                    {{"p", config.p},
                                     {"tau1", v.tau1},
                                     {"tau2", v.tau2},
                                     {"tau3", v.tau3},
                                     {"p12", v.p12},
                                     {"p13", v.p13},
                                     {"p32", v.p32},
                                     {"locality_compliant",
                                      config.locality_compliant(params) ? 1.0 : 0.0}}};
  }
  return result;
}

ScanResult chsh_scan(const DecayParams& params, const ScanSpec& spec, const CHSHConfig& config) {
  config.validate();
  const auto grid = spec.grid();
  const auto s = [&](double tau) { return chsh_S(params, tau, config).s; };

  ScanResult result;
  result.table.columns = {"tau", "s", "p13", "p14", "p23", "p24", "single2", "single3"};
  for (double tau : grid) {
    const auto v = chsh_S(params, tau, config);
    result.table.rows.push_back(
        row_of({tau, v.s, v.p13, v.p14, v.p23, v.p24, v.single2, v.single3}));
  }
  const auto values = evaluate_grid(s, grid);

  const auto describe = [&](double tau, double value) {
    const auto v = chsh_S(params, tau, config);
    return ExtremumResult{tau,
                          value,
                          {{"p", config.p},
                           {"renormalized", config.renormalized ? 1.0 : 0.0},
                           {"p13", v.p13},
                           {"p14", v.p14},
                           {"p23", v.p23},
                           {"p24", v.p24},
                           {"single2", v.single2},
                           {"single3", v.single3},
                           {"locality_compliant", config.locality_compliant(params) ? 1.0 : 0.0}}};
  };
  if (const auto lo =
          locate_extremum(s, grid, values, Direction::Minimize, spec.refine_iterations)) {
    auto ex = describe(lo->first, lo->second);
    const auto below = [&](double tau) { return -1.0 - s(tau); };
    if (const auto edge = region_upper_edge(below, grid, grid.front())) {
      ex.context.emplace_back("violation_upper_edge", *edge);
    }
    result.minimum = ex;
  }
  if (const auto hi =
          locate_extremum(s, grid, values, Direction::Maximize, spec.refine_iterations)) {
    result.maximum = describe(hi->first, hi->second);
  }
  return result;
}

std::string extremum_to_json(const ExtremumResult& result, int significant_digits) {
  const auto number = [&](double x) -> nlohmann::ordered_json {
    if (std::isnan(x)) return nullptr;
    if (significant_digits <= 0) return x;
    return std::stod(fmt::format("{:.{}g}", x, significant_digits));
  };
  nlohmann::ordered_json j;
  j["location"] = number(result.location);
  j["value"] = number(result.value);
  nlohmann::ordered_json ctx = nlohmann::ordered_json::object();
  for (const auto& [k, v] : result.context) ctx[k] = number(v);
  j["context"] = ctx;
  return j.dump(2);
}

}  // namespace kaonbell
