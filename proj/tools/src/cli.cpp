#include "kaonbell_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "kaonbell/bell.hpp"
#include "kaonbell/config.hpp"
#include "kaonbell/cplear.hpp"
#include "kaonbell/csv.hpp"
#include "kaonbell/errors.hpp"
#include "kaonbell/lr.hpp"
#include "kaonbell/mc.hpp"
#include "kaonbell/qm.hpp"
#include "kaonbell/scan.hpp"

namespace kaonbell::cli {
namespace {

Outcome parse_outcome(const std::string& s) {
  if (s == "K0") return Strangeness::K0;
  if (s == "K0bar") return Strangeness::K0bar;
  if (s == "KS") return CPState::KS;
  if (s == "KL") return CPState::KL;
  throw DomainError("unknown outcome '" + s + "' (expected K0, K0bar, KS or KL)");
}

Strangeness parse_species(const std::string& s) {
  const auto o = parse_outcome(s);
  if (!std::holds_alternative<Strangeness>(o)) throw DomainError("species must be K0 or K0bar");
  return std::get<Strangeness>(o);
}

void apply_range(ScanSpec& spec, const std::string& range) {
  if (range.empty()) return;
  const auto colon = range.find(':');
  if (colon == std::string::npos) throw DomainError("--range expects lo:hi, got '" + range + "'");
  try {
    std::size_t used = 0;
    spec.lo = std::stod(range.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(range);
    const auto rest = range.substr(colon + 1);
    spec.hi = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(range);
  } catch (const std::logic_error&) {
    throw DomainError("--range expects lo:hi, got '" + range + "'");
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw DomainError("failed writing '" + path + "'");
}

struct Scan {
  std::string range;
  std::size_t steps = 2000;
  std::string out;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--range", range, "Scan interval lo:hi");
    cmd->add_option("--steps", steps, "Grid points")->capture_default_str();
    cmd->add_option("--out", out, "Write the scan table as CSV");
  }

  ScanSpec spec(ScanVariable variable) const {
    ScanSpec s;
    s.variable = variable;
    s.steps = steps;
    apply_range(s, range);
    return s;
  }

  void finish(const ScanResult& r, const std::optional<ExtremumResult>& shown,
              std::ostream& out_stream) const {
    if (!out.empty()) write_file(out, to_csv(r.table));
    if (shown)
      out_stream << extremum_to_json(*shown, 6) << "\n";
    else
      out_stream << "null\n";
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum-mechanical and local-realistic predictions for entangled neutral kaons",
               "kaonbell"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "Decay-constant file (key = value lines)")
      ->envname("KAONBELL_CONFIG");

  std::function<void(const DecayParams&)> action;

  // qm-prob
  auto* qm_prob = app.add_subcommand("qm-prob", "QM joint detection probability");
  std::string left = "K0", right = "K0bar";
  double tau1 = 0.0, tau2 = 0.0;
  qm_prob->add_option("--left", left, "K0, K0bar, KS or KL at tau1")->capture_default_str();
  qm_prob->add_option("--right", right, "K0, K0bar, KS or KL at tau2")->capture_default_str();
  qm_prob->add_option("--tau1", tau1, "Left detection time")->required();
  qm_prob->add_option("--tau2", tau2, "Right detection time")->required();
  qm_prob->callback([&] {
    action = [&](const DecayParams& p) {
      out << format_number(qm_joint(p, parse_outcome(left), parse_outcome(right), tau1, tau2).value)
          << "\n";
    };
  });

  // asymmetry
  auto* asym = app.add_subcommand("asymmetry", "QM strangeness asymmetry at a time difference");
  double dtau = 0.0;
  asym->add_option("--dtau", dtau, "tau2 - tau1")->required();
  asym->callback([&] {
    action = [&](const DecayParams& p) { out << format_number(qm_asymmetry(p, dtau)) << "\n"; };
  });

  // lr-bounds
  auto* bounds = app.add_subcommand("lr-bounds", "Local-realistic asymmetry interval");
  bounds->add_option("--tau1", tau1, "Left detection time")->required();
  bounds->add_option("--tau2", tau2, "Right detection time")->required();
  bounds->callback([&] {
    action = [&](const DecayParams& p) {
      const auto b = lr_asymmetry_bounds(p, tau1, tau2);
      out << "[" << format_number(b.lo) << ", " << format_number(b.hi) << "]\n";
    };
  });

  // discrepancy-scan
  auto* disc = app.add_subcommand("discrepancy-scan", "QM vs LR asymmetry along tau2 = ratio tau1");
  Scan disc_scan;
  double ratio = 1.5;
  disc_scan.add_to(disc);
  disc->add_option("--ratio", ratio, "tau2 / tau1")->capture_default_str();
  disc->callback([&] {
    action = [&](const DecayParams& p) {
      auto spec = disc_scan.spec(ScanVariable::Tau1WithRatio);
      spec.ratio_or_p = ratio;
      const auto r = asymmetry_discrepancy_scan(p, spec);
      disc_scan.finish(r, r.maximum, out);
    };
  });

  // wigner-scan
  auto* wig = app.add_subcommand("wigner-scan", "Wigner inequality along the time pattern");
  Scan wig_scan;
  double wig_p = 1.5;
  bool theta = false;
  std::string wig_species = "K0bar";
  wig_scan.add_to(wig);
  wig->add_option("--p", wig_p, "tau2 / tau1")->capture_default_str();
  wig->add_option("--species", wig_species, "K0 or K0bar")->capture_default_str();
  wig->add_flag("--theta", theta, "Scan the spin-singlet angle over [0, pi] instead");
  wig->callback([&] {
    action = [&](const DecayParams& p) {
      auto spec = wig_scan.spec(theta ? ScanVariable::WignerTheta : ScanVariable::WignerTau);
      if (theta && wig_scan.range.empty()) spec.hi = std::numbers::pi;
      const auto r = wigner_scan(p, spec, WignerConfig{wig_p, parse_species(wig_species)});
      wig_scan.finish(r, r.maximum, out);
    };
  });

  // chsh-scan
  auto* chsh = app.add_subcommand("chsh-scan", "CHSH combination along the time pattern");
  Scan chsh_scan_opts;
  double chsh_p = 1.0;
  bool renormalized = false, stable = false, show_max = false;
  std::string chsh_species = "K0bar";
  chsh_scan_opts.add_to(chsh);
  chsh->add_option("--p", chsh_p, "Offset of the first time in units of tau")->capture_default_str();
  chsh->add_option("--species", chsh_species, "K0 or K0bar")->capture_default_str();
  chsh->add_flag("--renormalized", renormalized, "Divide joints by the undecayed probability");
  chsh->add_flag("--stable", stable, "Use the stable-kaon limit");
  chsh->add_flag("--max", show_max, "Report the maximum instead of the minimum");
  chsh->callback([&] {
    action = [&](const DecayParams& p) {
      const DecayParams used = stable ? [&] {
        auto s = DecayParams::stable_limit();
        s.delta_m = p.delta_m;
        s.velocity = p.velocity;
        return s;
      }()
                                      : p;
      const auto r = chsh_scan(used, chsh_scan_opts.spec(ScanVariable::ChshTau),
                               CHSHConfig{chsh_p, renormalized, parse_species(chsh_species)});
      chsh_scan_opts.finish(r, show_max ? r.maximum : r.minimum, out);
    };
  });

  // mc-validate
  auto* mcv = app.add_subcommand("mc-validate", "Sample the LR pair table and test it");
  SamplerConfig sampler;
  sampler.seed = 1;
  sampler.tau1 = 0.5;
  sampler.tau2 = 1.0;
  std::string model_path, mc_out;
  std::vector<double> fractions{0.5, 0.5, 0.5, 0.5};
  mcv->add_option("--seed", sampler.seed, "Generator seed")->capture_default_str();
  mcv->add_option("--n", sampler.n_samples, "Number of pairs")->capture_default_str();
  mcv->add_option("--tau1", sampler.tau1, "Left detection time")->capture_default_str();
  mcv->add_option("--tau2", sampler.tau2, "Right detection time")->capture_default_str();
  mcv->add_option("--threads", sampler.threads, "Worker threads (0 = all cores)");
  mcv->add_option("--fractions", fractions,
                  "Position of p111, p112, p333, p334 inside their intervals (0..1)")
      ->expected(4)
      ->delimiter(',');
  mcv->add_option("--model", model_path, "Model JSON (overrides times and fractions)");
  mcv->add_option("--out", mc_out, "Write the empirical table as JSON");
  mcv->callback([&] {
    action = [&](const DecayParams& p) {
      if (!model_path.empty()) {
        std::ifstream f(model_path);
        if (!f) throw DomainError("cannot read model file '" + model_path + "'");
        std::stringstream buf;
        buf << f.rdbuf();
        const auto rec = model_from_json(p, buf.str());
        sampler.model = rec.model;
        sampler.tau1 = rec.tau1;
        sampler.tau2 = rec.tau2;
      } else {
        sampler.model = feasibility_box(p, sampler.tau1, sampler.tau2)
                            .at(fractions[0], fractions[1], fractions[2], fractions[3]);
      }
      const auto table = sample_pairs(p, sampler);
      const auto expected = pair_state_table(p, sampler.model, sampler.tau1, sampler.tau2);
      out << "row,count,frequency,expected,z\n";
      double worst = 0.0;
      for (std::size_t row = 1; row <= 18; ++row) {
        const double e = expected.P(row);
        const double sigma = std::sqrt(e * (1.0 - e) / static_cast<double>(table.n()));
        const double diff = table.frequency(row) - e;
        const double z = sigma > 0 ? diff / sigma : (diff == 0 ? 0.0 : INFINITY);
        worst = std::max(worst, std::abs(z));
        out << row << "," << table.counts[row - 1] << "," << format_number(table.frequency(row))
            << "," << format_number(e) << "," << format_number(z) << "\n";
      }
      const auto chi = chi_square_test(table, expected);
      out << "chi2 " << format_number(chi.statistic) << " dof " << chi.degrees_of_freedom
          << " p " << format_number(chi.p_value) << "\n";
      const bool ok = worst <= 4.0 && chi.p_value > 0.001;
      out << (ok ? "PASS" : "FAIL") << "\n";
      if (!mc_out.empty()) write_file(mc_out, empirical_table_to_json(table));
      if (!ok) throw std::logic_error("check failed");
    };
  });

  // cplear-compare
  auto* cpl = app.add_subcommand("cplear-compare", "Compare with the published CPLEAR asymmetries");
  std::string cpl_out;
  cpl->add_option("--out", cpl_out, "Write the report as JSON");
  cpl->callback([&] {
    action = [&](const DecayParams& p) {
      const auto report = cplear_compare(p);
      out << cplear_report_text(report);
      if (!cpl_out.empty()) write_file(cpl_out, cplear_report_json(report));
    };
  });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "kaonbell: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    const DecayParams params =
        config_path.empty() ? DecayParams::defaults() : load_decay_params(config_path);
    action(params);
    return kExitOk;
  } catch (const InfeasibleError& e) {
    err << "kaonbell: infeasible model: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const DomainError& e) {
    err << "kaonbell: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::logic_error&) {
    return kExitCheckFailed;
  }
}

}  // namespace kaonbell::cli
