#include "kaonbell/mc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "kaonbell/errors.hpp"

namespace kaonbell {

namespace {

std::mt19937_64 block_generator(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return std::mt19937_64(seq);
}

double to_unit(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

// Cumulative distribution in row order, with the final bin stretched to the
// last row that carries probability so a draw can never fall off the end.
struct Cdf {
  std::array<double, 18> upper{};
  std::size_t last_nonzero = 0;

  explicit Cdf(const PairStateTable& t) {
    double acc = 0.0;
    for (std::size_t i = 0; i < 18; ++i) {
      acc += t.probabilities[i];
      upper[i] = acc;
      if (t.probabilities[i] > 0.0) last_nonzero = i;
    }
    for (std::size_t i = last_nonzero; i < 18; ++i) upper[i] = acc;
    total = acc;
  }

  std::size_t pick(double u) const {
    const double x = u * total;
    const auto it = std::upper_bound(upper.begin(), upper.end(), x);
    return std::min(static_cast<std::size_t>(it - upper.begin()), last_nonzero);
  }

  double total = 0.0;
};

Estimate proportion(std::uint64_t hits, std::uint64_t n) {
  const double f = static_cast<double>(hits) / static_cast<double>(n);
  return {f, std::sqrt(f * (1.0 - f) / static_cast<double>(n))};
}

}  // namespace

void SamplerConfig::validate() const {
  if (n_samples < 1) throw DomainError("sampler needs n_samples >= 1");
  if (!(tau1 >= 0.0) || !(tau2 >= 0.0)) throw DomainError("sampler times must be non-negative");
  if (tau1 > tau2) {
    throw OrderingError(fmt::format("sampler needs tau1 <= tau2, got ({}, {})", tau1, tau2));
  }
}

std::uint64_t EmpiricalTable::n() const {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

double EmpiricalTable::frequency(std::size_t row) const {
  return static_cast<double>(counts.at(row - 1)) / static_cast<double>(n());
}

double EmpiricalTable::standard_error(std::size_t row) const {
  const double f = frequency(row);
  return std::sqrt(f * (1.0 - f) / static_cast<double>(n()));
}

void fill_uniforms(std::uint64_t seed, std::uint64_t first, std::span<double> out) {
  std::size_t written = 0;
  std::uint64_t index = first;
  while (written < out.size()) {
    const std::uint64_t block = index / kBlockSize;
    const std::uint64_t offset = index % kBlockSize;
    auto gen = block_generator(seed, block);
    gen.discard(offset);
    const std::uint64_t take = std::min<std::uint64_t>(kBlockSize - offset, out.size() - written);
    for (std::uint64_t k = 0; k < take; ++k) out[written++] = to_unit(gen());
    index += take;
  }
}

EmpiricalTable sample_pairs(const DecayParams& params, const SamplerConfig& config) {
  config.validate();
  const Cdf cdf(pair_state_table(params, config.model, config.tau1, config.tau2));

  const std::uint64_t blocks = (config.n_samples + kBlockSize - 1) / kBlockSize;
  const unsigned hw = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t workers = std::min<std::uint64_t>(hw, blocks);

  std::vector<std::array<std::uint64_t, 18>> partial(workers);
  const auto run = [&](std::uint64_t w) {
    auto& counts = partial[w];
    counts.fill(0);
    for (std::uint64_t b = w; b < blocks; b += workers) {
      auto gen = block_generator(config.seed, b);
      const std::uint64_t begin = b * kBlockSize;
      const std::uint64_t end = std::min(config.n_samples, begin + kBlockSize);
      for (std::uint64_t k = begin; k < end; ++k) ++counts[cdf.pick(to_unit(gen()))];
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  EmpiricalTable table;
  table.config = config;
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < 18; ++i) table.counts[i] += p[i];
  }
  return table;
}

EmpiricalObservables empirical_observables(const EmpiricalTable& table) {
  const std::uint64_t n = table.n();
  const auto joint = [&](Outcome left, Outcome right) {
    std::uint64_t hits = 0;
    for (std::size_t i = 0; i < 18; ++i) {
      if (state_matches(kPairRows[i].left, left) && state_matches(kPairRows[i].right, right)) {
        hits += table.counts[i];
      }
    }
    return hits;
  };
  const auto single = [&](Side side, Outcome o) {
    std::uint64_t hits = 0;
    for (std::size_t i = 0; i < 18; ++i) {
      const auto state = side == Side::Left ? kPairRows[i].left : kPairRows[i].right;
      if (state_matches(state, o)) hits += table.counts[i];
    }
    return proportion(hits, n);
  };

  using S = Strangeness;
  using C = CPState;
  const auto n_k0_k0bar = joint(S::K0, S::K0bar);
  const auto n_k0bar_k0 = joint(S::K0bar, S::K0);
  const auto n_k0_k0 = joint(S::K0, S::K0);
  const auto n_k0bar_k0bar = joint(S::K0bar, S::K0bar);

  EmpiricalObservables o;
  o.k0_k0bar = proportion(n_k0_k0bar, n);
  o.k0bar_k0 = proportion(n_k0bar_k0, n);
  o.k0_k0 = proportion(n_k0_k0, n);
  o.k0bar_k0bar = proportion(n_k0bar_k0bar, n);
  o.kl_ks = proportion(joint(C::KL, C::KS), n);
  o.ks_kl = proportion(joint(C::KS, C::KL), n);
  o.left_k0 = single(Side::Left, S::K0);
  o.left_k0bar = single(Side::Left, S::K0bar);
  o.left_ks = single(Side::Left, C::KS);
  o.left_kl = single(Side::Left, C::KL);
  o.right_k0 = single(Side::Right, S::K0);
  o.right_k0bar = single(Side::Right, S::K0bar);
  o.right_ks = single(Side::Right, C::KS);
  o.right_kl = single(Side::Right, C::KL);

  const double unlike = static_cast<double>(n_k0_k0bar + n_k0bar_k0);
  const double like = static_cast<double>(n_k0_k0 + n_k0bar_k0bar);
  const double undecayed = unlike + like;
  if (undecayed > 0.0) {
    const double a = (unlike - like) / undecayed;
    o.asymmetry = {a, std::sqrt(std::max(0.0, 1.0 - a * a) / undecayed)};
  } else {
    o.asymmetry = {std::numeric_limits<double>::quiet_NaN(),
                   std::numeric_limits<double>::quiet_NaN()};
  }
  return o;
}

ChiSquareResult chi_square_test(const EmpiricalTable& table, const PairStateTable& expected) {
  const double n = static_cast<double>(table.n());
  ChiSquareResult r;
  int cells = 0;
  for (std::size_t i = 0; i < 18; ++i) {
    const double e = expected.probabilities[i] * n;
    const double obs = static_cast<double>(table.counts[i]);
    if (e <= 0.0) {
      if (obs > 0.0) {
        r.statistic = std::numeric_limits<double>::infinity();
        r.degrees_of_freedom = std::max(cells - 1, 1);
        r.p_value = 0.0;
        return r;
      }
      continue;
    }
    r.statistic += (obs - e) * (obs - e) / e;
    ++cells;
  }
  r.degrees_of_freedom = cells - 1;
  if (r.degrees_of_freedom < 1) {
    r.p_value = 1.0;
    return r;
  }
  const boost::math::chi_squared dist(r.degrees_of_freedom);
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  return r;
}

std::string empirical_table_to_json(const EmpiricalTable& table) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json cfg;
  cfg["seed"] = table.config.seed;
  cfg["n_samples"] = table.config.n_samples;
  cfg["tau1"] = table.config.tau1;
  cfg["tau2"] = table.config.tau2;
  cfg["model"] = {{"p111_norm", table.config.model.p111_norm},
                  {"p112_norm", table.config.model.p112_norm},
                  {"p333_norm", table.config.model.p333_norm},
                  {"p334_norm", table.config.model.p334_norm}};
  j["config"] = cfg;
  j["generator"] = std::string(kGeneratorName);
  j["block_size"] = kBlockSize;
  j["counts"] = table.counts;
  std::vector<double> freq(18), se(18);
  for (std::size_t row = 1; row <= 18; ++row) {
    freq[row - 1] = table.frequency(row);
    se[row - 1] = table.standard_error(row);
  }
  j["frequencies"] = freq;
  j["standard_errors"] = se;
  return j.dump(2);
}

}  // namespace kaonbell
