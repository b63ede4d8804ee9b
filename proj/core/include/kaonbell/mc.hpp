#pragma once

// Monte Carlo realization of the 18-state hidden-variable measure.
//
// Generator contract: samples are drawn in fixed blocks of kBlockSize pairs.
// Block b uses its own std::mt19937_64 seeded with
//   std::seed_seq{lo32(seed), hi32(seed), lo32(b), hi32(b)}
// and every pair consumes exactly one 64-bit output, mapped to [0, 1) via its
// top 53 bits. Both std::seed_seq and std::mt19937_64 are fully specified, so a
// configuration produces the same table on every platform and for every
// thread count: workers only decide which blocks they process.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "kaonbell/kinematics.hpp"
#include "kaonbell/lr.hpp"

namespace kaonbell {

inline constexpr std::string_view kGeneratorName = "mt19937_64/seed_seq-blocks";
inline constexpr std::uint64_t kBlockSize = 1u << 16;

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::uint64_t n_samples = 1'000'000;
  double tau1 = 0.0;
  double tau2 = 0.0;
  LRModelParams model;
  /// Worker threads; 0 picks the hardware concurrency. Never affects counts.
  unsigned threads = 0;

  void validate() const;
};

struct EmpiricalTable {
  SamplerConfig config;
  std::array<std::uint64_t, 18> counts{};

  std::uint64_t n() const;
  /// 1-based row, as in the pair table.
  double frequency(std::size_t row) const;
  /// Binomial standard error sqrt(f (1 - f) / n).
  double standard_error(std::size_t row) const;
};

/// Uniform [0, 1) draws for pairs [first, first + count) of the stream.
/// Exposed so tests can pin the generator contract.
void fill_uniforms(std::uint64_t seed, std::uint64_t first, std::span<double> out);

/// Samples n pairs from pair_state_table(params, model, tau1, tau2) using one
/// uniform per pair against the cumulative distribution in row order.
/// Throws InfeasibleError for an infeasible model.
EmpiricalTable sample_pairs(const DecayParams& params, const SamplerConfig& config);

struct Estimate {
  double value = 0.0;
  double standard_error = 0.0;
};

struct EmpiricalObservables {
  Estimate k0_k0bar, k0bar_k0, k0_k0, k0bar_k0bar;
  Estimate kl_ks, ks_kl;
  Estimate left_k0, left_k0bar, left_ks, left_kl;
  Estimate right_k0, right_k0bar, right_ks, right_kl;
  /// (unlike - like) / (unlike + like) with error sqrt((1 - A^2) / N_undecayed).
  Estimate asymmetry;
};

/// Reads joint and single probabilities off the counts by summing table rows.
EmpiricalObservables empirical_observables(const EmpiricalTable& table);

struct ChiSquareResult {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
};

/// Pearson chi-square of the counts against `expected`. Cells with zero
/// expectation are excluded unless they were hit, which yields p = 0.
ChiSquareResult chi_square_test(const EmpiricalTable& table, const PairStateTable& expected);

/// JSON with config echo, generator name, counts, frequencies and standard errors.
std::string empirical_table_to_json(const EmpiricalTable& table);

}  // namespace kaonbell
