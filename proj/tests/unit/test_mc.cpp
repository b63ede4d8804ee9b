#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "kaonbell/errors.hpp"
#include "kaonbell/mc.hpp"

using namespace kaonbell;

namespace {

const DecayParams kP = DecayParams::defaults();

SamplerConfig mid_box(std::uint64_t seed, std::uint64_t n, unsigned threads = 1) {
  SamplerConfig c;
  c.seed = seed;
  c.n_samples = n;
  c.tau1 = 0.5;
  c.tau2 = 1.0;
  c.model = feasibility_box(kP, 0.5, 1.0).midpoint();
  c.threads = threads;
  return c;
}

}  // namespace

TEST_CASE("uniform stream is pinned to the generator contract") {
  std::vector<double> u(3);
  fill_uniforms(42, 0, u);
  std::seed_seq seq{42u, 0u, 0u, 0u};
  std::mt19937_64 eng(seq);
  for (double x : u) CHECK(x == static_cast<double>(eng() >> 11) * 0x1.0p-53);

  // A window that straddles a block boundary equals the concatenation.
  std::vector<double> all(kBlockSize + 10), window(20);
  fill_uniforms(9, 0, all);
  fill_uniforms(9, kBlockSize - 10, window);
  for (std::size_t i = 0; i < window.size(); ++i) CHECK(window[i] == all[kBlockSize - 10 + i]);
}

TEST_CASE("same seed, same counts; thread count never matters") {
  const auto a = sample_pairs(kP, mid_box(123, 300'000, 1));
  const auto b = sample_pairs(kP, mid_box(123, 300'000, 1));
  const auto c = sample_pairs(kP, mid_box(123, 300'000, 4));
  const auto d = sample_pairs(kP, mid_box(124, 300'000, 1));
  CHECK(a.counts == b.counts);
  CHECK(a.counts == c.counts);
  CHECK(a.counts != d.counts);
  CHECK(a.n() == 300'000);
}

TEST_CASE("frequencies and chi-square") {
  const auto cfg = mid_box(2024, 400'000);
  const auto t = sample_pairs(kP, cfg);
  const auto expected = pair_state_table(kP, cfg.model, cfg.tau1, cfg.tau2);
  for (std::size_t row = 1; row <= 18; ++row) {
    const double sigma = std::sqrt(expected.P(row) * (1 - expected.P(row)) / t.n());
    CHECK(std::abs(t.frequency(row) - expected.P(row)) <= 5 * sigma + 1e-12);
  }
  const auto chi = chi_square_test(t, expected);
  CHECK(chi.p_value > 1e-4);
  CHECK(chi.degrees_of_freedom > 0);

  auto shifted = expected;
  shifted.probabilities[0] += 0.01;
  shifted.probabilities[4] -= 0.01;
  CHECK(chi_square_test(t, shifted).p_value < 1e-6);
}

TEST_CASE("empirical observables track the closed forms") {
  const auto cfg = mid_box(77, 400'000);
  const auto obs = empirical_observables(sample_pairs(kP, cfg));
  const double a = lr_asymmetry(kP, cfg.model, cfg.tau1, cfg.tau2);
  CHECK(std::abs(obs.asymmetry.value - a) < 5 * obs.asymmetry.standard_error);
  const double single = qm_single(kP, Strangeness::K0, cfg.tau1);
  CHECK(std::abs(obs.left_k0.value - single) < 5 * obs.left_k0.standard_error);
  const double cp = qm_joint_cp(kP, CPState::KL, CPState::KS, cfg.tau1, cfg.tau2).value;
  CHECK(std::abs(obs.kl_ks.value - cp) < 5 * obs.kl_ks.standard_error);
}

TEST_CASE("sampler validation") {
  auto cfg = mid_box(1, 1000);
  cfg.model.p111_norm = 5.0;
  CHECK_THROWS_AS(sample_pairs(kP, cfg), InfeasibleError);
  cfg = mid_box(1, 0);
  CHECK_THROWS_AS(sample_pairs(kP, cfg), DomainError);
  cfg = mid_box(1, 1000);
  cfg.tau1 = 2.0;
  CHECK_THROWS_AS(sample_pairs(kP, cfg), OrderingError);
}

TEST_CASE("JSON echo") {
  const auto j = empirical_table_to_json(sample_pairs(kP, mid_box(5, 1000)));
  CHECK(j.find(std::string(kGeneratorName)) != std::string::npos);
  CHECK(j.find("\"counts\"") != std::string::npos);
}
