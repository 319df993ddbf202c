#include <doctest.h>

#include "snbound/generic.hpp"
#include "support.hpp"

using namespace snbound;

namespace {
const ToleranceConfig tol;
}

TEST_CASE("sampled states are orthonormal spectral decompositions") {
  Rng seeds(404);
  for (int it = 0; it < 20; ++it) {
    const WeightedEnsemble e = sample_generic_state(3, 4, 3, seeds());
    REQUIRE(e.size() == 3);

    double total = 0.0;
    for (Index k = 0; k < e.size(); ++k) {
      total += e.member(k).weight;
      CHECK(e.member(k).weight > 0.0);
      for (Index l = 0; l < e.size(); ++l) {
        const Complex overlap =
            e.member(k).state.flatten().dot(e.member(l).state.flatten());
        CHECK(std::abs(overlap - (k == l ? 1.0 : 0.0)) < 1e-10);
      }
    }
    CHECK(std::abs(total - 1.0) < 1e-12);
    CHECK(e.rank(tol) == 3);
  }
}

TEST_CASE("sampling is deterministic in the seed") {
  const WeightedEnsemble a = sample_generic_state(3, 9, 3, 12345);
  const WeightedEnsemble b = sample_generic_state(3, 9, 3, 12345);
  REQUIRE(a.size() == b.size());
  for (Index k = 0; k < a.size(); ++k) {
    CHECK(a.member(k).weight == b.member(k).weight);
    CHECK(a.member(k).state.coeffs() == b.member(k).state.coeffs());
  }

  const WeightedEnsemble c = sample_generic_state(3, 9, 3, 12346);
  CHECK(a.member(0).state.coeffs() != c.member(0).state.coeffs());
}

TEST_CASE("r = 1 gives a single random pure state") {
  const WeightedEnsemble e = sample_generic_state(2, 2, 1, 99);
  REQUIRE(e.size() == 1);
  CHECK(e.member(0).weight == doctest::Approx(1.0));
  CHECK_THROWS_AS(sample_generic_state(2, 2, 5, 99), InvalidInput);
}

TEST_CASE("T2 of sampled (3,9,3) states has full rank over many seeds") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const WeightedEnsemble e = sample_generic_state(3, 9, 3, seed);
    CHECK(numerical_rank(assemble_T2(e), tol) == 9);
  }
}

TEST_CASE("single trials match the generic bound") {
  CHECK(bound_trial(3, 9, 3, 7, tol).pass);
  CHECK(bound_trial(3, 9, 3, 7, tol).lower_bound >= 3);
  CHECK(bound_trial(2, 6, 2, 7, tol).lower_bound >= 2);
  CHECK(bound_trial(4, 4, 2, 7, tol).lower_bound >= 2);
}

TEST_CASE("trial regime is enforced") {
  CHECK_THROWS_AS(bound_trial(3, 3, 3, 0, tol), InvalidInput);   // needs r < n
  CHECK_THROWS_AS(bound_trial(9, 3, 2, 0, tol), InvalidInput);   // needs m <= n
  CHECK_THROWS_AS(run_trials(SamplerConfig{3, 3, 0, 1, 0}, tol), InvalidInput);
  CHECK_THROWS_AS(run_trials(SamplerConfig{3, 9, 3, 0, 0}, tol), InvalidInput);
}

TEST_CASE("monte carlo summaries") {
  const SamplerConfig config{3, 9, 3, 50, 7};
  const TrialSummary s = run_trials(config, tol);
  CHECK(s.successes + static_cast<int>(s.failing_seeds.size()) == config.trials);
  CHECK(s.successes == 50);
  CHECK(s.failing_seeds.empty());
  CHECK(s.min_observed_bound >= 3);
  CHECK(s.required_bound == 3);
  CHECK(s.required_quotient == doctest::Approx(3.0));
  CHECK(s.t2_full_rank_count == 50);

  // single-trial bookkeeping
  const TrialSummary one = run_trials(SamplerConfig{2, 6, 2, 1, 3}, tol);
  CHECK(one.successes + static_cast<int>(one.failing_seeds.size()) == 1);

  // identical configs give identical summaries
  const TrialSummary again = run_trials(config, tol);
  CHECK(again.successes == s.successes);
  CHECK(again.failing_seeds == s.failing_seeds);
  CHECK(again.min_observed_bound == s.min_observed_bound);
  CHECK(again.t2_full_rank_count == s.t2_full_rank_count);
}
