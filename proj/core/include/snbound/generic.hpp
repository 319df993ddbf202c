#ifndef SNBOUND_GENERIC_HPP
#define SNBOUND_GENERIC_HPP

#include <cstdint>
#include <vector>

#include "snbound/bounds.hpp"
#include "snbound/random.hpp"
#include "snbound/states.hpp"

namespace snbound {

/// A Monte-Carlo run over rank-r states on m x n: trials states with
/// consecutive seeds starting at seed. Requires the r < n, m <= n regime
/// (swap parties yourself for m > n).
struct SamplerConfig {
  Index m = 0;
  Index n = 0;
  int r = 0;
  int trials = 1;
  std::uint64_t seed = 0;

  void require_valid() const;
};

struct TrialResult {
  int lower_bound = 0;
  int rank_T2 = 0;
  bool t2_full_rank = false;  // rank_T2 == min(r*m, n)
  bool pass = false;          // lower_bound >= min(ceil(n/r), m)
};

struct TrialSummary {
  SamplerConfig config;
  int successes = 0;
  std::vector<std::uint64_t> failing_seeds;  // expected empty
  int min_observed_bound = 0;
  int t2_full_rank_count = 0;
  int required_bound = 0;       // min(ceil(n/r), m)
  double required_quotient = 0; // raw n/r
};

/// Rank-r state in spectral form: r orthonormalized complex-Gaussian
/// pure states with positive normalized weights. Deterministic given the
/// seed. Requires r <= m*n.
WeightedEnsemble sample_generic_state(Index m, Index n, int r, std::uint64_t seed);

/// Samples one state and checks its lower bound against min(ceil(n/r), m).
TrialResult bound_trial(Index m, Index n, int r, std::uint64_t seed,
                        const ToleranceConfig& tol);

/// Runs config.trials trials with seeds seed, seed+1, ...; the summary is
/// an order-independent reduction, so identical configs give identical
/// summaries.
TrialSummary run_trials(const SamplerConfig& config, const ToleranceConfig& tol);

}  // namespace snbound

#endif
