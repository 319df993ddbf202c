#include "snbound/generic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace snbound {

namespace {

constexpr double kWeightFloor = 1e-6;  // keeps the sampled rank at r

int ceil_div(Index num, int den) { return static_cast<int>((num + den - 1) / den); }

}  // namespace

void SamplerConfig::require_valid() const {
  if (m < 1 || n < 1) throw InvalidInput("SamplerConfig: dimensions must be positive");
  if (r < 1) throw InvalidInput("SamplerConfig: r must be at least 1");
  if (!(r < n)) throw InvalidInput("SamplerConfig: requires r < n");
  if (!(m <= n)) throw InvalidInput("SamplerConfig: requires m <= n (swap parties)");
  if (trials < 1) throw InvalidInput("SamplerConfig: trials must be at least 1");
}

WeightedEnsemble sample_generic_state(Index m, Index n, int r, std::uint64_t seed) {
  if (m < 1 || n < 1 || r < 1) throw InvalidInput("sample_generic_state: bad dimensions");
  if (r > m * n) throw InvalidInput("sample_generic_state: r exceeds m*n");
  Rng rng(seed);

  ToleranceConfig tol;  // defaults; only the degeneracy re-draw uses it
  ComplexMatrix basis(m * n, 0);
  while (basis.cols() < r) {
    // Gaussian columns are independent almost surely; re-draw on the
    // measure-zero degeneracy instead of failing
    basis = gram_orthonormalize(gaussian_matrix(m * n, r, rng), tol);
  }

  std::vector<double> weights(static_cast<size_t>(r));
  double total = 0.0;
  for (double& w : weights) {
    double u = uniform01(rng);
    while (u == 0.0) u = uniform01(rng);
    w = std::max(-std::log(u), kWeightFloor);
    total += w;
  }

  std::vector<WeightedEnsemble::Member> members;
  members.reserve(weights.size());
  for (int k = 0; k < r; ++k)
    members.push_back({weights[static_cast<size_t>(k)] / total,
                       PureState::unflatten(basis.col(k), m, n)});
  return WeightedEnsemble(m, n, std::move(members));
}

TrialResult bound_trial(Index m, Index n, int r, std::uint64_t seed,
                        const ToleranceConfig& tol) {
  SamplerConfig probe{m, n, r, 1, seed};
  probe.require_valid();
  tol.require_valid();

  const WeightedEnsemble e = sample_generic_state(m, n, r, seed);
  TrialResult res;
  res.lower_bound = schmidt_number_lower_bound(e, tol);
  res.rank_T2 = numerical_rank(assemble_T2(e), tol);
  res.t2_full_rank = res.rank_T2 == static_cast<int>(std::min<Index>(r * m, n));
  res.pass = res.lower_bound >= std::min<int>(ceil_div(n, r), static_cast<int>(m));
  return res;
}

TrialSummary run_trials(const SamplerConfig& config, const ToleranceConfig& tol) {
  config.require_valid();
  tol.require_valid();

  TrialSummary summary;
  summary.config = config;
  summary.required_bound =
      std::min<int>(ceil_div(config.n, config.r), static_cast<int>(config.m));
  summary.required_quotient = static_cast<double>(config.n) / config.r;
  summary.min_observed_bound = 0;

  for (int k = 0; k < config.trials; ++k) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(k);
    const TrialResult res = bound_trial(config.m, config.n, config.r, seed, tol);
    if (res.pass)
      ++summary.successes;
    else
      summary.failing_seeds.push_back(seed);
    if (res.t2_full_rank) ++summary.t2_full_rank_count;
    if (summary.min_observed_bound == 0 || res.lower_bound < summary.min_observed_bound)
      summary.min_observed_bound = res.lower_bound;
  }
  std::sort(summary.failing_seeds.begin(), summary.failing_seeds.end());
  return summary;
}

}  // namespace snbound
