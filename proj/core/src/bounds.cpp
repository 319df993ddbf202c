#include "snbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace snbound {

namespace {

int ceil_div(int num, int den) { return (num + den - 1) / den; }

}  // namespace

ComplexMatrix assemble_T1(const WeightedEnsemble& e) {
  const Index m = e.dim_a(), n = e.dim_b(), t = e.size();
  ComplexMatrix T1(m, t * n);
  for (Index k = 0; k < t; ++k)
    T1.block(0, k * n, m, n) = e.member(k).state.coeffs();
  return T1;
}

ComplexMatrix assemble_T2(const WeightedEnsemble& e) {
  const Index m = e.dim_a(), n = e.dim_b(), t = e.size();
  ComplexMatrix T2(t * m, n);
  for (Index k = 0; k < t; ++k)
    T2.block(k * m, 0, m, n) = e.member(k).state.coeffs();
  return T2;
}

SubspaceBasis subspace_LA(const WeightedEnsemble& e, const ToleranceConfig& tol) {
  return {e.dim_a(), left_null_space(assemble_T1(e), tol)};
}

SubspaceBasis subspace_LB(const WeightedEnsemble& e, const ToleranceConfig& tol) {
  return {e.dim_b(), null_space(assemble_T2(e), tol)};
}

ComplexMatrix hermitian_form_matrix(const DensityMatrix& rho,
                                    const ComplexVector& a) {
  require_finite(a, "hermitian_form_matrix: a");
  if (a.size() != rho.dim_a())
    throw InvalidInput("hermitian_form_matrix: vector dimension differs from m");
  if (std::abs(a.norm() - 1.0) > 1e-10)
    throw InvalidInput("hermitian_form_matrix: vector not normalized");
  const Index m = rho.dim_a(), n = rho.dim_b();
  ComplexMatrix M = ComplexMatrix::Zero(n, n);
  for (Index i = 1; i <= m; ++i)
    for (Index j = 1; j <= m; ++j)
      M += a(i - 1) * std::conj(a(j - 1)) * block(rho, i, j);
  return M;
}

SubspaceBasis subspace_LA_from_density(const DensityMatrix& rho,
                                       const ToleranceConfig& tol) {
  if (auto bad = validate_density(rho))
    throw InvalidInput("subspace_LA_from_density: density violates " + *bad);
  const Index m = rho.dim_a(), n = rho.dim_b(), d = m * n;
  // Row block j holds the map a -> rho (a tensor e_j); its columns are
  // the density columns at stride n.
  ComplexMatrix stacked(n * d, m);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < m; ++i)
      stacked.block(j * d, i, d, 1) = rho.mat().col(i * n + j);
  // The kernel condition <v_l | a tensor e_j> = 0 is antilinear in the
  // coordinates of a; conjugate to land in the T1 convention.
  return {m, null_space(stacked, tol).conjugate()};
}

int schmidt_number_lower_bound(const WeightedEnsemble& e, const ToleranceConfig& tol) {
  const int r = e.rank(tol);
  const int rank_T1 = numerical_rank(assemble_T1(e), tol);
  const int rank_T2 = numerical_rank(assemble_T2(e), tol);
  return std::max({1, ceil_div(rank_T1, r), ceil_div(rank_T2, r)});
}

int schmidt_number_upper_bound(const WeightedEnsemble& e, const ToleranceConfig& tol) {
  int best = 1;
  for (const auto& mem : e.members())
    best = std::max(best, schmidt_rank(mem.state, tol));
  return best;
}

namespace {

BoundReport analyze_members(const WeightedEnsemble& e, const ToleranceConfig& tol,
                            std::string upper_from) {
  tol.require_valid();
  BoundReport rep;
  rep.m = e.dim_a();
  rep.n = e.dim_b();
  rep.t = static_cast<int>(e.size());
  rep.r = e.rank(tol);
  rep.rank_T1 = numerical_rank(assemble_T1(e), tol);
  rep.rank_T2 = numerical_rank(assemble_T2(e), tol);
  rep.dim_LA = static_cast<int>(rep.m) - rep.rank_T1;
  rep.dim_LB = static_cast<int>(rep.n) - rep.rank_T2;
  rep.lower_bound =
      std::max({1, ceil_div(rep.rank_T1, rep.r), ceil_div(rep.rank_T2, rep.r)});
  for (const auto& mem : e.members())
    rep.member_schmidt_ranks.push_back(schmidt_rank(mem.state, tol));
  rep.upper_bound = *std::max_element(rep.member_schmidt_ranks.begin(),
                                      rep.member_schmidt_ranks.end());
  rep.upper_bound_from = std::move(upper_from);
  rep.exact = (rep.lower_bound == *rep.upper_bound);
  rep.tolerance = tol;
  return rep;
}

}  // namespace

BoundReport analyze(const WeightedEnsemble& e, const ToleranceConfig& tol) {
  return analyze_members(e, tol, "members");
}

BoundReport analyze(const DensityMatrix& rho, const ToleranceConfig& tol) {
  return analyze_members(spectral_ensemble(rho, tol), tol, "spectral");
}

bool locc_conversion_excluded(const BoundReport& source, const BoundReport& target) {
  if (!source.upper_bound)
    throw InvalidInput("locc_conversion_excluded: source report has no upper bound");
  return *source.upper_bound < target.lower_bound;
}

}  // namespace snbound
