#ifndef SNBOUND_BOUNDS_HPP
#define SNBOUND_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "snbound/schmidt.hpp"
#include "snbound/states.hpp"

namespace snbound {

/// Orthonormal basis of a subspace of C^ambient_dim (possibly empty).
struct SubspaceBasis {
  Index ambient_dim = 0;
  ComplexMatrix basis;  // ambient_dim x dim, orthonormal columns

  Index dim() const { return basis.cols(); }
};

/// Everything the rank analysis produces for one state. lower_bound and
/// upper_bound sandwich the Schmidt number; exact is claimed only when
/// they meet. upper_bound certifies the Schmidt number relative to the
/// decomposition named by upper_bound_from ("members" for the analyzed
/// ensemble, "spectral" when the input was a raw density).
struct BoundReport {
  Index m = 0, n = 0;
  int r = 0;         // rank of rho (numerical rank of the ensemble Gram matrix)
  int t = 0;         // member count of the analyzed ensemble
  int rank_T1 = 0;
  int rank_T2 = 0;
  int dim_LA = 0;    // m - rank_T1
  int dim_LB = 0;    // n - rank_T2
  int lower_bound = 1;
  std::optional<int> upper_bound;
  std::string upper_bound_from;
  bool exact = false;
  std::vector<int> member_schmidt_ranks;  // per member, for inspection
  ToleranceConfig tolerance;
};

/// Horizontal concatenation (A^1, ..., A^t) of the members' coefficient
/// matrices, m x tn, member order, blocks untransposed.
ComplexMatrix assemble_T1(const WeightedEnsemble& e);

/// Vertical stack (A^1; ...; A^t), tm x n, blocks untransposed.
ComplexMatrix assemble_T2(const WeightedEnsemble& e);

/// L_A: the a = sum_i r_i |i> with (r_1,...,r_m) T_1 = 0. Its dimension
/// is m - rank(T_1), and every assembled Hermitian form vanishes on it.
SubspaceBasis subspace_LA(const WeightedEnsemble& e, const ToleranceConfig& tol);

/// L_B: the b = sum_j r_j |j> with T_2 (r_1,...,r_n)^T = 0.
SubspaceBasis subspace_LB(const WeightedEnsemble& e, const ToleranceConfig& tol);

/// Matrix of the Hermitian form b -> sum_{i,j} a_i conj(a_j) block(rho,i,j)
/// for a unit vector a on party A; PSD, and zero exactly on L_A.
ComplexMatrix hermitian_form_matrix(const DensityMatrix& rho,
                                    const ComplexVector& a);

/// Ensemble-free route to L_A from a density matrix alone: a is in L_A
/// iff a tensor b lies in the kernel of rho for every b. Stacks the maps
/// a -> rho (a tensor e_j) over the standard basis of party B and takes
/// the null space. Agrees with subspace_LA of any decomposition of rho.
SubspaceBasis subspace_LA_from_density(const DensityMatrix& rho,
                                       const ToleranceConfig& tol);

/// max(1, ceil(rank_T1 / r), ceil(rank_T2 / r)) with r the Gram rank.
int schmidt_number_lower_bound(const WeightedEnsemble& e, const ToleranceConfig& tol);

/// Largest member Schmidt rank: certifies Schmidt number <= this value.
int schmidt_number_upper_bound(const WeightedEnsemble& e, const ToleranceConfig& tol);

BoundReport analyze(const WeightedEnsemble& e, const ToleranceConfig& tol);

/// Density input: analyzed through its spectral decomposition, so the
/// upper bound is certified by the spectral members.
BoundReport analyze(const DensityMatrix& rho, const ToleranceConfig& tol);

/// True iff source.upper_bound < target.lower_bound, which makes the
/// conversion source -> target impossible under LOCC. False only means
/// this criterion is silent. Throws InvalidInput when the source report
/// carries no upper bound.
bool locc_conversion_excluded(const BoundReport& source, const BoundReport& target);

}  // namespace snbound

#endif
