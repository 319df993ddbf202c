#ifndef SNBOUND_STATES_HPP
#define SNBOUND_STATES_HPP

#include <optional>
#include <string>
#include <vector>

#include "snbound/linalg.hpp"

namespace snbound {

/// Bipartite pure state on an m x n system, stored as its coefficient
/// matrix A = (a_ij) in the standard product basis |ij>. Unit Frobenius
/// norm within 1e-10 is enforced on construction.
class PureState {
 public:
  explicit PureState(ComplexMatrix coeffs);

  /// Scales an arbitrary nonzero coefficient matrix to unit norm.
  static PureState normalized(const ComplexMatrix& raw);

  Index dim_a() const { return coeffs_.rows(); }
  Index dim_b() const { return coeffs_.cols(); }
  const ComplexMatrix& coeffs() const { return coeffs_; }

  /// Coefficients as a vector in basis order |11>,...,|1n>,...,|mn>.
  ComplexVector flatten() const;

  /// Inverse of flatten().
  static PureState unflatten(const ComplexVector& v, Index m, Index n);

 private:
  ComplexMatrix coeffs_;
};

/// Convex combination rho = sum_k p_k |v_k><v_k|. Weights are positive
/// and sum to 1 within 1e-10; all members share the (m, n) bipartition.
class WeightedEnsemble {
 public:
  struct Member {
    double weight;
    PureState state;
  };

  WeightedEnsemble(Index m, Index n, std::vector<Member> members);

  Index dim_a() const { return m_; }
  Index dim_b() const { return n_; }
  Index size() const { return static_cast<Index>(members_.size()); }
  const std::vector<Member>& members() const { return members_; }
  const Member& member(Index k) const { return members_[static_cast<size_t>(k)]; }

  /// Gram matrix (sqrt(p_i p_j) <v_i|v_j>), t x t. Its numerical rank is
  /// the rank of the assembled density; t itself may be larger.
  ComplexMatrix gram() const;
  int rank(const ToleranceConfig& tol) const;

 private:
  Index m_, n_;
  std::vector<Member> members_;
};

/// mn x mn Hermitian PSD unit-trace matrix with bipartition metadata.
/// The constructor checks the shape only; physics invariants are
/// reported by validate_density so loaders can surface diagnostics.
class DensityMatrix {
 public:
  DensityMatrix(Index m, Index n, ComplexMatrix mat);

  Index dim_a() const { return m_; }
  Index dim_b() const { return n_; }
  Index dim() const { return m_ * n_; }
  const ComplexMatrix& mat() const { return mat_; }

 private:
  Index m_, n_;
  ComplexMatrix mat_;
};

/// Checks Hermiticity, unit trace and positivity (all within 1e-10) in
/// that order; returns the name of the first violated invariant
/// ("hermitian", "trace" or "positivity"), or nullopt when valid.
std::optional<std::string> validate_density(const DensityMatrix& rho);

DensityMatrix ensemble_to_density(const WeightedEnsemble& e);

/// Eigen-decomposes rho and keeps the eigenpairs above the rank cutoff;
/// the result has numerical_rank(rho) members and reassembles rho within
/// 1e-8 Frobenius.
WeightedEnsemble spectral_ensemble(const DensityMatrix& rho,
                                   const ToleranceConfig& tol);

/// The n x n block of rho on rows |i1>..|in> and columns |j1>..|jn>
/// (1-based party-A indices).
ComplexMatrix block(const DensityMatrix& rho, Index i, Index j);

/// Transposes every block in place of party B: block'(i,j) = block(i,j)^T.
ComplexMatrix partial_transpose(const DensityMatrix& rho);

/// Applies |v_k> -> (U_A tensor U_B)|v_k|, i.e. A^k -> U_A A^k U_B^T on
/// coefficient matrices. Factors must be unitary within 1e-10.
WeightedEnsemble local_unitary_transform(const WeightedEnsemble& e,
                                         const ComplexMatrix& U_A,
                                         const ComplexMatrix& U_B);

/// Re-mixes the ensemble through a t' x t isometry V (V^dagger V = 1):
/// w_j = sum_k V_jk sqrt(p_k) v_k, dropping zero-norm results. The
/// assembled density is unchanged.
WeightedEnsemble remix_ensemble(const WeightedEnsemble& e,
                                const ComplexMatrix& V);

}  // namespace snbound

#endif
