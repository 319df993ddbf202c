#include "snbound/schmidt.hpp"

namespace snbound {

SchmidtDecomposition schmidt_decomposition(const PureState& psi,
                                           const ToleranceConfig& tol) {
  tol.require_valid();
  Eigen::JacobiSVD<ComplexMatrix> svd(psi.coeffs(),
                                      Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& sigma = svd.singularValues();
  const double cut = tol.cutoff(sigma.size() ? sigma(0) : 0.0);
  int k = 0;
  while (k < sigma.size() && sigma(k) > cut) ++k;

  SchmidtDecomposition out;
  out.rank = k;
  out.coefficients = sigma.head(k);
  out.left_vectors = svd.matrixU().leftCols(k);
  // A = U S V^dagger = sum sigma_i u_i conj(v_i)^T, so |b_i> = conj(v_i)
  out.right_vectors = svd.matrixV().leftCols(k).conjugate();
  return out;
}

int schmidt_rank(const PureState& psi, const ToleranceConfig& tol) {
  return numerical_rank(psi.coeffs(), tol);
}

ComplexMatrix reduced_density_A(const PureState& psi) {
  return psi.coeffs() * psi.coeffs().adjoint();
}

}  // namespace snbound
