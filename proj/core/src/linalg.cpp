#include "snbound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace snbound {

double ToleranceConfig::cutoff(double sigma_max) const {
  return std::max(rank_rel * sigma_max, zero_abs);
}

void ToleranceConfig::require_valid() const {
  if (!(rank_rel > 0.0 && rank_rel < 1.0))
    throw InvalidInput("ToleranceConfig: rank_rel must be in (0, 1), got " +
                       std::to_string(rank_rel));
  if (!(zero_abs > 0.0))
    throw InvalidInput("ToleranceConfig: zero_abs must be positive");
}

void require_finite(const ComplexMatrix& M, const char* name) {
  if (!M.allFinite())
    throw InvalidInput(std::string(name) + ": non-finite entry");
}

RealVector singular_values(const ComplexMatrix& M) {
  require_finite(M, "singular_values");
  Eigen::JacobiSVD<ComplexMatrix> svd(M);
  return svd.singularValues();  // Eigen sorts descending
}

static int rank_from_singular_values(const RealVector& sigma,
                                     const ToleranceConfig& tol) {
  if (sigma.size() == 0) return 0;
  const double cut = tol.cutoff(sigma(0));
  int r = 0;
  while (r < sigma.size() && sigma(r) > cut) ++r;
  return r;
}

int numerical_rank(const ComplexMatrix& M, const ToleranceConfig& tol) {
  tol.require_valid();
  return rank_from_singular_values(singular_values(M), tol);
}

ComplexMatrix null_space(const ComplexMatrix& M, const ToleranceConfig& tol) {
  tol.require_valid();
  require_finite(M, "null_space");
  Eigen::JacobiSVD<ComplexMatrix> svd(M, Eigen::ComputeFullV);
  const int r = rank_from_singular_values(svd.singularValues(), tol);
  return svd.matrixV().rightCols(M.cols() - r);
}

ComplexMatrix left_null_space(const ComplexMatrix& M, const ToleranceConfig& tol) {
  // y M = 0  <=>  M^T y = 0, transpose without conjugation
  return null_space(M.transpose(), tol);
}

HermitianEigen hermitian_eigendecomposition(const ComplexMatrix& H,
                                            const ToleranceConfig& tol) {
  tol.require_valid();
  require_finite(H, "hermitian_eigendecomposition");
  if (H.rows() != H.cols())
    throw InvalidInput("hermitian_eigendecomposition: matrix not square");
  if (((H - H.adjoint()).cwiseAbs().maxCoeff() > 1e-10))
    throw InvalidInput("hermitian_eigendecomposition: matrix not Hermitian");

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(H);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigendecomposition: solver failed");

  // Eigen returns ascending order; flip to descending.
  const Index d = H.rows();
  HermitianEigen out;
  out.values = solver.eigenvalues().reverse();
  out.vectors.resize(d, d);
  for (Index i = 0; i < d; ++i)
    out.vectors.col(i) = solver.eigenvectors().col(d - 1 - i);
  return out;
}

ComplexMatrix gram_orthonormalize(const std::vector<ComplexVector>& vectors,
                                  const ToleranceConfig& tol) {
  if (vectors.empty()) return ComplexMatrix(0, 0);
  const Index dim = vectors.front().size();
  ComplexMatrix cols(dim, static_cast<Index>(vectors.size()));
  for (Index k = 0; k < cols.cols(); ++k) {
    if (vectors[static_cast<size_t>(k)].size() != dim)
      throw InvalidInput("gram_orthonormalize: vectors of mixed dimension");
    cols.col(k) = vectors[static_cast<size_t>(k)];
  }
  return gram_orthonormalize(cols, tol);
}

ComplexMatrix gram_orthonormalize(const ComplexMatrix& columns,
                                  const ToleranceConfig& tol) {
  tol.require_valid();
  require_finite(columns, "gram_orthonormalize");

  ComplexMatrix basis(columns.rows(), columns.cols());
  Index kept = 0;
  for (Index k = 0; k < columns.cols(); ++k) {
    ComplexVector v = columns.col(k);
    const double orig = v.norm();
    // two projection passes keep the basis orthonormal to ~1e-15
    for (int pass = 0; pass < 2; ++pass)
      for (Index j = 0; j < kept; ++j)
        v -= basis.col(j).dot(v) * basis.col(j);
    if (v.norm() <= tol.cutoff(orig)) continue;  // zero or dependent: drop
    basis.col(kept++) = v / v.norm();
  }
  return basis.leftCols(kept);
}

double max_principal_angle(const ComplexMatrix& P, const ComplexMatrix& Q) {
  if (P.rows() != Q.rows())
    throw InvalidInput("max_principal_angle: ambient dimensions differ");
  if (P.cols() != Q.cols()) return M_PI / 2.0;
  if (P.cols() == 0) return 0.0;
  RealVector cosines = singular_values(P.adjoint() * Q);
  const double c = std::clamp(cosines.minCoeff(), -1.0, 1.0);
  return std::acos(c);
}

}  // namespace snbound
