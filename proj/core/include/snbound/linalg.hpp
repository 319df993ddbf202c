#ifndef SNBOUND_LINALG_HPP
#define SNBOUND_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "snbound/errors.hpp"

namespace snbound {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Cutoff policy for all rank decisions: a singular value sigma counts
/// toward the rank iff sigma > max(rank_rel * sigma_max, zero_abs).
struct ToleranceConfig {
  double rank_rel = 1e-9;
  double zero_abs = 1e-12;

  double cutoff(double sigma_max) const;
  void require_valid() const;  // rank_rel in (0,1), zero_abs > 0
};

/// Throws InvalidInput if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& M, const char* name);

/// Singular values of M, descending; exactly min(rows, cols) of them.
RealVector singular_values(const ComplexMatrix& M);

int numerical_rank(const ComplexMatrix& M, const ToleranceConfig& tol);

/// Orthonormal basis of {x : M x = 0}, returned as matrix columns
/// (cols = dimension of the kernel, possibly zero).
ComplexMatrix null_space(const ComplexMatrix& M, const ToleranceConfig& tol);

/// Orthonormal basis of the row-vector solutions y with y * M = 0
/// (plain transpose, no conjugation), returned as column vectors.
ComplexMatrix left_null_space(const ComplexMatrix& M, const ToleranceConfig& tol);

struct HermitianEigen {
  RealVector values;      // descending
  ComplexMatrix vectors;  // orthonormal columns, same order
};

/// Eigendecomposition of a Hermitian matrix. Input must be Hermitian
/// within 1e-10 per entry, else InvalidInput.
HermitianEigen hermitian_eigendecomposition(const ComplexMatrix& H,
                                            const ToleranceConfig& tol);

/// Orthonormal spanning set of the given vectors (Gram-Schmidt, two
/// passes). Vectors that are zero or dependent within tolerance are
/// dropped, never reported as basis vectors.
ComplexMatrix gram_orthonormalize(const std::vector<ComplexVector>& vectors,
                                  const ToleranceConfig& tol);
ComplexMatrix gram_orthonormalize(const ComplexMatrix& columns,
                                  const ToleranceConfig& tol);

/// Largest principal angle (radians) between the column spans of two
/// orthonormal bases in the same ambient space. Subspaces of different
/// dimension are maximally apart (pi/2).
double max_principal_angle(const ComplexMatrix& P, const ComplexMatrix& Q);

}  // namespace snbound

#endif
