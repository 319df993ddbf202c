#ifndef SNBOUND_SCHMIDT_HPP
#define SNBOUND_SCHMIDT_HPP

#include "snbound/states.hpp"

namespace snbound {

/// |psi> = sum_i p_i |a_i> tensor |b_i> with positive descending p_i and
/// orthonormal local vector sets; equivalently the SVD of the coefficient
/// matrix with right vectors conjugated (A = sum_i p_i a_i b_i^T).
struct SchmidtDecomposition {
  RealVector coefficients;   // descending, above the rank cutoff
  ComplexMatrix left_vectors;   // m x k, orthonormal columns
  ComplexMatrix right_vectors;  // n x k, orthonormal columns
  int rank = 0;
};

SchmidtDecomposition schmidt_decomposition(const PureState& psi,
                                           const ToleranceConfig& tol);

/// Number of Schmidt coefficients above the cutoff; equals the numerical
/// rank of the coefficient matrix and of either reduced density.
int schmidt_rank(const PureState& psi, const ToleranceConfig& tol);

/// Reduced state of party A: A A^dagger (m x m, Hermitian PSD, trace 1).
ComplexMatrix reduced_density_A(const PureState& psi);

}  // namespace snbound

#endif
