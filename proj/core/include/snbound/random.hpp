#ifndef SNBOUND_RANDOM_HPP
#define SNBOUND_RANDOM_HPP

#include <random>

#include "snbound/linalg.hpp"

namespace snbound {

// All randomness flows through std::mt19937_64 with explicit transforms
// (no std::*_distribution), so a seed pins the byte stream on every
// standard library.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
double uniform01(Rng& rng);

/// Standard complex Gaussian (Box-Muller; real and imaginary parts are
/// independent N(0, 1/2), so E|z|^2 = 1).
Complex complex_gaussian(Rng& rng);

ComplexMatrix gaussian_matrix(Index rows, Index cols, Rng& rng);

/// Haar-distributed unitary: QR of a Gaussian matrix with the phases of
/// the R diagonal absorbed into Q.
ComplexMatrix haar_unitary(Index dim, Rng& rng);

/// rows x cols matrix with orthonormal columns, Haar-distributed
/// (requires rows >= cols).
ComplexMatrix haar_isometry(Index rows, Index cols, Rng& rng);

}  // namespace snbound

#endif
