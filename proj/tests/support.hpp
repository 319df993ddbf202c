#ifndef SNBOUND_TESTS_SUPPORT_HPP
#define SNBOUND_TESTS_SUPPORT_HPP

#include <cmath>
#include <vector>

#include "snbound/generic.hpp"
#include "snbound/random.hpp"
#include "snbound/states.hpp"

namespace snbound::testing {

// Independent rank oracle: Gaussian elimination with partial pivoting,
// no SVD anywhere. Entries below `eps` times the largest initial pivot
// count as zero.
inline int elimination_rank(ComplexMatrix M, double eps = 1e-9) {
  const Index rows = M.rows(), cols = M.cols();
  const double scale = M.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0;
  const double tiny = eps * scale;
  int rank = 0;
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index pivot = row;
    for (Index i = row + 1; i < rows; ++i)
      if (std::abs(M(i, col)) > std::abs(M(pivot, col))) pivot = i;
    if (std::abs(M(pivot, col)) <= tiny) continue;
    M.row(pivot).swap(M.row(row));
    for (Index i = row + 1; i < rows; ++i) {
      const Complex factor = M(i, col) / M(row, col);
      M.row(i) -= factor * M.row(row);
    }
    ++row;
    ++rank;
  }
  return rank;
}

inline PureState random_pure_state(Index m, Index n, Rng& rng) {
  return PureState::normalized(gaussian_matrix(m, n, rng));
}

// Random ensemble with t members (independent Gaussian states, not
// orthogonal) and strictly positive normalized weights.
inline WeightedEnsemble random_ensemble(Index m, Index n, Index t, Rng& rng) {
  std::vector<WeightedEnsemble::Member> members;
  std::vector<double> weights;
  double total = 0.0;
  for (Index k = 0; k < t; ++k) {
    double u = uniform01(rng);
    while (u == 0.0) u = uniform01(rng);
    weights.push_back(-std::log(u) + 1e-3);
    total += weights.back();
  }
  for (Index k = 0; k < t; ++k)
    members.push_back({weights[static_cast<size_t>(k)] / total,
                       random_pure_state(m, n, rng)});
  return WeightedEnsemble(m, n, std::move(members));
}

// Random Hermitian matrix with entries of order 1.
inline ComplexMatrix random_hermitian(Index d, Rng& rng) {
  ComplexMatrix G = gaussian_matrix(d, d, rng);
  return (G + G.adjoint()) / 2.0;
}

// Random valid rank-r density matrix.
inline DensityMatrix random_density(Index m, Index n, int r, Rng& rng) {
  return ensemble_to_density(sample_generic_state(m, n, r, rng()));
}

}  // namespace snbound::testing

#endif
