#include "snbound/random.hpp"

#include <cmath>

namespace snbound {

double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex complex_gaussian(Rng& rng) {
  double u = uniform01(rng);
  while (u == 0.0) u = uniform01(rng);
  const double v = uniform01(rng);
  const double radius = std::sqrt(-std::log(u));  // E|z|^2 = 1
  const double angle = 2.0 * M_PI * v;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

ComplexMatrix gaussian_matrix(Index rows, Index cols, Rng& rng) {
  ComplexMatrix G(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) G(i, j) = complex_gaussian(rng);
  return G;
}

ComplexMatrix haar_unitary(Index dim, Rng& rng) {
  return haar_isometry(dim, dim, rng);
}

ComplexMatrix haar_isometry(Index rows, Index cols, Rng& rng) {
  if (rows < cols) throw InvalidInput("haar_isometry: rows < cols");
  Eigen::HouseholderQR<ComplexMatrix> qr(gaussian_matrix(rows, cols, rng));
  ComplexMatrix Q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  // fix the gauge so the distribution is Haar, not QR-convention biased
  ComplexMatrix R = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (Index j = 0; j < cols; ++j) {
    const Complex d = R(j, j);
    Q.col(j) *= (std::abs(d) > 0.0) ? d / std::abs(d) : Complex(1.0, 0.0);
  }
  return Q;
}

}  // namespace snbound
