#include <doctest.h>

#include "snbound/linalg.hpp"
#include "support.hpp"

using namespace snbound;
using snbound::testing::elimination_rank;

namespace {
const ToleranceConfig tol;
}

TEST_CASE("singular values of simple matrices") {
  CHECK(singular_values(ComplexMatrix::Identity(2, 2)).isApprox(
      RealVector::Ones(2), 1e-14));

  const RealVector zero = singular_values(ComplexMatrix::Zero(3, 4));
  REQUIRE(zero.size() == 3);
  CHECK(zero.maxCoeff() == 0.0);

  // sigma of (1 1) is sqrt(lambda_max of M M^dagger) = sqrt(2)
  ComplexMatrix row(1, 2);
  row << 1.0, 1.0;
  const RealVector sv = singular_values(row);
  REQUIRE(sv.size() == 1);
  CHECK(sv(0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("singular values are descending and nonnegative") {
  Rng rng(11);
  for (int it = 0; it < 20; ++it) {
    const ComplexMatrix M = gaussian_matrix(5, 7, rng);
    const RealVector sv = singular_values(M);
    REQUIRE(sv.size() == 5);
    for (Index i = 0; i + 1 < sv.size(); ++i) CHECK(sv(i) >= sv(i + 1));
    CHECK(sv(sv.size() - 1) >= 0.0);
  }
}

TEST_CASE("singular values reject non-finite input") {
  ComplexMatrix M = ComplexMatrix::Zero(2, 2);
  M(0, 0) = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_THROWS_AS(singular_values(M), InvalidInput);
}

TEST_CASE("numerical rank on exact cases") {
  CHECK(numerical_rank(ComplexMatrix::Identity(2, 2), tol) == 2);
  CHECK(numerical_rank(ComplexMatrix::Zero(4, 3), tol) == 0);

  ComplexMatrix rank1(3, 3);
  rank1.setZero();
  rank1.row(0).setOnes();
  CHECK(numerical_rank(rank1, tol) == 1);
}

TEST_CASE("numerical rank agrees with elimination oracle on random matrices") {
  Rng rng(22);
  for (int it = 0; it < 50; ++it) {
    const Index rows = 2 + static_cast<Index>(uniform01(rng) * 7);
    const Index cols = 2 + static_cast<Index>(uniform01(rng) * 7);
    const Index inner = 1 + static_cast<Index>(uniform01(rng) * std::min(rows, cols));
    // product of Gaussian factors has rank exactly `inner` almost surely
    const ComplexMatrix M =
        gaussian_matrix(rows, inner, rng) * gaussian_matrix(inner, cols, rng);
    const int r = numerical_rank(M, tol);
    CHECK(r == elimination_rank(M));
    CHECK(r == static_cast<int>(inner));
  }
}

TEST_CASE("rank is invariant under transpose and conjugation") {
  Rng rng(33);
  for (int it = 0; it < 25; ++it) {
    const Index rows = 2 + static_cast<Index>(uniform01(rng) * 6);
    const Index cols = 2 + static_cast<Index>(uniform01(rng) * 6);
    const Index inner = 1 + static_cast<Index>(uniform01(rng) * std::min(rows, cols));
    const ComplexMatrix M =
        gaussian_matrix(rows, inner, rng) * gaussian_matrix(inner, cols, rng);
    const int r = numerical_rank(M, tol);
    CHECK(numerical_rank(M.transpose(), tol) == r);
    CHECK(numerical_rank(M.conjugate(), tol) == r);
    CHECK(numerical_rank(M.adjoint(), tol) == r);
  }
}

TEST_CASE("singular values are invariant under unitaries") {
  Rng rng(44);
  for (int it = 0; it < 10; ++it) {
    const ComplexMatrix M = gaussian_matrix(4, 6, rng);
    const ComplexMatrix U = haar_unitary(4, rng);
    const ComplexMatrix V = haar_unitary(6, rng);
    CHECK((singular_values(U * M * V) - singular_values(M)).cwiseAbs().maxCoeff() <
          1e-10);
  }
}

TEST_CASE("null space basics") {
  CHECK(null_space(ComplexMatrix::Identity(3, 3), tol).cols() == 0);

  ComplexMatrix row(1, 2);
  row << 1.0, 1.0;
  const ComplexMatrix kernel = null_space(row, tol);
  REQUIRE(kernel.cols() == 1);
  // proportional to (1, -1)/sqrt(2)
  ComplexVector expected(2);
  expected << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  CHECK(std::abs(expected.dot(kernel.col(0))) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("rank-nullity and kernel quality on random matrices") {
  Rng rng(55);
  for (int it = 0; it < 40; ++it) {
    const Index rows = 1 + static_cast<Index>(uniform01(rng) * 8);
    const Index cols = 1 + static_cast<Index>(uniform01(rng) * 8);
    const Index inner = 1 + static_cast<Index>(uniform01(rng) * std::min(rows, cols));
    const ComplexMatrix M =
        gaussian_matrix(rows, inner, rng) * gaussian_matrix(inner, cols, rng);
    const ComplexMatrix kernel = null_space(M, tol);
    const int r = numerical_rank(M, tol);

    CHECK(kernel.cols() + r == cols);
    if (kernel.cols() > 0) {
      const double sigma_max = singular_values(M)(0);
      CHECK((M * kernel).colwise().norm().maxCoeff() <=
            10.0 * tol.cutoff(sigma_max));
      ComplexMatrix gram = kernel.adjoint() * kernel;
      gram.diagonal().array() -= 1.0;
      CHECK(gram.cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("left null space mirrors null space") {
  CHECK(left_null_space(ComplexMatrix::Identity(3, 3), tol).cols() == 0);

  ComplexMatrix col(2, 1);
  col << 1.0, 1.0;
  const ComplexMatrix left = left_null_space(col, tol);
  REQUIRE(left.cols() == 1);
  ComplexVector expected(2);
  expected << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  CHECK(std::abs(expected.dot(left.col(0))) == doctest::Approx(1.0).epsilon(1e-10));

  Rng rng(66);
  for (int it = 0; it < 20; ++it) {
    const ComplexMatrix M = gaussian_matrix(3, 5, rng) * gaussian_matrix(5, 4, rng);
    const ComplexMatrix left_basis = left_null_space(M, tol);
    CHECK(left_basis.cols() + numerical_rank(M, tol) == M.rows());
    if (left_basis.cols() > 0) {
      const double sigma_max = singular_values(M)(0);
      CHECK((left_basis.transpose() * M).rowwise().norm().maxCoeff() <=
            10.0 * tol.cutoff(sigma_max));
    }
  }
}

TEST_CASE("hermitian eigendecomposition") {
  const HermitianEigen id = hermitian_eigendecomposition(
      ComplexMatrix::Identity(4, 4), tol);
  CHECK(id.values.isApproxToConstant(1.0, 1e-14));

  const ComplexMatrix quarter = ComplexMatrix::Identity(4, 4) * 0.25;
  CHECK(hermitian_eigendecomposition(quarter, tol)
            .values.isApproxToConstant(0.25, 1e-14));

  Rng rng(77);
  for (int it = 0; it < 15; ++it) {
    const Index d = 2 + static_cast<Index>(uniform01(rng) * 15);
    const ComplexMatrix H = snbound::testing::random_hermitian(d, rng);
    const HermitianEigen eig = hermitian_eigendecomposition(H, tol);

    for (Index i = 0; i + 1 < d; ++i) CHECK(eig.values(i) >= eig.values(i + 1));

    const ComplexMatrix rebuilt =
        eig.vectors * eig.values.asDiagonal() * eig.vectors.adjoint();
    CHECK((rebuilt - H).norm() <= 1e-8);

    ComplexMatrix gram = eig.vectors.adjoint() * eig.vectors;
    gram.diagonal().array() -= 1.0;
    CHECK(gram.cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("hermitian eigendecomposition rejects non-hermitian input") {
  ComplexMatrix M(2, 2);
  M << 1.0, Complex(0.0, 1.0), Complex(0.0, 1.0), 1.0;  // symmetric, not Hermitian
  CHECK_THROWS_AS(hermitian_eigendecomposition(M, tol), InvalidInput);
  CHECK_THROWS_AS(hermitian_eigendecomposition(ComplexMatrix::Zero(2, 3), tol),
                  InvalidInput);
}

TEST_CASE("gram orthonormalization") {
  ComplexMatrix plane(2, 2);
  plane << 1.0, 0.0, 0.0, 1.0;
  CHECK(gram_orthonormalize(plane, tol).isApprox(plane, 1e-14));

  ComplexMatrix repeated(2, 2);
  repeated << 1.0, 1.0, 0.0, 0.0;
  const ComplexMatrix deduped = gram_orthonormalize(repeated, tol);
  REQUIRE(deduped.cols() == 1);
  CHECK(std::abs(deduped(0, 0)) == doctest::Approx(1.0));

  ComplexMatrix skewed(2, 2);
  skewed << 1.0, 1.0, 1.0, 0.0;
  const ComplexMatrix basis = gram_orthonormalize(skewed, tol);
  REQUIRE(basis.cols() == 2);
  ComplexMatrix gram = basis.adjoint() * basis;
  gram.diagonal().array() -= 1.0;
  CHECK(gram.cwiseAbs().maxCoeff() < 1e-12);

  // zero vectors are dropped, never returned
  std::vector<ComplexVector> with_zero{ComplexVector::Zero(3),
                                       ComplexVector::Ones(3)};
  CHECK(gram_orthonormalize(with_zero, tol).cols() == 1);
}

TEST_CASE("gram orthonormalization preserves the span") {
  Rng rng(88);
  for (int it = 0; it < 20; ++it) {
    const Index dim = 3 + static_cast<Index>(uniform01(rng) * 5);
    const Index count = 1 + static_cast<Index>(uniform01(rng) * 6);
    const ComplexMatrix V = gaussian_matrix(dim, count, rng);
    const ComplexMatrix basis = gram_orthonormalize(V, tol);
    CHECK(basis.cols() == numerical_rank(V, tol));
    // every input vector must lie in the span of the output
    for (Index k = 0; k < count; ++k) {
      const ComplexVector residual = V.col(k) - basis * (basis.adjoint() * V.col(k));
      CHECK(residual.norm() < 1e-9 * V.col(k).norm());
    }
  }
}

TEST_CASE("principal angles") {
  ComplexMatrix e1 = ComplexMatrix::Identity(3, 1);
  ComplexMatrix e2 = ComplexMatrix::Zero(3, 1);
  e2(1, 0) = 1.0;
  CHECK(max_principal_angle(e1, e1) == doctest::Approx(0.0));
  CHECK(max_principal_angle(e1, e2) == doctest::Approx(M_PI / 2));
  CHECK(max_principal_angle(ComplexMatrix(3, 0), ComplexMatrix(3, 0)) == 0.0);
  CHECK(max_principal_angle(e1, ComplexMatrix(3, 0)) == doctest::Approx(M_PI / 2));

  // a subspace equals itself in any orthonormal basis
  Rng rng(99);
  const ComplexMatrix P = haar_isometry(6, 3, rng);
  const ComplexMatrix Q = P * haar_unitary(3, rng);
  CHECK(max_principal_angle(P, Q) < 1e-7);
}

TEST_CASE("tolerance config validation") {
  CHECK_THROWS_AS(numerical_rank(ComplexMatrix::Identity(2, 2),
                                 ToleranceConfig{0.0, 1e-12}),
                  InvalidInput);
  CHECK_THROWS_AS(numerical_rank(ComplexMatrix::Identity(2, 2),
                                 ToleranceConfig{1e-9, 0.0}),
                  InvalidInput);
  CHECK_THROWS_AS(numerical_rank(ComplexMatrix::Identity(2, 2),
                                 ToleranceConfig{2.0, 1e-12}),
                  InvalidInput);
}
