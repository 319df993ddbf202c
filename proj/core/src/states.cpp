#include "snbound/states.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace snbound {

namespace {

constexpr double kStateTol = 1e-10;

void require_unitary(const ComplexMatrix& U, const char* name) {
  require_finite(U, name);
  if (U.rows() != U.cols())
    throw InvalidInput(std::string(name) + ": not square");
  ComplexMatrix gram = U.adjoint() * U;
  gram.diagonal().array() -= 1.0;
  if (gram.cwiseAbs().maxCoeff() > kStateTol)
    throw InvalidInput(std::string(name) + ": not unitary within 1e-10");
}

}  // namespace

PureState::PureState(ComplexMatrix coeffs) : coeffs_(std::move(coeffs)) {
  require_finite(coeffs_, "PureState");
  if (coeffs_.rows() < 1 || coeffs_.cols() < 1)
    throw InvalidInput("PureState: empty coefficient matrix");
  if (std::abs(coeffs_.norm() - 1.0) > kStateTol)
    throw InvalidInput("PureState: coefficients not normalized, norm = " +
                       std::to_string(coeffs_.norm()));
}

PureState PureState::normalized(const ComplexMatrix& raw) {
  require_finite(raw, "PureState::normalized");
  const double norm = raw.norm();
  if (norm <= 0.0)
    throw InvalidInput("PureState::normalized: zero coefficient matrix");
  return PureState(raw / norm);
}

ComplexVector PureState::flatten() const {
  const Index m = dim_a(), n = dim_b();
  ComplexVector v(m * n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) v(i * n + j) = coeffs_(i, j);
  return v;
}

PureState PureState::unflatten(const ComplexVector& v, Index m, Index n) {
  if (v.size() != m * n)
    throw InvalidInput("PureState::unflatten: vector length != m*n");
  ComplexMatrix A(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) A(i, j) = v(i * n + j);
  return PureState(A);
}

WeightedEnsemble::WeightedEnsemble(Index m, Index n, std::vector<Member> members)
    : m_(m), n_(n), members_(std::move(members)) {
  if (m_ < 1 || n_ < 1) throw InvalidInput("WeightedEnsemble: dimensions must be positive");
  if (members_.empty()) throw InvalidInput("WeightedEnsemble: no members");
  double total = 0.0;
  for (const Member& mem : members_) {
    if (!(mem.weight > 0.0))
      throw InvalidInput("WeightedEnsemble: weights must be positive");
    if (mem.state.dim_a() != m_ || mem.state.dim_b() != n_)
      throw InvalidInput("WeightedEnsemble: member dimensions differ from (m, n)");
    total += mem.weight;
  }
  if (std::abs(total - 1.0) > kStateTol)
    throw InvalidInput("WeightedEnsemble: weights sum to " + std::to_string(total) +
                       ", expected 1 (normalization)");
}

ComplexMatrix WeightedEnsemble::gram() const {
  const Index t = size();
  ComplexMatrix g(t, t);
  for (Index k = 0; k < t; ++k) {
    const ComplexVector vk = member(k).state.flatten();
    for (Index l = 0; l < t; ++l) {
      const ComplexVector vl = member(l).state.flatten();
      g(k, l) = std::sqrt(member(k).weight * member(l).weight) * vk.dot(vl);
    }
  }
  return g;
}

int WeightedEnsemble::rank(const ToleranceConfig& tol) const {
  return numerical_rank(gram(), tol);
}

DensityMatrix::DensityMatrix(Index m, Index n, ComplexMatrix mat)
    : m_(m), n_(n), mat_(std::move(mat)) {
  if (m_ < 1 || n_ < 1) throw InvalidInput("DensityMatrix: dimensions must be positive");
  if (mat_.rows() != m_ * n_ || mat_.cols() != m_ * n_)
    throw InvalidInput("DensityMatrix: matrix is " + std::to_string(mat_.rows()) + "x" +
                       std::to_string(mat_.cols()) + ", expected " +
                       std::to_string(m_ * n_) + "x" + std::to_string(m_ * n_));
  require_finite(mat_, "DensityMatrix");
}

std::optional<std::string> validate_density(const DensityMatrix& rho) {
  const ComplexMatrix& M = rho.mat();
  if ((M - M.adjoint()).cwiseAbs().maxCoeff() > kStateTol) return "hermitian";
  if (std::abs(M.trace().real() - 1.0) > kStateTol ||
      std::abs(M.trace().imag()) > kStateTol)
    return "trace";
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(M, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kStateTol) return "positivity";
  return std::nullopt;
}

DensityMatrix ensemble_to_density(const WeightedEnsemble& e) {
  const Index d = e.dim_a() * e.dim_b();
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  for (const auto& mem : e.members()) {
    const ComplexVector v = mem.state.flatten();
    rho.noalias() += mem.weight * v * v.adjoint();
  }
  return DensityMatrix(e.dim_a(), e.dim_b(), rho);
}

WeightedEnsemble spectral_ensemble(const DensityMatrix& rho,
                                   const ToleranceConfig& tol) {
  if (auto bad = validate_density(rho))
    throw InvalidInput("spectral_ensemble: density violates " + *bad);
  HermitianEigen eig = hermitian_eigendecomposition(rho.mat(), tol);
  const double cut = tol.cutoff(eig.values(0));
  std::vector<WeightedEnsemble::Member> members;
  for (Index k = 0; k < eig.values.size(); ++k) {
    if (eig.values(k) <= cut) break;  // descending order
    members.push_back({eig.values(k),
                       PureState::unflatten(eig.vectors.col(k), rho.dim_a(), rho.dim_b())});
  }
  return WeightedEnsemble(rho.dim_a(), rho.dim_b(), std::move(members));
}

ComplexMatrix block(const DensityMatrix& rho, Index i, Index j) {
  if (i < 1 || i > rho.dim_a() || j < 1 || j > rho.dim_a())
    throw InvalidInput("block: index out of range");
  const Index n = rho.dim_b();
  return rho.mat().block((i - 1) * n, (j - 1) * n, n, n);
}

ComplexMatrix partial_transpose(const DensityMatrix& rho) {
  // Hermiticity is all the blockwise transpose needs; positivity is not
  // required, so the map stays an involution on its own outputs.
  if ((rho.mat() - rho.mat().adjoint()).cwiseAbs().maxCoeff() > kStateTol)
    throw InvalidInput("partial_transpose: density violates hermitian");
  const Index m = rho.dim_a(), n = rho.dim_b();
  ComplexMatrix out(m * n, m * n);
  for (Index i = 1; i <= m; ++i)
    for (Index j = 1; j <= m; ++j)
      out.block((i - 1) * n, (j - 1) * n, n, n) = block(rho, i, j).transpose();
  return out;
}

WeightedEnsemble local_unitary_transform(const WeightedEnsemble& e,
                                         const ComplexMatrix& U_A,
                                         const ComplexMatrix& U_B) {
  require_unitary(U_A, "local_unitary_transform: U_A");
  require_unitary(U_B, "local_unitary_transform: U_B");
  if (U_A.rows() != e.dim_a() || U_B.rows() != e.dim_b())
    throw InvalidInput("local_unitary_transform: unitary dimensions differ from (m, n)");
  std::vector<WeightedEnsemble::Member> members;
  members.reserve(static_cast<size_t>(e.size()));
  for (const auto& mem : e.members())
    members.push_back({mem.weight,
                       PureState::normalized(U_A * mem.state.coeffs() * U_B.transpose())});
  return WeightedEnsemble(e.dim_a(), e.dim_b(), std::move(members));
}

WeightedEnsemble remix_ensemble(const WeightedEnsemble& e, const ComplexMatrix& V) {
  require_finite(V, "remix_ensemble: V");
  const Index t = e.size();
  if (V.cols() != t || V.rows() < t)
    throw InvalidInput("remix_ensemble: V must be t' x t with t' >= t");
  ComplexMatrix gram = V.adjoint() * V;
  gram.diagonal().array() -= 1.0;
  if (gram.cwiseAbs().maxCoeff() > kStateTol)
    throw InvalidInput("remix_ensemble: V not an isometry");

  const Index m = e.dim_a(), n = e.dim_b();
  std::vector<WeightedEnsemble::Member> members;
  for (Index j = 0; j < V.rows(); ++j) {
    ComplexMatrix w = ComplexMatrix::Zero(m, n);
    for (Index k = 0; k < t; ++k)
      w += V(j, k) * std::sqrt(e.member(k).weight) * e.member(k).state.coeffs();
    const double norm = w.norm();
    if (norm <= 1e-12) continue;  // zero-norm result: drop
    members.push_back({norm * norm, PureState(w / norm)});
  }
  return WeightedEnsemble(m, n, std::move(members));
}

}  // namespace snbound
