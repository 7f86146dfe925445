#include "polyreal/psd_sqrt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "polyreal/error.hpp"
#include "polyreal/realization.hpp"

namespace polyreal {

namespace {

constexpr double kInvarianceTolerance = 1e-9;
constexpr double kNegativeTolerance = 1e-6;

double commutation(const Eigen::MatrixXd& a, const std::vector<Point>& perm) {
  // (P A)_{ij} = A_{perm^-1(i), j}; comparing P A P^t with A avoids forming P.
  double worst = 0;
  const auto n = static_cast<std::size_t>(a.rows());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      worst = std::max(worst, std::abs(a(perm[i], perm[j]) - a(i, j)));
    }
  }
  return worst;
}

}  // namespace

SqrtResult psd_sqrt_commuting(const DenseMatrix& q, const std::vector<std::vector<Point>>& generator_actions) {
  const auto n = static_cast<Eigen::Index>(q.n);
  if (q.data.size() != q.n * q.n) throw Error(ErrorCode::DimensionMismatch, "matrix data has the wrong size");
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = q(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > kInvarianceTolerance) {
    throw Error(ErrorCode::NotInvariant, "matrix is not symmetric");
  }
  for (const auto& perm : generator_actions) {
    if (perm.size() != q.n) throw Error(ErrorCode::DimensionMismatch, "generator acts on a different point count");
    if (commutation(m, perm) > kInvarianceTolerance) {
      throw Error(ErrorCode::NotInvariant, "matrix is not invariant under a generator");
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  Eigen::VectorXd lambda = solver.eigenvalues();
  // Eigenvalues within the solver's backward error of zero are zero: their
  // square roots would turn rounding noise of size eps into sqrt(eps).
  const double scale = n == 0 ? 0.0 : std::max(1.0, lambda.cwiseAbs().maxCoeff());
  const double zero = 64.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() * scale;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) < -kNegativeTolerance) throw Error(ErrorCode::NotPSD, "matrix has a negative eigenvalue");
    lambda(i) = lambda(i) <= zero ? 0.0 : std::sqrt(lambda(i));
  }
  // A = sum over eigenvalues of sqrt(lambda) times the eigenprojection; a
  // polynomial in Q, so it commutes with everything Q commutes with.
  const Eigen::MatrixXd& v = solver.eigenvectors();
  Eigen::MatrixXd a = v * lambda.asDiagonal() * v.transpose();
  a = 0.5 * (a + a.transpose());

  SqrtResult result;
  result.root.n = q.n;
  result.root.data.resize(q.n * q.n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) result.root.data[static_cast<std::size_t>(i * n + j)] = a(i, j);
  }
  result.residual = n == 0 ? 0.0 : (a * a.transpose() - m).cwiseAbs().maxCoeff();
  for (const auto& perm : generator_actions) {
    result.commutation_residual = std::max(result.commutation_residual, commutation(a, perm));
  }
  return result;
}

DenseMatrix to_dense(const InvariantMatrix& q) {
  std::vector<double> layer_values;
  for (const auto& v : q.values()) {
    if (!v.is_real()) throw Error(ErrorCode::InvalidArgument, "matrix entries must be real");
    layer_values.push_back(v.to_complex().real());
  }
  DenseMatrix d;
  d.n = q.dimension();
  d.data.resize(d.n * d.n);
  for (Point xi = 0; xi < d.n; ++xi) {
    for (Point eta = 0; eta < d.n; ++eta) d(xi, eta) = layer_values[q.space().orbital(xi, eta)];
  }
  return d;
}

std::vector<std::vector<Point>> generator_actions(const InvariantMatrix& q) {
  const auto& gset = q.space().gset();
  std::vector<std::vector<Point>> actions;
  for (Index s : gset.group().generators()) {
    std::vector<Point> perm(gset.size());
    for (Point p = 0; p < gset.size(); ++p) perm[p] = gset.act(p, s);
    actions.push_back(std::move(perm));
  }
  return actions;
}

SqrtResult psd_sqrt_commuting(const InvariantMatrix& q) { return psd_sqrt_commuting(to_dense(q), generator_actions(q)); }

}  // namespace polyreal
