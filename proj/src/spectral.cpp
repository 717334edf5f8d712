#include "fractal/spectral.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <string>

#include "fractal/error.hpp"
#include "fractal/specfun.hpp"

namespace fractal {

TriangularEigen eig_triangular(const Eigen::MatrixXd& A) {
  const Eigen::Index N = A.rows();
  if (A.cols() != N || N == 0) throw ShapeError("eig_triangular requires a square matrix");
  for (Eigen::Index i = 0; i < N; ++i) {
    for (Eigen::Index j = i + 1; j < N; ++j) {
      if (A(i, j) != 0.0) throw DomainError("eig_triangular requires a lower-triangular matrix");
    }
  }
  for (Eigen::Index i = 0; i < N; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      if (std::abs(A(i, i) - A(j, j)) < 1e-9) {
        throw NumericError("repeated diagonal entries: eigenbasis is not unique");
      }
    }
  }

  TriangularEigen out;
  out.eigenvalues = A.diagonal();

  // Unit lower-triangular eigenvectors: (A - lambda_k I) v = 0 with v_k = 1.
  Eigen::MatrixXd V0 = Eigen::MatrixXd::Zero(N, N);
  for (Eigen::Index k = 0; k < N; ++k) {
    V0(k, k) = 1.0;
    const double lambda = A(k, k);
    for (Eigen::Index i = k + 1; i < N; ++i) {
      double s = 0.0;
      for (Eigen::Index j = k; j < i; ++j) s += A(i, j) * V0(j, k);
      V0(i, k) = -s / (A(i, i) - lambda);
    }
  }

  // W = V0^-1 by forward substitution on V0 W = I (unit diagonal).
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(N, N);
  for (Eigen::Index c = 0; c < N; ++c) {
    W(c, c) = 1.0;
    for (Eigen::Index i = c + 1; i < N; ++i) {
      double s = 0.0;
      for (Eigen::Index j = c; j < i; ++j) s += V0(i, j) * W(j, c);
      W(i, c) = -s;
    }
  }

  const Eigen::VectorXd norms = V0.colwise().norm().transpose();
  out.V = V0 * norms.cwiseInverse().asDiagonal();
  out.V_inv = norms.asDiagonal() * W;
  if (!out.V.allFinite() || !out.V_inv.allFinite()) {
    throw NumericError("eigenvector matrix overflowed");
  }
  return out;
}

double condition_number(const Eigen::MatrixXd& V) {
  if (V.rows() != V.cols() || V.rows() == 0) throw ShapeError("condition_number requires a square matrix");
  if (!V.allFinite()) throw NumericError("condition_number: non-finite matrix");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(V);
  const auto& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (!(smin > 0.0)) throw NumericError("condition_number: matrix is singular");
  return smax / smin;
}

SpectralInit spectral_init(double alpha, int N, int U, const SpectralOptions& options) {
  if (U < 1) throw DomainError("spectral_init requires input width U >= 1");
  const HippoOperators ops = build_operators(alpha, N, options.operators);
  const TriangularEigen eig = eig_triangular(ops.A);

  SpectralInit init;
  init.alpha = alpha;
  init.N = N;
  init.V = eig.V;
  init.V_inv = eig.V_inv;
  init.cond_V = condition_number(eig.V);
  init.lambda.resize(N);
  for (int n = 0; n < N; ++n) {
    init.lambda(n) = {-eig.eigenvalues(n), options.omega_scale * n};
  }
  const Eigen::VectorXd physical = eig.V_inv * ops.B;
  if (!physical.allFinite()) throw NumericError("V^-1 B is not finite");
  const double scale = 1.0 / std::sqrt(static_cast<double>(U));
  init.B_tilde = (physical * scale).cast<std::complex<double>>().replicate(1, U);
  return init;
}

}  // namespace fractal
