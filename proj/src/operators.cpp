#include "fractal/operators.hpp"

#include <cmath>
#include <string>

#include "fractal/error.hpp"
#include "fractal/quadrature.hpp"
#include "fractal/specfun.hpp"

namespace fractal {

namespace {

void require_state_dim(int N) {
  if (N < 1 || N > kMaxStateDim) {
    throw DomainError("state dimension N=" + std::to_string(N) + " outside [1, " +
                      std::to_string(kMaxStateDim) + "]");
  }
}

// Basis values and the L0 image at every quadrature node, plus the (possibly regularized)
// weights. Rows index degree, columns index nodes.
struct NodalBasis {
  Eigen::VectorXd weights;
  Eigen::MatrixXd P;
  Eigen::MatrixXd L0P;
  Eigen::VectorXd norms;  // ||P_k||^2_w
  int order = 0;
};

NodalBasis nodal_basis(double alpha, int N, const OperatorOptions& options) {
  const int order = options.order > 0 ? options.order : default_quadrature_order(alpha, N);
  if (order < 2 * N) {
    throw DomainError("quadrature order " + std::to_string(order) + " below 2N=" +
                      std::to_string(2 * N));
  }
  if (options.regularization_delta < 0.0) {
    throw DomainError("regularization delta must be >= 0");
  }
  const JacobiParam param = JacobiParam::fractional(alpha);
  const JacobiParam shifted{param.a + 1.0, param.b + 1.0};
  const QuadratureRule rule = gauss_jacobi(param, order);

  NodalBasis nb;
  nb.order = order;
  nb.weights.resize(order);
  nb.P.resize(N, order);
  nb.L0P.resize(N, order);
  const double delta = options.regularization_delta;
  for (int i = 0; i < order; ++i) {
    const double eta = rule.nodes[i];
    double w = rule.weights[i];
    if (delta > 0.0) w *= std::pow((1.0 - eta) / (1.0 - eta + delta), alpha);
    nb.weights(i) = w;
    const auto p = jacobi_eval_all(param, N - 1, eta);
    const auto q = N >= 2 ? jacobi_eval_all(shifted, N - 2, eta) : std::vector<double>{};
    for (int n = 0; n < N; ++n) {
      const double dp = n == 0 ? 0.0 : 0.5 * (n + 1.0 - alpha) * q[n - 1];
      nb.P(n, i) = p[n];
      nb.L0P(n, i) = p[n] + (1.0 + eta) * dp;
    }
  }
  nb.norms.resize(N);
  for (int k = 0; k < N; ++k) {
    nb.norms(k) = delta > 0.0 ? (nb.P.row(k).array().square() * nb.weights.transpose().array()).sum()
                              : basis_scale(alpha, k).h_n;
  }
  return nb;
}

}  // namespace

int default_quadrature_order(double alpha, int N) { return alpha > 0.8 ? 4 * N : 2 * N; }

Eigen::VectorXd build_B(double alpha, int N) {
  require_alpha(alpha);
  if (N < 1) throw DomainError("build_B requires N >= 1");
  Eigen::VectorXd B(N);
  for (int n = 0; n < N; ++n) {
    B(n) = basis_scale(alpha, n).gamma_n * generalized_binomial(n - alpha, n);
  }
  return B;
}

Eigen::MatrixXd build_A(double alpha, int N, const OperatorOptions& options) {
  require_alpha(alpha, kMaxConstructionAlpha, true);
  require_state_dim(N);
  const NodalBasis nb = nodal_basis(alpha, N, options);

  // inner(n, k) = sum_i w_i L0[P_n](eta_i) P_k(eta_i)
  const Eigen::MatrixXd inner = nb.L0P * nb.weights.asDiagonal() * nb.P.transpose();

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
  for (int n = 0; n < N; ++n) {
    const double gamma_n = basis_scale(alpha, n).gamma_n;
    for (int k = 0; k < n; ++k) {
      const double gamma_k = basis_scale(alpha, k).gamma_n;
      A(n, k) = gamma_n / gamma_k * inner(n, k) / nb.norms(k);
      if (!std::isfinite(A(n, k))) {
        throw NumericError("non-finite A(" + std::to_string(n) + "," + std::to_string(k) + ")");
      }
    }
    A(n, n) = n + 1.0;
  }
  return A;
}

HippoOperators build_operators(double alpha, int N, const OperatorOptions& options) {
  HippoOperators ops;
  ops.alpha = alpha;
  ops.N = N;
  ops.quadrature_order = options.order > 0 ? options.order : default_quadrature_order(alpha, N);
  ops.A = build_A(alpha, N, options);
  ops.B = build_B(alpha, N);
  return ops;
}

double galerkin_projection(double alpha, int n, int k, const OperatorOptions& options) {
  require_alpha(alpha, kMaxConstructionAlpha, true);
  if (n < 0 || k < 0) throw DomainError("galerkin_projection requires n, k >= 0");
  const int N = std::max(n, k) + 1;
  require_state_dim(N);
  const NodalBasis nb = nodal_basis(alpha, N, options);
  const double inner = (nb.L0P.row(n).array() * nb.weights.transpose().array() *
                        nb.P.row(k).array()).sum();
  return basis_scale(alpha, n).gamma_n / basis_scale(alpha, k).gamma_n * inner / nb.norms(k);
}

Eigen::MatrixXd legs_closed_form(int N) {
  if (N < 1) throw DomainError("legs_closed_form requires N >= 1");
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
  for (int n = 0; n < N; ++n) {
    for (int k = 0; k < n; ++k) A(n, k) = std::sqrt((2.0 * n + 1.0) * (2.0 * k + 1.0));
    A(n, n) = n + 1.0;
  }
  return A;
}

MonotonicityTrace offdiag_monotonicity(int k, int n, std::span<const double> alphas,
                                       const OperatorOptions& options) {
  if (!(k >= 0 && k < n)) throw DomainError("offdiag_monotonicity requires 0 <= k < n");
  MonotonicityTrace trace;
  trace.values.reserve(alphas.size());
  for (double a : alphas) {
    trace.values.push_back(build_A(a, n + 1, options)(n, k));
  }
  for (std::size_t i = 1; i < trace.values.size(); ++i) {
    if (!(trace.values[i - 1] < trace.values[i])) trace.increasing = false;
  }
  return trace;
}

}  // namespace fractal
