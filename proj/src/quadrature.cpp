#include "fractal/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <vector>

namespace fractal {

namespace {

// P_M^{(a,b)}(x) and its derivative in extended precision.
struct JacobiValue {
  long double p;
  long double dp;
};

long double jacobi_value(long double a, long double b, int M, long double x) {
  if (M == 0) return 1.0L;
  long double p0 = 1.0L;
  long double p1 = 0.5L * (a - b) + 0.5L * (a + b + 2.0L) * x;
  for (int n = 2; n <= M; ++n) {
    const long double c = 2.0L * n + a + b;
    const long double a1 = 2.0L * n * (n + a + b) * (c - 2.0L);
    const long double a2 = (c - 1.0L) * (a * a - b * b);
    const long double a3 = (c - 2.0L) * (c - 1.0L) * c;
    const long double a4 = 2.0L * (n + a - 1.0L) * (n + b - 1.0L) * c;
    const long double p2 = ((a2 + a3 * x) * p1 - a4 * p0) / a1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

JacobiValue jacobi_with_derivative(long double a, long double b, int M, long double x) {
  const long double dp = 0.5L * (M + a + b + 1.0L) * jacobi_value(a + 1.0L, b + 1.0L, M - 1, x);
  return {jacobi_value(a, b, M, x), dp};
}

}  // namespace

double jacobi_weight_mass(JacobiParam p) {
  p.validate();
  const double a = p.a;
  const double b = p.b;
  return std::exp((a + b + 1.0) * std::log(2.0) + ln_gamma(a + 1.0) + ln_gamma(b + 1.0) -
                  ln_gamma(a + b + 2.0));
}

QuadratureRule gauss_jacobi(JacobiParam param, int order) {
  param.validate();
  if (order < 1) throw DomainError("quadrature order must be >= 1");
  const double a = param.a;
  const double b = param.b;
  const double ab = a + b;

  // Orthonormal three-term recurrence: diagonal alpha_n, off-diagonal beta_n (n >= 1).
  Eigen::VectorXd diag(order);
  Eigen::VectorXd sub(order > 1 ? order - 1 : 0);
  diag(0) = (b - a) / (ab + 2.0);
  for (int n = 1; n < order; ++n) {
    const double c = 2.0 * n + ab;
    diag(n) = (b * b - a * a) / (c * (c + 2.0));
  }
  for (int n = 1; n < order; ++n) {
    const double c = 2.0 * n + ab;
    double beta2;
    if (n == 1) {
      // (n+a+b) cancels against (2n+a+b-1) at n = 1.
      beta2 = 4.0 * (1.0 + a) * (1.0 + b) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      beta2 = 4.0 * n * (n + a) * (n + b) * (n + ab) / (c * c * (c + 1.0) * (c - 1.0));
    }
    sub(n - 1) = std::sqrt(beta2);
  }

  QuadratureRule rule;
  rule.param = param;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  if (order == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = jacobi_weight_mass(param);
    return rule;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericError("Golub-Welsch tridiagonal eigen-solve did not converge (order=" +
                       std::to_string(order) + ")");
  }
  // Newton-polish the eigenvalues on P_M and take weights from 1/((1-x^2) P_M'(x)^2),
  // normalized to the exact mass. This recovers the digits the eigen-solve loses near +-1.
  const double mass = jacobi_weight_mass(param);
  const auto& values = solver.eigenvalues();
  std::vector<long double> raw(order);
  long double total = 0.0L;
  for (int i = 0; i < order; ++i) {
    long double x = values(i);
    for (int it = 0; it < 3; ++it) {
      const JacobiValue v = jacobi_with_derivative(a, b, order, x);
      x -= v.p / v.dp;
    }
    const JacobiValue v = jacobi_with_derivative(a, b, order, x);
    rule.nodes[i] = static_cast<double>(x);
    raw[i] = 1.0L / ((1.0L - x * x) * v.dp * v.dp);
    total += raw[i];
  }
  for (int i = 0; i < order; ++i) rule.weights[i] = static_cast<double>(mass * (raw[i] / total));
  for (int i = 0; i < order; ++i) {
    if (!(rule.nodes[i] > -1.0 && rule.nodes[i] < 1.0) || !(rule.weights[i] > 0.0) ||
        (i > 0 && !(rule.nodes[i] > rule.nodes[i - 1]))) {
      throw NumericError("Gauss-Jacobi rule lost node ordering or weight positivity (order=" +
                         std::to_string(order) + ")");
    }
  }
  return rule;
}

}  // namespace fractal
