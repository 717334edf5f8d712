#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

namespace fractal {

inline constexpr double kMaxConstructionAlpha = 0.95;
inline constexpr int kMaxStateDim = 256;

/// Quadrature order used when none is given: 4N above alpha = 0.8, else 2N.
int default_quadrature_order(double alpha, int N);

// Options for operator construction.
struct OperatorOptions {
  int order = 0;                      // 0 selects default_quadrature_order
  double regularization_delta = 0.0;  // weight (1-eta+delta)^(-alpha) when > 0
};

/// The fractional HiPPO pair (A, B) for a singularity index alpha and state size N.
/// A is lower triangular with A(n, n) = n + 1; B(0) = 1.
struct HippoOperators {
  double alpha = 0.0;
  int N = 0;
  int quadrature_order = 0;
  Eigen::MatrixXd A;
  Eigen::VectorXd B;
};

/// B_n = gamma_n * binom(n - alpha, n).
Eigen::VectorXd build_B(double alpha, int N);

/// Galerkin-projected state matrix. Above-diagonal entries are structural zeros and the
/// diagonal is assigned n + 1; only k < n is integrated.
Eigen::MatrixXd build_A(double alpha, int N, const OperatorOptions& options = {});

HippoOperators build_operators(double alpha, int N, const OperatorOptions& options = {});

/// Raw projection (gamma_n/gamma_k) <L0[P_n], P_k>_w / ||P_k||^2_w for any n, k, with
/// L0[P] = P + (1+eta) P'. Used to check the analytic diagonal; never stored in A.
double galerkin_projection(double alpha, int n, int k, const OperatorOptions& options = {});

/// Closed-form HiPPO-LegS matrix.
Eigen::MatrixXd legs_closed_form(int N);

struct MonotonicityTrace {
  bool increasing = true;
  std::vector<double> values;
};

/// A_nk evaluated along an increasing alpha grid; increasing iff strictly so.
MonotonicityTrace offdiag_monotonicity(int k, int n, std::span<const double> alphas,
                                       const OperatorOptions& options = {});

}  // namespace fractal
