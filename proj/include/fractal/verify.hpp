#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fractal/operators.hpp"
#include "fractal/signal.hpp"

namespace fractal {

struct OracleReport {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;  // max_deviation <= tolerance
  std::vector<std::string> columns;
  std::vector<std::vector<double>> detail;
  std::string note;  // set when the check could not run to completion
};

/// x_n(t) = (1-alpha) gamma_n int_0^1 u(t xi) P_n(2xi-1) (1-xi)^(-alpha) dxi by
/// Gauss-Jacobi quadrature. `order` <= 0 picks max(4N, 64).
Eigen::VectorXd projection_coefficients(const Signal& u, double t, double alpha, int N,
                                        int order = 0);

/// Max |central difference of x(t) - (-(1/t) A x(t) + (1/t) B u(t))|.
double ode_residual(double alpha, int N, const Signal& u, double t, double h,
                    const OperatorOptions& options = {});

OracleReport ode_consistency(double alpha, int N, const Signal& u, double t, double h,
                             const OperatorOptions& options = {}, double tolerance = 1e-6);

// Printed 2-d.p. values of A for N = 5 at alpha = 0 and alpha = 0.5 (lower triangle).
Eigen::MatrixXd printed_matrix_n5(double alpha);
inline constexpr int kPrintedConditionSizes[] = {8, 16, 32, 64};
inline constexpr double kPrintedConditionAlphas[] = {0.0, 0.2, 0.4, 0.6, 0.8, 0.9};
extern const double kPrintedConditionNumbers[4][6];

// Individual checks; each recomputes from the measure/basis definitions.
OracleReport check_measure_normalization(std::span<const double> alphas);
// Each pair draws alpha from `alphas` and a log-uniform dilation in [1/4, 4].
OracleReport check_scale_invariance(std::span<const double> alphas, int N, int pairs,
                                    std::uint64_t seed);
OracleReport check_basis_orthonormality(std::span<const double> alphas, int N);
OracleReport check_diagonal_invariance(std::span<const double> alphas, int N);
OracleReport check_legs_recovery(int N, int order = 0);
OracleReport check_legs_input(int N);
OracleReport check_printed_matrix(double alpha, int order = 0);
OracleReport check_eigenvalue_invariance(std::span<const double> alphas, std::span<const int> sizes,
                                          int order = 0);
OracleReport check_condition_growth(std::span<const double> alphas, std::span<const int> sizes,
                                     int order = 0);
OracleReport check_input_projection(std::span<const double> alphas, int N);
OracleReport check_offdiag_monotonicity(std::span<const double> alphas, int n_max, int order = 0);
OracleReport check_gap_amplification(std::span<const double> alphas, int n_max, int order = 0);
OracleReport check_scan_equivalence(int systems, int max_state, std::span<const int> lengths,
                                    std::uint64_t seed);
OracleReport check_zoh_limit(std::span<const double> alphas, int N);
OracleReport check_ode_consistency(std::span<const double> alphas, int N, int order = 0);
// residual(h) / residual(h/2) at h = 1e-2 for u = sin, t = 3; passes within 0.5 of 4.
OracleReport check_ode_convergence(std::span<const double> alphas, int N, int order = 0);

struct SuiteOptions {
  std::uint64_t seed = 0;
  int quad_order = 0;  // 0: per-operation defaults
};

/// All checks for the grid; an empty grid yields no reports. Failures are reported,
/// never thrown.
std::vector<OracleReport> run_full_suite(std::span<const double> alpha_grid, int N_max,
                                         const SuiteOptions& options = {});

}  // namespace fractal
