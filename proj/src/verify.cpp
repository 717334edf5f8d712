#include "fractal/verify.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "fractal/error.hpp"
#include "fractal/measure.hpp"
#include "fractal/quadrature.hpp"
#include "fractal/reference.hpp"
#include "fractal/spectral.hpp"
#include "fractal/specfun.hpp"
#include "fractal/ssm.hpp"

namespace fractal {

const double kPrintedConditionNumbers[4][6] = {
    {1.2e1, 1.4e1, 1.8e1, 2.5e1, 4.8e1, 1.1e2},
    {4.1e1, 5.2e1, 7.3e1, 1.2e2, 3.1e2, 9.8e2},
    {1.5e2, 2.0e2, 3.1e2, 5.8e2, 2.0e3, 8.5e3},
    {5.8e2, 8.2e2, 1.4e3, 2.9e3, 1.3e4, 7.2e4},
};

namespace {

OracleReport finish(std::string name, double deviation, double tolerance,
                    std::vector<std::string> columns, std::vector<std::vector<double>> detail) {
  OracleReport r;
  r.name = std::move(name);
  r.max_deviation = deviation;
  r.tolerance = tolerance;
  r.passed = deviation <= tolerance;
  r.columns = std::move(columns);
  r.detail = std::move(detail);
  return r;
}

OperatorOptions with_order(int order) {
  OperatorOptions o;
  o.order = order;
  return o;
}

std::vector<double> sorted_unique(std::span<const double> values) {
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool contains(std::span<const double> values, double x) {
  return std::any_of(values.begin(), values.end(),
                     [x](double v) { return std::abs(v - x) < 1e-12; });
}

}  // namespace

Eigen::VectorXd projection_coefficients(const Signal& u, double t, double alpha, int N,
                                        int order) {
  require_alpha(alpha);
  if (N < 1) throw DomainError("projection_coefficients requires N >= 1");
  if (!(t > 0.0)) throw DomainError("projection time t must be > 0");
  if (order <= 0) order = std::max(4 * N, 64);
  if (order < 2 * N) throw DomainError("projection order must be >= 2N");

  const JacobiParam param = JacobiParam::fractional(alpha);
  const QuadratureRule rule = gauss_jacobi(param, order);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(N);
  for (int i = 0; i < order; ++i) {
    const double eta = rule.nodes[i];
    const double tau = t * 0.5 * (1.0 + eta);
    if (!(tau >= 0.0 && tau <= t)) throw DomainError("quadrature node outside the signal window");
    const double value = u(tau);
    if (!std::isfinite(value)) throw NumericError("test signal is not finite on the window");
    const auto P = jacobi_eval_all(param, N - 1, eta);
    for (int n = 0; n < N; ++n) x(n) += rule.weights[i] * value * P[n];
  }
  // dxi = deta/2 and (1-xi)^(-alpha) = 2^alpha (1-eta)^(-alpha).
  const double prefactor = (1.0 - alpha) * std::pow(2.0, alpha - 1.0);
  for (int n = 0; n < N; ++n) x(n) *= prefactor * basis_scale(alpha, n).gamma_n;
  return x;
}

namespace {

struct OdeTerms {
  Eigen::VectorXd finite_difference;
  Eigen::VectorXd rhs;
};

OdeTerms ode_terms(double alpha, int N, const Signal& u, double t, double h,
                   const OperatorOptions& options) {
  if (!(h > 0.0) || !(t > 2.0 * h)) throw DomainError("ODE check requires t > 2h > 0");
  const Eigen::MatrixXd A = build_A(alpha, N, options);
  const Eigen::VectorXd B = build_B(alpha, N);
  const int order = std::max(4 * N, 64);
  const Eigen::VectorXd plus = projection_coefficients(u, t + h, alpha, N, order);
  const Eigen::VectorXd minus = projection_coefficients(u, t - h, alpha, N, order);
  const Eigen::VectorXd x = projection_coefficients(u, t, alpha, N, order);
  return {(plus - minus) / (2.0 * h), (-A * x + B * u(t)) / t};
}

}  // namespace

double ode_residual(double alpha, int N, const Signal& u, double t, double h,
                    const OperatorOptions& options) {
  const OdeTerms terms = ode_terms(alpha, N, u, t, h, options);
  return (terms.finite_difference - terms.rhs).cwiseAbs().maxCoeff();
}

OracleReport ode_consistency(double alpha, int N, const Signal& u, double t, double h,
                             const OperatorOptions& options, double tolerance) {
  const OdeTerms terms = ode_terms(alpha, N, u, t, h, options);
  std::vector<std::vector<double>> detail;
  double dev = 0.0;
  for (int n = 0; n < N; ++n) {
    const double diff = std::abs(terms.finite_difference(n) - terms.rhs(n));
    dev = std::max(dev, diff);
    detail.push_back({static_cast<double>(n), terms.finite_difference(n), terms.rhs(n), diff});
  }
  return finish("ode_consistency", dev, tolerance, {"n", "finite_difference", "rhs", "abs_diff"},
                std::move(detail));
}

Eigen::MatrixXd printed_matrix_n5(double alpha) {
  Eigen::MatrixXd T(5, 5);
  if (std::abs(alpha) < 1e-12) {
    T << 1.00, 0, 0, 0, 0,
         1.73, 2.00, 0, 0, 0,
         2.24, 3.87, 3.00, 0, 0,
         2.65, 4.58, 5.92, 4.00, 0,
         3.00, 5.20, 6.71, 7.94, 5.00;
  } else if (std::abs(alpha - 0.5) < 1e-12) {
    T << 1.00, 0, 0, 0, 0,
         2.24, 2.00, 0, 0, 0,
         4.00, 4.47, 3.00, 0, 0,
         5.77, 6.45, 6.49, 4.00, 0,
         7.54, 8.43, 8.48, 8.50, 5.00;
  } else {
    throw DomainError("printed N=5 matrices exist only for alpha = 0 and alpha = 0.5");
  }
  return T;
}

OracleReport check_measure_normalization(std::span<const double> alphas) {
  std::vector<std::vector<double>> detail;
  double dev = 0.0;
  for (double a : alphas) {
    const double mass = total_mass({a, 1.0}, 32);
    dev = std::max(dev, std::abs(mass - 1.0));
    detail.push_back({a, mass});
  }
  return finish("measure_normalization", dev, 1e-10, {"alpha", "total_mass"}, std::move(detail));
}

OracleReport check_scale_invariance(std::span<const double> alphas, int N, int pairs,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_lambda(std::log(0.25), std::log(4.0));
  const Signal signals[] = {sine_signal(), polynomial_signal({1.0, 0.5, -0.25, 1.0 / 24.0})};
  std::vector<std::vector<double>> detail;
  double dev = 0.0;
  if (!alphas.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, alphas.size() - 1);
    for (int i = 0; i < pairs; ++i) {
      const double a = alphas[pick(rng)];
      const double lambda = std::exp(log_lambda(rng));
      const double d = check_scale_invariance(a, N, lambda, signals[i % 2], 2.0);
      dev = std::max(dev, d);
      detail.push_back({a, lambda, static_cast<double>(i % 2), d});
    }
  }
  return finish("scale_invariance", dev, 1e-8, {"alpha", "lambda", "signal", "deviation"},
                std::move(detail));
}

OracleReport check_basis_orthonormality(std::span<const double> alphas, int N) {
  std::vector<std::vector<double>> detail;
  double dev = 0.0;
  for (double a : alphas) {
    const JacobiParam param = JacobiParam::fractional(a);
    const QuadratureRule rule = gauss_jacobi(param, N + 1);
    Eigen::MatrixXd P(N, rule.order);
    for (int i = 0; i < rule.order; ++i) {
      const auto p = jacobi_eval_all(param, N - 1, rule.nodes[i]);
      for (int n = 0; n < N; ++n) P(n, i) = basis_scale(a, n).gamma_n * p[n];
    }
    const Eigen::Map<const Eigen::VectorXd> w(rule.weights.data(), rule.order);
    const Eigen::MatrixXd gram =
        (1.0 - a) * std::pow(2.0, a - 1.0) * (P * w.asDiagonal() * P.transpose());
    const double d = (gram - Eigen::MatrixXd::Identity(N, N)).cwiseAbs().maxCoeff();
    dev = std::max(dev, d);
    detail.push_back({a, d});
  }
  return finish("basis_orthonormality", dev, 1e-10, {"alpha", "max_abs_gram_minus_identity"},
                std::move(detail));
}

OracleReport check_diagonal_invariance(std::span<const double> alphas, int N) {
  std::vector<std::vector<double>> detail;
  double dev = 0.0;
  for (double a : alphas) {
    const Eigen::MatrixXd A = build_A(a, N);
    double exact = 0.0;
    double nodal = 0.0;
    for (int n = 0; n < N; ++n) {
      exact = std::max(exact, std::abs(reference::galerkin_projection(a, n, n) - (n + 1.0)));
      nodal = std::max(nodal, std::abs(galerkin_projection(a, n, n) - (n + 1.0)));
      exact = std::max(exact, std::abs(A(n, n) - (n + 1.0)));
    }
    // The quadrature diagonal is reported only: double-precision nodes next to the
    // singular endpoint limit it to about 1e-10 at alpha = 0.9, N = 64.
    dev = std::max(dev, exact);
    detail.push_back({a, exact, nodal});
  }
  return finish("diagonal_invariance", dev, 1e-10,
                {"alpha", "max_abs_dev_high_precision", "max_abs_dev_quadrature"}, std::move(detail));
}

OracleReport check_legs_recovery(int N, int order) {
  const Eigen::MatrixXd diff = build_A(0.0, N, with_order(order)) - legs_closed_form(N);
  const double dev = diff.cwiseAbs().maxCoeff();
  return finish("legs_recovery_A", dev, 1e-10, {"N", "max_abs_diff"},
                {{static_cast<double>(N), dev}});
}

OracleReport check_legs_input(int N) {
  const Eigen::VectorXd B = build_B(0.0, N);
  double dev = 0.0;
  for (int n = 0; n < N; ++n) dev = std::max(dev, std::abs(B(n) - std::sqrt(2.0 * n + 1.0)));
  return finish("legs_recovery_B", dev, 1e-12, {"N", "max_abs_diff"},
                {{static_cast<double>(N), dev}});
}

OracleReport check_printed_matrix(double alpha, int order) {
  const Eigen::MatrixXd printed = printed_matrix_n5(alpha);
  const Eigen::MatrixXd A = build_A(alpha, 5, with_order(order));
  std::vector<std::vector<double>> detail;
  double dev = 0.0;
  for (int n = 0; n < 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      const double d = std::abs(A(n, k) - printed(n, k));
      dev = std::max(dev, d);
      detail.push_back({static_cast<double>(n), static_cast<double>(k), A(n, k), printed(n, k), d});
    }
  }
  return finish(std::abs(alpha) < 1e-12 ? "printed_matrix_alpha_0" : "printed_matrix_alpha_0.5",
                dev, 0.005, {"n", "k", "computed", "printed", "abs_diff"}, std::move(detail));
}

OracleReport check_eigenvalue_invariance(std::span<const double> alphas, std::span<const int> sizes,
                                         int order) {
  std::vector<std::vector<double>> detail;
  double dev = 0.0;
  for (double a : alphas) {
    for (int N : sizes) {
      const Eigen::MatrixXd A = build_A(a, N, with_order(order));
      auto ev = reference::general_eigenvalues(A);
      std::sort(ev.begin(), ev.end(),
                [](const auto& x, const auto& y) { return x.real() < y.real(); });
      double worst = 0.0;
      for (int n = 0; n < N; ++n) worst = std::max(worst, std::abs(ev[n] - std::complex<double>(n + 1.0, 0.0)));

      // Double-precision general solve, reported for comparison only.
      Eigen::EigenSolver<Eigen::MatrixXd> plain(A, false);
      std::vector<std::complex<double>> ev64(plain.eigenvalues().begin(), plain.eigenvalues().end());
      std::sort(ev64.begin(), ev64.end(),
                [](const auto& x, const auto& y) { return x.real() < y.real(); });
      double worst64 = 0.0;
      for (int n = 0; n < N; ++n) worst64 = std::max(worst64, std::abs(ev64[n] - std::complex<double>(n + 1.0, 0.0)));

      dev = std::max(dev, worst);
      detail.push_back({a, static_cast<double>(N), worst, worst64});
    }
  }
  return finish("eigenvalue_invariance", dev, 1e-10,
                {"alpha", "N", "deviation", "double_precision_deviation"}, std::move(detail));
}

OracleReport check_condition_growth(std::span<const double> alphas, std::span<const int> sizes,
                                    int order) {
  const std::vector<double> grid = sorted_unique(alphas);
  std::vector<int> ns(sizes.begin(), sizes.end());
  std::sort(ns.begin(), ns.end());
  std::vector<std::vector<double>> kappa(grid.size(), std::vector<double>(ns.size()));
  std::vector<std::vector<double>> detail;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < ns.size(); ++j) {
      const auto eig = eig_triangular(build_A(grid[i], ns[j], with_order(order)));
      kappa[i][j] = condition_number(eig.V);
      detail.push_back({grid[i], static_cast<double>(ns[j]), kappa[i][j]});
    }
  }
  int violations = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 1; j < ns.size(); ++j) violations += kappa[i][j] < kappa[i][j - 1];
  }
  for (std::size_t j = 0; j < ns.size(); ++j) {
    for (std::size_t i = 1; i < grid.size(); ++i) violations += kappa[i][j] < kappa[i - 1][j];
  }
  return finish("condition_growth", violations, 0.0, {"alpha", "N", "kappa"}, std::move(detail));
}

OracleReport check_input_projection(std::span<const double> alphas, int N) {
  std::vector<std::vector<double>> detail;
  double dev = 0.0;
  for (double a : alphas) {
    const Eigen::VectorXd B = build_B(a, N);
    double worst = 0.0;
    for (int n = 0; n < N; ++n) {
      const double ref = reference::input_projection(a, n);
      worst = std::max(worst, std::abs(B(n) - ref) / std::abs(ref));
    }
    dev = std::max(dev, worst);
    detail.push_back({a, worst});
  }
  return finish("input_projection", dev, 1e-12, {"alpha", "max_rel_diff"}, std::move(detail));
}

OracleReport check_offdiag_monotonicity(std::span<const double> alphas, int n_max, int order) {
  const std::vector<double> grid = sorted_unique(alphas);
  std::vector<std::vector<double>> detail;
  int violations = 0;
  if (grid.size() >= 2 && n_max >= 1) {
    std::vector<Eigen::MatrixXd> mats;
    for (double a : grid) mats.push_back(build_A(a, n_max + 1, with_order(order)));
    for (int n = 1; n <= n_max; ++n) {
      for (int k = 0; k < n; ++k) {
        int bad = 0;
        for (std::size_t i = 1; i < grid.size(); ++i) bad += !(mats[i - 1](n, k) < mats[i](n, k));
        violations += bad;
        detail.push_back({static_cast<double>(n), static_cast<double>(k), mats.front()(n, k),
                          mats.back()(n, k), static_cast<double>(bad)});
      }
    }
  }
  return finish("offdiag_monotonicity", violations, 0.0,
                {"n", "k", "A_at_min_alpha", "A_at_max_alpha", "violations"}, std::move(detail));
}

OracleReport check_gap_amplification(std::span<const double> alphas, int n_max, int order) {
  std::vector<std::vector<double>> detail;
  int violations = 0;
  if (n_max >= 2) {
    const Eigen::MatrixXd base = build_A(0.0, n_max + 1, with_order(order));
    for (double a : sorted_unique(alphas)) {
      if (!(a > 0.0)) continue;
      const Eigen::MatrixXd A = build_A(a, n_max + 1, with_order(order));
      auto growth = [&](int n, int k) { return (A(n, k) - base(n, k)) / base(n, k); };
      int bad = 0;
      // Fixed row: growth increases as k moves away from n.
      for (int n = 2; n <= n_max; ++n) {
        for (int k = 1; k < n; ++k) bad += !(growth(n, k - 1) > growth(n, k));
      }
      // Fixed column: growth increases with n.
      for (int k = 0; k < n_max; ++k) {
        for (int n = k + 2; n <= n_max; ++n) bad += !(growth(n, k) > growth(n - 1, k));
      }
      violations += bad;
      detail.push_back({a, growth(1, 0), growth(n_max, 0), growth(n_max, n_max - 1),
                        static_cast<double>(bad)});
    }
  }
  return finish("gap_amplification", violations, 0.0,
                {"alpha", "growth_1_0", "growth_nmax_0", "growth_nmax_nmax-1", "violations"},
                std::move(detail));
}

OracleReport check_scan_equivalence(int systems, int max_state, std::span<const int> lengths,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> radius(0.5, 0.9999);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_int_distribution<int> state(1, std::max(1, max_state));
  std::uniform_int_distribution<int> width(1, 3);
  std::vector<std::vector<double>> detail;
  double dev = 0.0;
  for (int s = 0; s < systems && !lengths.empty(); ++s) {
    const int N = state(rng);
    const int U = width(rng);
    const int L = lengths[static_cast<std::size_t>(s) % lengths.size()];
    DiscreteDiagonalSSM ssm;
    ssm.lambda_bar.resize(N);
    ssm.b_bar.resize(N, U);
    for (int n = 0; n < N; ++n) {
      ssm.lambda_bar(n) = std::polar(radius(rng), angle(rng));
      for (int j = 0; j < U; ++j) ssm.b_bar(n, j) = {unit(rng), unit(rng)};
    }
    SequenceBatch u;
    u.values = Eigen::MatrixXd::NullaryExpr(L, U, [&] { return unit(rng); });
    const StateTrajectory seq = recur_sequential(ssm, u);
    const StateTrajectory par = recur_scan(ssm, u, 2 + s % 15);
    const double worst = max_relative_deviation(seq, par);
    dev = std::max(dev, worst);
    detail.push_back({static_cast<double>(N), static_cast<double>(U), static_cast<double>(L), worst});
  }
  return finish("scan_equivalence", dev, 1e-10, {"N", "U", "L", "max_rel_deviation"},
                std::move(detail));
}

OracleReport check_zoh_limit(std::span<const double> alphas, int N) {
  std::vector<std::vector<double>> detail;
  double dev = 0.0;
  const double steps[] = {1e-6, 1e-3, 1e-1, 1.0, 10.0};
  for (double a : alphas) {
    const SpectralInit init = spectral_init(a, N, 1);
    double worst = 0.0;
    double max_modulus = 0.0;
    for (double delta : steps) {
      const DiscreteDiagonalSSM ssm = zoh_discretize(init, delta);
      max_modulus = std::max(max_modulus, ssm.lambda_bar.cwiseAbs().maxCoeff());
      if (delta != steps[0]) continue;
      for (int n = 0; n < N; ++n) {
        const auto target = init.B_tilde(n, 0);
        const auto got = ssm.b_bar(n, 0) / delta;
        const double scale = std::abs(target) > 0.0 ? std::abs(target) : 1.0;
        worst = std::max(worst, std::abs(got - target) / scale);
      }
    }
    if (!(max_modulus < 1.0)) worst = std::numeric_limits<double>::infinity();
    dev = std::max(dev, worst);
    detail.push_back({a, worst, max_modulus});
  }
  return finish("zoh_limit", dev, 1e-4, {"alpha", "max_rel_dev_at_1e-6", "max_abs_lambda_bar"},
                std::move(detail));
}

OracleReport check_ode_consistency(std::span<const double> alphas, int N, int order) {
  const Signal u = sine_signal();
  const double t = 3.0;
  std::vector<std::vector<double>> detail;
  double dev = 0.0;
  for (double a : alphas) {
    const double r = ode_residual(a, N, u, t, 1e-4 * t, with_order(order));
    dev = std::max(dev, r);
    detail.push_back({a, r});
  }
  return finish("ode_consistency", dev, 1e-6, {"alpha", "max_abs_residual"}, std::move(detail));
}

OracleReport check_ode_convergence(std::span<const double> alphas, int N, int order) {
  const Signal u = sine_signal();
  std::vector<std::vector<double>> detail;
  double dev = 0.0;
  for (double a : alphas) {
    const double coarse = ode_residual(a, N, u, 3.0, 1e-2, with_order(order));
    const double fine = ode_residual(a, N, u, 3.0, 5e-3, with_order(order));
    const double ratio = coarse / fine;
    dev = std::max(dev, std::isfinite(ratio) ? std::abs(ratio - 4.0) : std::numeric_limits<double>::infinity());
    detail.push_back({a, coarse, fine, ratio});
  }
  return finish("ode_convergence_order", dev, 0.5, {"alpha", "residual_h", "residual_h_half", "ratio"},
                std::move(detail));
}

namespace {

OracleReport guarded(const std::string& name, const std::function<OracleReport()>& check) {
  try {
    return check();
  } catch (const std::exception& e) {
    OracleReport r;
    r.name = name;
    r.max_deviation = std::numeric_limits<double>::infinity();
    r.passed = false;
    r.note = e.what();
    return r;
  }
}

}  // namespace

std::vector<OracleReport> run_full_suite(std::span<const double> alpha_grid, int N_max,
                                         const SuiteOptions& options) {
  std::vector<OracleReport> reports;
  if (alpha_grid.empty()) return reports;
  for (double a : alpha_grid) require_alpha(a, kMaxConstructionAlpha, true);
  if (N_max < 1 || N_max > kMaxStateDim) throw DomainError("N_max outside [1, 256]");

  const std::vector<double> grid(alpha_grid.begin(), alpha_grid.end());
  const int order = options.quad_order;
  const std::uint64_t seed = options.seed;

  std::vector<int> eig_sizes;
  for (int n : {4, 8, 16, 32, 64}) {
    if (n <= N_max) eig_sizes.push_back(n);
  }
  if (N_max <= 64 && std::find(eig_sizes.begin(), eig_sizes.end(), N_max) == eig_sizes.end()) {
    eig_sizes.push_back(N_max);
  }
  std::vector<int> cond_sizes;
  for (int n : kPrintedConditionSizes) {
    if (n <= N_max) cond_sizes.push_back(n);
  }
  if (cond_sizes.empty()) cond_sizes.push_back(N_max);

  const int small = std::min(N_max, 8);
  const int mono = std::min(N_max - 1, 16);
  const int scan_lengths[] = {16, 1024, 65536};

  reports.push_back(guarded("measure_normalization", [&] { return check_measure_normalization(grid); }));
  reports.push_back(guarded("scale_invariance", [&] {
    return check_scale_invariance(grid, std::min(N_max, 32), 20, seed);
  }));
  reports.push_back(guarded("basis_orthonormality", [&] { return check_basis_orthonormality(grid, N_max); }));
  reports.push_back(guarded("diagonal_invariance", [&] { return check_diagonal_invariance(grid, N_max); }));
  reports.push_back(guarded("legs_recovery_A", [&] { return check_legs_recovery(N_max, order); }));
  reports.push_back(guarded("legs_recovery_B", [&] { return check_legs_input(N_max); }));
  if (contains(grid, 0.0)) {
    reports.push_back(guarded("printed_matrix_alpha_0", [&] { return check_printed_matrix(0.0, order); }));
  }
  if (contains(grid, 0.5)) {
    reports.push_back(guarded("printed_matrix_alpha_0.5", [&] { return check_printed_matrix(0.5, order); }));
  }
  reports.push_back(guarded("eigenvalue_invariance", [&] {
    return check_eigenvalue_invariance(grid, eig_sizes, order);
  }));
  reports.push_back(guarded("condition_growth", [&] { return check_condition_growth(grid, cond_sizes, order); }));
  reports.push_back(guarded("input_projection", [&] { return check_input_projection(grid, N_max); }));
  reports.push_back(guarded("offdiag_monotonicity", [&] { return check_offdiag_monotonicity(grid, mono, order); }));
  reports.push_back(guarded("gap_amplification", [&] { return check_gap_amplification(grid, mono, order); }));
  reports.push_back(guarded("scan_equivalence", [&] {
    return check_scan_equivalence(50, std::min(N_max, 64), scan_lengths, seed);
  }));
  reports.push_back(guarded("zoh_limit", [&] { return check_zoh_limit(grid, std::min(N_max, 16)); }));
  reports.push_back(guarded("ode_consistency", [&] { return check_ode_consistency(grid, small, order); }));
  reports.push_back(guarded("ode_convergence_order", [&] { return check_ode_convergence(grid, small, order); }));
  return reports;
}

}  // namespace fractal
