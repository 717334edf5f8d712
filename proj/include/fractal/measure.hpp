#pragma once

#include <span>
#include <string>
#include <vector>

#include "fractal/signal.hpp"

namespace fractal {

/// mu^(t)(x) = (1-alpha)/t^(1-alpha) (t-x)^(-alpha) on [0, t].
struct FractionalMeasure {
  double alpha = 0.0;
  double t = 1.0;
};

double density(const FractionalMeasure& m, double x);

/// Numerical mass of [0, t] under the singular-weight Gauss-Jacobi rule (exact value 1).
double total_mass(const FractionalMeasure& m, int order = 16);

/// Mass of the oldest fraction p of the window, [0, p t]: 1 - (1-p)^(1-alpha).
double mass_oldest(double alpha, double p);

/// Mass of the most recent fraction p of the window, [t(1-p), t]: p^(1-alpha).
double mass_recent(double alpha, double p);

// Column-labelled numeric table; emitted as CSV.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Densities on an x-grid over [0, t(1-1e-6)] for each alpha plus the LegS, LagT and
/// LegT (window t/2) reference measures.
Table measure_profile(std::span<const double> alphas, int samples, double t = 1.0);

/// Max |x(t; u) - x(t/lambda; u(lambda .))| over the first N projection coefficients.
double check_scale_invariance(double alpha, int N, double dilation, const Signal& u,
                              double t = 1.0, int order = 0);

}  // namespace fractal
