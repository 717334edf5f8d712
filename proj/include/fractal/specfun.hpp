#pragma once

#include <vector>

namespace fractal {

/// Jacobi weight exponents for w(y) = (1-y)^a (1+y)^b on [-1, 1].
struct JacobiParam {
  double a = 0.0;
  double b = 0.0;

  /// The fractional basis family (a, b) = (-alpha, 0).
  static JacobiParam fractional(double alpha) { return {-alpha, 0.0}; }

  /// Throws DomainError unless a > -1 and b > -1.
  void validate() const;
};

/// Normalization data of the degree-n fractional basis function.
struct BasisScale {
  int n = 0;
  double gamma_n = 1.0;  // sqrt((2n+1-alpha)/(1-alpha))
  double h_n = 2.0;      // squared Jacobi norm 2^(1-alpha)/(2n+1-alpha)
};

/// Throws DomainError unless alpha lies in [0, upper) (or [0, upper] when inclusive).
void require_alpha(double alpha, double upper = 1.0, bool inclusive = false);

double ln_gamma(double x);

/// Product form prod_{k=1}^{n} (z-k+1)/k of the generalized binomial coefficient.
double generalized_binomial(double z, int n);

/// P_0(y) ... P_{n_max}(y) by the three-term recurrence in degree.
std::vector<double> jacobi_eval_all(JacobiParam p, int n_max, double y);

/// P_n(1) = binom(n+a, n).
double jacobi_endpoint(JacobiParam p, int n);

/// d/dy P_n^{(a,b)}(y) = (n+a+b+1)/2 P_{n-1}^{(a+1,b+1)}(y); zero for n = 0.
double jacobi_derivative(JacobiParam p, int n, double y);

BasisScale basis_scale(double alpha, int n);

}  // namespace fractal
