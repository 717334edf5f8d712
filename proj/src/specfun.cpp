#include "fractal/specfun.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "fractal/error.hpp"

namespace fractal {

void JacobiParam::validate() const {
  if (!(a > -1.0) || !(b > -1.0)) {
    throw DomainError("Jacobi exponents must satisfy a > -1 and b > -1 (got a=" +
                      std::to_string(a) + ", b=" + std::to_string(b) + ")");
  }
}

void require_alpha(double alpha, double upper, bool inclusive) {
  const bool ok = alpha >= 0.0 && (inclusive ? alpha <= upper : alpha < upper);
  if (!ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "alpha=%g outside admissible range [0, %g%c", alpha, upper,
                  inclusive ? ']' : ')');
    throw DomainError(buf);
  }
}

double ln_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("ln_gamma requires x > 0 (got " + std::to_string(x) + ")");
  }
  return std::lgamma(x);
}

double generalized_binomial(double z, int n) {
  if (n < 0) throw DomainError("generalized_binomial requires n >= 0");
  double value = 1.0;
  for (int k = 1; k <= n; ++k) {
    value *= (z - k + 1) / k;
  }
  return value;
}

std::vector<double> jacobi_eval_all(JacobiParam p, int n_max, double y) {
  p.validate();
  if (n_max < 0) throw DomainError("jacobi_eval_all requires n_max >= 0");
  if (!(std::abs(y) <= 1.0 + 1e-12)) {
    throw DomainError("Jacobi argument outside [-1, 1]: " + std::to_string(y));
  }
  const double a = p.a;
  const double b = p.b;
  std::vector<double> values(static_cast<std::size_t>(n_max) + 1);
  values[0] = 1.0;
  if (n_max == 0) return values;
  values[1] = 0.5 * (a + b + 2.0) * y + 0.5 * (a - b);
  for (int n = 2; n <= n_max; ++n) {
    const double c = 2.0 * n + a + b;
    const double a1 = 2.0 * n * (n + a + b) * (c - 2.0);
    const double a2 = (c - 1.0) * (a * a - b * b);
    const double a3 = (c - 2.0) * (c - 1.0) * c;
    const double a4 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * c;
    values[n] = ((a2 + a3 * y) * values[n - 1] - a4 * values[n - 2]) / a1;
  }
  return values;
}

double jacobi_endpoint(JacobiParam p, int n) {
  p.validate();
  return generalized_binomial(n + p.a, n);
}

double jacobi_derivative(JacobiParam p, int n, double y) {
  if (n <= 0) return 0.0;
  const JacobiParam shifted{p.a + 1.0, p.b + 1.0};
  return 0.5 * (n + p.a + p.b + 1.0) * jacobi_eval_all(shifted, n - 1, y)[n - 1];
}

BasisScale basis_scale(double alpha, int n) {
  require_alpha(alpha);
  if (n < 0) throw DomainError("basis_scale requires n >= 0");
  BasisScale s;
  s.n = n;
  s.gamma_n = std::sqrt((2.0 * n + 1.0 - alpha) / (1.0 - alpha));
  s.h_n = std::pow(2.0, 1.0 - alpha) / (2.0 * n + 1.0 - alpha);
  return s;
}

}  // namespace fractal
