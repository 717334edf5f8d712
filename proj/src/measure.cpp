#include "fractal/measure.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "fractal/error.hpp"
#include "fractal/quadrature.hpp"
#include "fractal/specfun.hpp"
#include "fractal/verify.hpp"

namespace fractal {

namespace {

void require_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("measure time t must be > 0");
}

void require_fraction(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("history fraction p must lie in [0, 1]");
}

std::string shortest(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

double density(const FractionalMeasure& m, double x) {
  require_alpha(m.alpha);
  require_time(m.t);
  if (!(x >= 0.0 && x < m.t)) {
    throw DomainError("density evaluated outside [0, t): x=" + std::to_string(x));
  }
  return (1.0 - m.alpha) / std::pow(m.t, 1.0 - m.alpha) * std::pow(m.t - x, -m.alpha);
}

double total_mass(const FractionalMeasure& m, int order) {
  require_alpha(m.alpha);
  require_time(m.t);
  if (order < 4) throw DomainError("total_mass requires order >= 4");
  // x = t(1+eta)/2 turns (t-x)^(-alpha) dx into (t/2)^(1-alpha) (1-eta)^(-alpha) deta,
  // so the prefactor collapses to (1-alpha) 2^(alpha-1) independent of t.
  const QuadratureRule rule = gauss_jacobi(JacobiParam::fractional(m.alpha), order);
  const double sum = integrate(rule, [](double) { return 1.0; });
  return (1.0 - m.alpha) * std::pow(2.0, m.alpha - 1.0) * sum;
}

double mass_oldest(double alpha, double p) {
  require_alpha(alpha);
  require_fraction(p);
  return 1.0 - std::pow(1.0 - p, 1.0 - alpha);
}

double mass_recent(double alpha, double p) {
  require_alpha(alpha);
  require_fraction(p);
  return std::pow(p, 1.0 - alpha);
}

Table measure_profile(std::span<const double> alphas, int samples, double t) {
  if (samples < 2) throw DomainError("measure_profile requires samples >= 2");
  require_time(t);
  for (double a : alphas) require_alpha(a);

  Table table;
  table.header.push_back("x");
  for (double a : alphas) table.header.push_back("alpha_" + shortest(a));
  table.header.insert(table.header.end(), {"legs", "lagt", "legt"});

  const double x_max = t * (1.0 - 1e-6);
  const double theta = 0.5 * t;
  table.rows.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double x = x_max * static_cast<double>(i) / (samples - 1);
    std::vector<double> row;
    row.reserve(table.header.size());
    row.push_back(x);
    for (double a : alphas) row.push_back(density({a, t}, x));
    row.push_back(1.0 / t);
    row.push_back(std::exp(-(t - x)));
    row.push_back(x >= t - theta ? 1.0 / theta : 0.0);
    table.rows.push_back(std::move(row));
  }
  return table;
}

double check_scale_invariance(double alpha, int N, double dilation, const Signal& u, double t,
                              int order) {
  require_alpha(alpha);
  if (N < 1 || N > 32) throw DomainError("check_scale_invariance supports 1 <= N <= 32");
  if (!(dilation > 0.0)) throw DomainError("dilation must be > 0");
  require_time(t);
  const Signal dilated = [&u, dilation](double tau) { return u(dilation * tau); };
  const auto original = projection_coefficients(u, t, alpha, N, order);
  const auto scaled = projection_coefficients(dilated, t / dilation, alpha, N, order);
  return (original - scaled).cwiseAbs().maxCoeff();
}

}  // namespace fractal
