#include "fractal/reference.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Eigenvalues>

#include "fractal/error.hpp"

namespace fractal::reference {

namespace {

// The monomial expansion of P_n cancels about 1.5 n decimal digits, so the polynomial
// oracles carry 240 digits and stop at degree 128. The eigen-solve needs far fewer.
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<240>,
                                           boost::multiprecision::et_off>;
using EigenReal = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>,
                                                boost::multiprecision::et_off>;
constexpr int kMaxDegree = 128;

void require_degree(int n) {
  if (n < 0 || n > kMaxDegree) throw DomainError("reference polynomial degree must lie in [0, 128]");
}

using Poly = std::vector<Real>;  // coefficients in powers of r = 1 - eta

// P_n^{(a,0)}(eta) = binom(n+a, n) 2F1(-n, n+a+1; a+1; r/2).
Poly jacobi_in_r(const Real& a, int n) {
  require_degree(n);
  Real lead = 1;
  for (int k = 1; k <= n; ++k) lead *= (n + a - k + 1) / k;
  Poly c(static_cast<std::size_t>(n) + 1);
  Real term = lead;
  c[0] = term;
  for (int j = 0; j < n; ++j) {
    term *= Real(j - n) * (n + a + 1 + j) / ((a + 1 + j) * Real(j + 1) * 2);
    c[j + 1] = term;
  }
  return c;
}

// L0[P] = P + (1+eta) dP/deta with 1 + eta = 2 - r and d/deta = -d/dr.
Poly apply_l0(const Poly& p) {
  Poly out(p.size() + 1, Real(0));
  for (std::size_t j = 0; j < p.size(); ++j) out[j] += p[j];
  for (std::size_t j = 1; j < p.size(); ++j) {
    const Real d = p[j] * static_cast<int>(j);  // coefficient of r^(j-1) in dP/dr
    out[j - 1] -= 2 * d;
    out[j] += d;
  }
  return out;
}

// int_{-1}^{1} f g (1-eta)^(-alpha) deta = sum f_i g_j 2^(i+j+1-alpha) / (i+j+1-alpha).
Real weighted_inner(const Poly& f, const Poly& g, const Real& alpha) {
  std::vector<Real> moment(f.size() + g.size());
  Real power = pow(Real(2), 1 - alpha);
  for (std::size_t m = 0; m < moment.size(); ++m) {
    moment[m] = power / (static_cast<int>(m) + 1 - alpha);
    power *= 2;
  }
  Real sum = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Real row = 0;
    for (std::size_t j = 0; j < g.size(); ++j) row += g[j] * moment[i + j];
    sum += f[i] * row;
  }
  return sum;
}

Real gamma_closed(const Real& alpha, int n) { return sqrt((2 * n + 1 - alpha) / (1 - alpha)); }

}  // namespace

double galerkin_projection(double alpha, int n, int k) {
  const Real a(alpha);
  const Poly pn = jacobi_in_r(-a, n);
  const Poly pk = jacobi_in_r(-a, k);
  const Real norm_k = weighted_inner(pk, pk, a);
  const Real value = gamma_closed(a, n) / gamma_closed(a, k) * weighted_inner(apply_l0(pn), pk, a) / norm_k;
  return static_cast<double>(value);
}

double basis_inner(double alpha, int m, int n) {
  const Real a(alpha);
  const Real scale = (1 - a) * pow(Real(2), a - 1);
  const Real v = scale * gamma_closed(a, m) * gamma_closed(a, n) *
                 weighted_inner(jacobi_in_r(-a, m), jacobi_in_r(-a, n), a);
  return static_cast<double>(v);
}

double input_projection(double alpha, int n) {
  const Real a(alpha);
  const Real norm = weighted_inner(jacobi_in_r(-a, n), jacobi_in_r(-a, n), a);
  const Real gamma = 1 / sqrt((1 - a) * pow(Real(2), a - 1) * norm);
  // The endpoint value is well conditioned, so its Gamma ratio needs far fewer digits.
  using Narrow = boost::multiprecision::cpp_bin_float_50;
  const Narrow an(alpha);
  const Narrow endpoint = exp(boost::math::lgamma(Narrow(n + 1) - an) - boost::math::lgamma(1 - an) -
                              boost::math::lgamma(Narrow(n + 1)));
  return static_cast<double>(gamma * Real(endpoint));
}

std::vector<std::complex<double>> general_eigenvalues(const Eigen::MatrixXd& A) {
  using MatrixR = Eigen::Matrix<EigenReal, Eigen::Dynamic, Eigen::Dynamic>;
  const MatrixR Ar = A.cast<EigenReal>();
  Eigen::EigenSolver<MatrixR> solver(Ar, false);
  if (solver.info() != Eigen::Success) throw NumericError("reference eigen-solve did not converge");
  std::vector<std::complex<double>> out;
  out.reserve(static_cast<std::size_t>(A.rows()));
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    const auto& ev = solver.eigenvalues()(i);
    out.emplace_back(static_cast<double>(ev.real()), static_cast<double>(ev.imag()));
  }
  return out;
}

}  // namespace fractal::reference
