#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "fractal/error.hpp"
#include "fractal/specfun.hpp"

namespace fractal {

/// Gauss-Jacobi rule for the weight (1-eta)^a (1+eta)^b on [-1, 1].
/// Nodes are strictly increasing in (-1, 1); weights are positive.
struct QuadratureRule {
  JacobiParam param;
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Analytic total mass 2^(a+b+1) Gamma(a+1) Gamma(b+1) / Gamma(a+b+2) of the weight.
double jacobi_weight_mass(JacobiParam p);

/// Golub-Welsch construction from the symmetric tridiagonal Jacobi matrix.
QuadratureRule gauss_jacobi(JacobiParam param, int order);

/// Sum of weights_i * f(nodes_i). Throws NumericError on a non-finite integrand value.
template <class F>
double integrate(const QuadratureRule& rule, F&& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double v = f(rule.nodes[i]);
    if (!std::isfinite(v)) {
      throw NumericError("non-finite integrand at node " + std::to_string(rule.nodes[i]));
    }
    sum += rule.weights[i] * v;
  }
  return sum;
}

}  // namespace fractal
