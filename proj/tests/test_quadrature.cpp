#include <doctest.h>

#include <cmath>
#include <random>

#include "fractal/error.hpp"
#include "fractal/quadrature.hpp"
#include "fractal/specfun.hpp"

using namespace fractal;
using doctest::Approx;

TEST_SUITE("quadrature") {
  TEST_CASE("two-point Gauss-Legendre") {
    const QuadratureRule r = gauss_jacobi({0.0, 0.0}, 2);
    CHECK(r.nodes[0] == Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r.nodes[1] == Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r.weights[0] == Approx(1.0).epsilon(1e-15));
    CHECK(r.weights[1] == Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("weight mass for a = -1/2") {
    for (int order : {1, 2, 5, 16, 64}) {
      const QuadratureRule r = gauss_jacobi({-0.5, 0.0}, order);
      CHECK(integrate(r, [](double) { return 1.0; }) == Approx(2.8284271247461903).epsilon(1e-14));
    }
  }

  TEST_CASE("monomial moments are exact") {
    const QuadratureRule r = gauss_jacobi({0.0, 0.0}, 8);
    CHECK(integrate(r, [](double x) { return std::pow(x, 14); }) == Approx(2.0 / 15.0).epsilon(1e-13));
    CHECK(std::abs(integrate(r, [](double x) { return x; })) < 1e-15);
    // Exact degree 2M-1 under (1-x)^(-alpha): moments in r = 1-x are 2^(m+1-alpha)/(m+1-alpha).
    for (double alpha : {0.1, 0.5, 0.9, 0.95}) {
      const QuadratureRule s = gauss_jacobi({-alpha, 0.0}, 10);
      for (int m = 0; m < 20; ++m) {
        const double exact = std::pow(2.0, m + 1 - alpha) / (m + 1 - alpha);
        CHECK(integrate(s, [m](double x) { return std::pow(1.0 - x, m); }) == Approx(exact).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("orthogonality of fractional Jacobi polynomials") {
    const JacobiParam p = JacobiParam::fractional(0.5);
    const QuadratureRule r = gauss_jacobi(p, 32);
    const double v = integrate(r, [&](double x) {
      const auto q = jacobi_eval_all(p, 2, x);
      return q[1] * q[2];
    });
    CHECK(std::abs(v) < 1e-12);
  }

  TEST_CASE("nodes ordered and interior, weights positive") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> param(-0.95, 2.0);
    for (int trial = 0; trial < 40; ++trial) {
      const JacobiParam p{param(rng), param(rng)};
      const int order = 1 + static_cast<int>(rng() % 300);
      const QuadratureRule r = gauss_jacobi(p, order);
      double sum = 0.0;
      for (int i = 0; i < order; ++i) {
        CHECK(r.nodes[i] > -1.0);
        CHECK(r.nodes[i] < 1.0);
        CHECK(r.weights[i] > 0.0);
        if (i) CHECK(r.nodes[i] > r.nodes[i - 1]);
        sum += r.weights[i];
      }
      CHECK(sum == Approx(jacobi_weight_mass(p)).epsilon(1e-13));
    }
  }

  TEST_CASE("large orders stay accurate") {
    const QuadratureRule r = gauss_jacobi({-0.9, 0.0}, 1024);
    const JacobiParam p{-0.9, 0.0};
    const double v = integrate(r, [&](double x) {
      const auto q = jacobi_eval_all(p, 200, x);
      return q[200] * q[199];
    });
    CHECK(std::abs(v) < 1e-12);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(gauss_jacobi({0.0, 0.0}, 0), DomainError);
    CHECK_THROWS_AS(gauss_jacobi({-1.0, 0.0}, 4), DomainError);
    const QuadratureRule r = gauss_jacobi({0.0, 0.0}, 4);
    CHECK_THROWS_AS(integrate(r, [](double) { return std::nan(""); }), NumericError);
  }
}
