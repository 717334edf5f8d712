#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fractal/error.hpp"
#include "fractal/specfun.hpp"

using namespace fractal;
using doctest::Approx;

TEST_SUITE("specfun") {
  TEST_CASE("ln_gamma values") {
    CHECK(ln_gamma(1.0) == Approx(0.0).epsilon(1e-15));
    CHECK(ln_gamma(0.5) == Approx(0.5723649429247001).epsilon(1e-14));
    CHECK(ln_gamma(0.5) == Approx(std::log(std::sqrt(std::numbers::pi))).epsilon(1e-14));
    CHECK(ln_gamma(5.0) == Approx(std::log(24.0)).epsilon(1e-14));
    CHECK_THROWS_AS(ln_gamma(0.0), DomainError);
    CHECK_THROWS_AS(ln_gamma(-1.5), DomainError);
  }

  TEST_CASE("generalized_binomial values") {
    for (int n = 0; n < 30; ++n) CHECK(generalized_binomial(n, n) == Approx(1.0).epsilon(1e-14));
    CHECK(generalized_binomial(0.5, 1) == Approx(0.5).epsilon(1e-15));
    CHECK(generalized_binomial(3.7, 0) == 1.0);
    CHECK(generalized_binomial(5.0, 2) == Approx(10.0).epsilon(1e-15));
    CHECK_THROWS_AS(generalized_binomial(1.0, -1), DomainError);
  }

  TEST_CASE("generalized_binomial matches the Gamma ratio") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> alpha(0.0, 0.95);
    for (int trial = 0; trial < 200; ++trial) {
      const double a = alpha(rng);
      const int n = static_cast<int>(rng() % 60);
      const double expected =
          std::exp(ln_gamma(n - a + 1.0) - ln_gamma(1.0 - a) - ln_gamma(n + 1.0));
      CHECK(generalized_binomial(n - a, n) == Approx(expected).epsilon(1e-12));
    }
  }

  TEST_CASE("jacobi_eval_all values") {
    const auto p = jacobi_eval_all({-0.5, 0.0}, 1, 1.0);
    REQUIRE(p.size() == 2);
    CHECK(p[0] == 1.0);
    CHECK(p[1] == Approx(0.5).epsilon(1e-15));

    const auto q = jacobi_eval_all({0.0, 0.0}, 2, 0.0);
    CHECK(q[0] == 1.0);
    CHECK(q[1] == Approx(0.0));
    CHECK(q[2] == Approx(-0.5).epsilon(1e-15));

    CHECK(jacobi_eval_all({0.3, 1.2}, 0, 1.0).at(0) == 1.0);
    CHECK_THROWS_AS(jacobi_eval_all({0.0, 0.0}, 3, 1.5), DomainError);
    CHECK_THROWS_AS(jacobi_eval_all({-1.0, 0.0}, 3, 0.0), DomainError);
  }

  TEST_CASE("Legendre polynomials by Bonnet recurrence") {
    for (double y : {-0.9, -0.3, 0.0, 0.41, 0.77, 1.0}) {
      const auto p = jacobi_eval_all({0.0, 0.0}, 20, y);
      double l0 = 1.0, l1 = y;
      CHECK(p[1] == Approx(l1));
      for (int n = 1; n < 20; ++n) {
        const double l2 = ((2.0 * n + 1.0) * y * l1 - n * l0) / (n + 1.0);
        CHECK(p[n + 1] == Approx(l2).epsilon(1e-13));
        l0 = l1;
        l1 = l2;
      }
    }
  }

  TEST_CASE("jacobi_endpoint") {
    CHECK(jacobi_endpoint({-0.3, 0.0}, 0) == 1.0);
    CHECK(jacobi_endpoint({-0.5, 0.0}, 1) == Approx(0.5).epsilon(1e-15));
    for (int n = 0; n < 40; ++n) CHECK(jacobi_endpoint({0.0, 0.0}, n) == Approx(1.0).epsilon(1e-14));
    for (double a : {-0.9, -0.5, -0.1, 0.7}) {
      const auto p = jacobi_eval_all({a, 0.0}, 25, 1.0);
      for (int n = 0; n <= 25; ++n) CHECK(p[n] == Approx(jacobi_endpoint({a, 0.0}, n)).epsilon(1e-12));
    }
  }

  TEST_CASE("jacobi_derivative") {
    CHECK(jacobi_derivative({-0.5, 0.0}, 0, 0.2) == 0.0);
    CHECK(jacobi_derivative({0.0, 0.0}, 1, 0.3) == Approx(1.0).epsilon(1e-15));
    const double h = 1e-6;
    const double fd = (jacobi_eval_all({-0.5, 0.0}, 2, h)[2] - jacobi_eval_all({-0.5, 0.0}, 2, -h)[2]) / (2 * h);
    CHECK(jacobi_derivative({-0.5, 0.0}, 2, 0.0) == Approx(fd).epsilon(1e-6));
  }

  TEST_CASE("jacobi_derivative agrees with finite differences") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> pos(-0.95, 0.95);
    std::uniform_real_distribution<double> alpha(0.0, 0.95);
    for (int trial = 0; trial < 100; ++trial) {
      const JacobiParam p = JacobiParam::fractional(alpha(rng));
      const int n = 1 + static_cast<int>(rng() % 15);
      const double y = pos(rng);
      const double h = 1e-5;
      const double fd = (jacobi_eval_all(p, n, y + h)[n] - jacobi_eval_all(p, n, y - h)[n]) / (2 * h);
      CHECK(jacobi_derivative(p, n, y) == Approx(fd).epsilon(1e-6).scale(1.0));
    }
  }

  TEST_CASE("basis_scale") {
    const BasisScale s0 = basis_scale(0.0, 0);
    CHECK(s0.gamma_n == 1.0);
    CHECK(s0.h_n == Approx(2.0));
    CHECK(basis_scale(0.0, 1).gamma_n == Approx(std::sqrt(3.0)).epsilon(1e-15));
    for (int n = 0; n < 20; ++n) {
      CHECK(basis_scale(0.0, n).gamma_n == Approx(std::sqrt(2.0 * n + 1.0)).epsilon(1e-15));
      CHECK(basis_scale(0.0, n).h_n == Approx(2.0 / (2.0 * n + 1.0)).epsilon(1e-15));
    }
    CHECK(basis_scale(0.5, 1).gamma_n == Approx(2.2360679774997896).epsilon(1e-15));
    CHECK_THROWS_AS(basis_scale(1.0, 1), DomainError);
    CHECK_THROWS_AS(basis_scale(-0.1, 1), DomainError);
    CHECK_THROWS_AS(basis_scale(0.5, -1), DomainError);
  }

  TEST_CASE("require_alpha names the admissible range") {
    try {
      require_alpha(1.2, 0.95, true);
      FAIL("expected DomainError");
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()).find("[0, 0.95]") != std::string::npos);
    }
    CHECK_NOTHROW(require_alpha(0.95, 0.95, true));
    CHECK_THROWS_AS(require_alpha(0.95, 0.95, false), DomainError);
    CHECK_THROWS_AS(require_alpha(std::nan(""), 1.0, false), DomainError);
  }
}
