#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fractal/error.hpp"
#include "fractal/operators.hpp"
#include "fractal/spectral.hpp"

using namespace fractal;
using doctest::Approx;

TEST_SUITE("spectral") {
  TEST_CASE("diagonal input") {
    Eigen::MatrixXd D = Eigen::VectorXd::LinSpaced(5, 1, 5).asDiagonal();
    const TriangularEigen e = eig_triangular(D);
    CHECK((e.V - Eigen::MatrixXd::Identity(5, 5)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((e.V_inv - Eigen::MatrixXd::Identity(5, 5)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(condition_number(e.V) == Approx(1.0));
  }

  TEST_CASE("two-state LegS eigenvectors") {
    const TriangularEigen e = eig_triangular(legs_closed_form(2));
    CHECK(e.eigenvalues(0) == 1.0);
    CHECK(e.eigenvalues(1) == 2.0);
    // Unnormalized first eigenvector (1, -sqrt 3).
    CHECK(e.V(1, 0) / e.V(0, 0) == Approx(-std::sqrt(3.0)));
    CHECK(e.V(0, 1) == 0.0);
    CHECK(e.V(1, 1) == Approx(1.0));
  }

  TEST_CASE("reconstruction and unit columns") {
    for (double a : {0.0, 0.5, 0.9}) {
      const Eigen::MatrixXd A = build_A(a, 12);
      const TriangularEigen e = eig_triangular(A);
      const double scale = A.cwiseAbs().maxCoeff();
      CHECK((e.V * e.V_inv - Eigen::MatrixXd::Identity(12, 12)).cwiseAbs().maxCoeff() < 1e-8);
      CHECK((A * e.V - e.V * e.eigenvalues.asDiagonal()).cwiseAbs().maxCoeff() < 1e-10 * scale);
      for (int j = 0; j < 12; ++j) CHECK(e.V.col(j).norm() == Approx(1.0).epsilon(1e-14));
      for (int n = 0; n < 12; ++n) CHECK(e.eigenvalues(n) == n + 1.0);
    }
  }

  TEST_CASE("conditioning grows with N and alpha") {
    double prev_n = 0.0;
    for (int N : {4, 8, 12, 16}) {
      const double k = condition_number(eig_triangular(build_A(0.5, N)).V);
      CHECK(k > prev_n);
      prev_n = k;
    }
    CHECK(condition_number(eig_triangular(build_A(0.9, 8)).V) >
          condition_number(eig_triangular(build_A(0.0, 8)).V));
    CHECK(condition_number(eig_triangular(build_A(0.0, 1)).V) == 1.0);
  }

  TEST_CASE("rejects unsuitable matrices") {
    Eigen::MatrixXd upper(2, 2);
    upper << 1, 1, 0, 2;
    CHECK_THROWS_AS(eig_triangular(upper), DomainError);
    Eigen::MatrixXd repeated(2, 2);
    repeated << 1, 0, 3, 1;
    CHECK_THROWS_AS(eig_triangular(repeated), NumericError);
    CHECK_THROWS_AS(eig_triangular(Eigen::MatrixXd(2, 3)), ShapeError);
    CHECK_THROWS_AS(condition_number(Eigen::MatrixXd::Zero(3, 3)), NumericError);
  }

  TEST_CASE("spectral initialization") {
    const SpectralInit one = spectral_init(0.0, 1, 1);
    CHECK(one.lambda(0) == std::complex<double>(-1.0, 0.0));
    CHECK(one.B_tilde(0, 0) == std::complex<double>(1.0, 0.0));

    const SpectralInit four = spectral_init(0.0, 4, 1);
    for (int n = 0; n < 4; ++n) {
      CHECK(four.lambda(n).real() == -(n + 1.0));
      CHECK(four.lambda(n).imag() == Approx(std::numbers::pi * n));
    }

    const SpectralInit eight = spectral_init(0.5, 8, 3);
    CHECK(eight.input_width() == 3);
    const Eigen::VectorXd B = build_B(0.5, 8);
    const Eigen::VectorXd projected = eight.V_inv * B;
    CHECK(projected.allFinite());
    CHECK((eight.V * projected - B).norm() < 1e-8);
    const double scale = projected.cwiseAbs().maxCoeff();
    for (int j = 0; j < 3; ++j) {
      CHECK((eight.B_tilde.col(j).real() - projected / std::sqrt(3.0)).cwiseAbs().maxCoeff() < 1e-14 * scale);
      CHECK(eight.B_tilde.col(j).imag().cwiseAbs().maxCoeff() == 0.0);
    }
    CHECK_THROWS_AS(spectral_init(0.5, 8, 0), DomainError);
  }
}
