#pragma once

#include <Eigen/Core>
#include <numbers>

#include "fractal/operators.hpp"

namespace fractal {

// Eigendecomposition of a lower-triangular matrix with distinct diagonal entries.
// Columns of V have unit Euclidean norm; V_inv is the exact inverse of that V.
struct TriangularEigen {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd V;
  Eigen::MatrixXd V_inv;
};

TriangularEigen eig_triangular(const Eigen::MatrixXd& A);

/// sigma_max / sigma_min. Throws NumericError for a singular or non-finite V.
double condition_number(const Eigen::MatrixXd& V);

struct SpectralOptions {
  double omega_scale = std::numbers::pi;  // imaginary part omega_n = omega_scale * n
  OperatorOptions operators;
};

/// Diagonal initialization lambda_n = -(n+1) + i omega_n with input map derived from the
/// eigenbasis of A(alpha): column j of B_tilde is (V^-1 B) / sqrt(U).
struct SpectralInit {
  double alpha = 0.0;
  int N = 0;
  Eigen::VectorXcd lambda;
  Eigen::MatrixXd V;
  Eigen::MatrixXd V_inv;
  Eigen::MatrixXcd B_tilde;  // N x U
  double cond_V = 1.0;

  int input_width() const { return static_cast<int>(B_tilde.cols()); }
};

SpectralInit spectral_init(double alpha, int N, int U, const SpectralOptions& options = {});

}  // namespace fractal
