#pragma once

// High-precision reference computations for the verification oracles. They share no code
// path with the double-precision construction: polynomials are expanded in powers of
// (1 - eta) from the hypergeometric series and integrated against closed-form moments.

#include <Eigen/Core>
#include <complex>
#include <vector>

namespace fractal::reference {

/// (gamma_n/gamma_k) <L0[P_n], P_k>_w / <P_k, P_k>_w from exact moment sums.
double galerkin_projection(double alpha, int n, int k);

/// <p_m, p_n> under the normalized measure, gamma taken from the closed form.
double basis_inner(double alpha, int m, int n);

/// gamma_n P_n(1) with gamma_n from the exact norm and P_n(1) from a Gamma-function ratio.
double input_projection(double alpha, int n);

/// Eigenvalues from a nonsymmetric Hessenberg-QR solve carried out at 100 decimal digits. Degrees above 128 are rejected by the polynomial oracles.
std::vector<std::complex<double>> general_eigenvalues(const Eigen::MatrixXd& A);

}  // namespace fractal::reference
