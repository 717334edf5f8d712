#pragma once

#include <functional>
#include <string>
#include <vector>

namespace fractal {

// Closed-form continuous-time test signal u(tau), evaluated exactly at quadrature nodes.
using Signal = std::function<double(double)>;

Signal constant_signal(double c);
Signal sine_signal(double frequency = 1.0, double phase = 0.0);
/// sum_i coeffs[i] * tau^i
Signal polynomial_signal(std::vector<double> coeffs);

/// "const", "sin", "poly" (1 + tau/2 - tau^2/4 + tau^3/24) or "square" (tau^2).
Signal named_signal(const std::string& name);

}  // namespace fractal
