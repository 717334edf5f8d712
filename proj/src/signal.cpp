#include "fractal/signal.hpp"

#include <cmath>

#include "fractal/error.hpp"

namespace fractal {

Signal constant_signal(double c) {
  return [c](double) { return c; };
}

Signal sine_signal(double frequency, double phase) {
  return [frequency, phase](double tau) { return std::sin(frequency * tau + phase); };
}

Signal polynomial_signal(std::vector<double> coeffs) {
  return [c = std::move(coeffs)](double tau) {
    double v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * tau + *it;
    return v;
  };
}

Signal named_signal(const std::string& name) {
  if (name == "const") return constant_signal(1.0);
  if (name == "sin") return sine_signal();
  if (name == "poly") return polynomial_signal({1.0, 0.5, -0.25, 1.0 / 24.0});
  if (name == "square") return polynomial_signal({0.0, 0.0, 1.0});
  throw DomainError("unknown test signal '" + name + "' (expected const, sin, poly, square)");
}

}  // namespace fractal
