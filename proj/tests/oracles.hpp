#pragma once

// Test-only reference values computed independently of the library paths.

#include <cmath>
#include <complex>
#include <numbers>

namespace oracle {

inline double chebyshev_U(int j, double x) {
  // Trigonometric form U_j(cos th) = sin((j+1) th)/sin(th), away from +-1.
  const double th = std::acos(x);
  return std::sin((j + 1) * th) / std::sin(th);
}

inline double chebyshev_T(int j, double x) { return std::cos(j * std::acos(x)); }

/// U_j'(x) = ((j+1) T_{j+1}(x) - x U_j(x)) / (x^2 - 1).
inline double chebyshev_U_prime(int j, double x) {
  return ((j + 1) * chebyshev_T(j + 1, x) - x * chebyshev_U(j, x)) / (x * x - 1.0);
}

/// Screen kernel in closed form with the -i branch:
///   K0(x) = -(i k/2) H1^(1)(k|x|)/|x| + 1/(pi x^2).
inline std::complex<double> acoustic_k0_minus_branch(double k, double x) {
  x = std::abs(x);
  const std::complex<double> h1(std::cyl_bessel_j(1.0, k * x), std::cyl_neumann(1.0, k * x));
  return std::complex<double>(0.0, -0.5 * k) * h1 / x + 1.0 / (std::numbers::pi * x * x);
}

}  // namespace oracle
