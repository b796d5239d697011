#include "hypersing/special.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "hypersing/error.hpp"

namespace hypersing {

double cosine_integral(double z) {
  if (!(z > 0.0)) throw Error(ErrorCode::invalid_parameter, "Ci needs z > 0");
  constexpr double eps = 1e-16;
  if (z <= 4.0) {
    // Ci(z) = gamma + ln z + sum_k (-1)^k z^{2k} / (2k (2k)!)
    double sum = 0.0;
    double term = 1.0;  // (-1)^k z^{2k} / (2k)!
    const double z2 = z * z;
    for (int k = 1; k < 100; ++k) {
      term *= -z2 / ((2.0 * k - 1.0) * (2.0 * k));
      const double add = term / (2.0 * k);
      sum += add;
      if (std::abs(add) < eps * std::abs(sum)) break;
    }
    return std::numbers::egamma + std::log(z) + sum;
  }
  // Modified Lentz on E1(iz) = e^{-iz} / (1 + iz - 1^2/(3 + iz - 2^2/(5 + iz - ...))).
  using C = std::complex<double>;
  constexpr double tiny = 1e-300;
  C b(1.0, z);
  C c(1.0 / tiny, 0.0);
  C d = 1.0 / b;
  C h = d;
  for (int i = 2; i < 1000; ++i) {
    const double an = -static_cast<double>((i - 1) * (i - 1));
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < eps) break;
  }
  h *= C(std::cos(z), -std::sin(z));
  return -h.real();
}

}  // namespace hypersing
