#include "hypersing/analytic.hpp"

namespace hypersing {

double crack_exact(double sigma0, double mu, double nu, double a, double x) {
  if (!(mu > 0.0)) throw Error(ErrorCode::invalid_parameter, "mu must be positive");
  if (!(nu > 0.0 && nu < 0.5)) throw Error(ErrorCode::invalid_parameter, "nu must lie in (0, 0.5)");
  if (std::abs(x) > a) throw Error(ErrorCode::x_outside_open_interval, "|x| > a");
  return sigma0 / mu * (1.0 - nu) * std::sqrt(std::max(0.0, a * a - x * x));
}

double full_example_exact(double A, double x) {
  if (std::abs(x) > 1.0) throw Error(ErrorCode::x_outside_open_interval, "|x| > 1");
  return 8.0 * std::sqrt(std::max(0.0, 1.0 - x * x)) * (4.0 + A * x) / (32.0 + A * A);
}

}  // namespace hypersing
