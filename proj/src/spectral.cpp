#include "hypersing/spectral.hpp"

namespace hypersing {

double chebyshev_U(int j, double x) {
  if (j < 0) throw Error(ErrorCode::invalid_parameter, "Chebyshev index must be non-negative");
  if (std::abs(x) > 1.0) throw Error(ErrorCode::x_outside_open_interval, "U_j needs |x| <= 1");
  double u_prev = 1.0;
  if (j == 0) return u_prev;
  double u = 2.0 * x;
  for (int k = 1; k < j; ++k) {
    const double next = 2.0 * x * u - u_prev;
    u_prev = u;
    u = next;
  }
  return u;
}

}  // namespace hypersing
