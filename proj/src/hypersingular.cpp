#include "hypersing/hypersingular.hpp"

namespace hypersing {

double finite_part_constant(double a, double b, double x) {
  detail::require_open_interval(a, b, x);
  return (a - b) / ((x - a) * (b - x));
}

}  // namespace hypersing
