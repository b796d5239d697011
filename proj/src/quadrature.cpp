#include "hypersing/quadrature.hpp"

#include <numbers>
#include <utility>

namespace hypersing {

namespace {

// P_m(x) and P_m'(x) by the three-term recurrence.
std::pair<double, double> legendre(int m, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= m; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, m * (x * p1 - p0) / (x * x - 1.0)};
}

}  // namespace

QuadratureRule gauss_legendre(int m) {
  if (m < 1) throw Error(ErrorCode::invalid_size, "Gauss-Legendre needs m >= 1");
  QuadratureRule rule{Eigen::VectorXd(m), Eigen::VectorXd(m)};
  for (int i = 0; i < (m + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(m, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(m, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[m - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[m - 1 - i] = w;
  }
  if (m % 2 == 1) rule.nodes[m / 2] = 0.0;
  return rule;
}

QuadratureRule gauss_chebyshev_first(int m) {
  if (m < 1) throw Error(ErrorCode::invalid_size, "Gauss-Chebyshev needs m >= 1");
  QuadratureRule rule{Eigen::VectorXd(m), Eigen::VectorXd::Constant(m, std::numbers::pi / m)};
  for (int k = 1; k <= m; ++k) rule.nodes[k - 1] = std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * m));
  return rule;
}

QuadratureRule gauss_chebyshev_second(int m) {
  if (m < 1) throw Error(ErrorCode::invalid_size, "Gauss-Chebyshev needs m >= 1");
  QuadratureRule rule{Eigen::VectorXd(m), Eigen::VectorXd(m)};
  for (int k = 1; k <= m; ++k) {
    const double theta = k * std::numbers::pi / (m + 1);
    const double s = std::sin(theta);
    rule.nodes[k - 1] = std::cos(theta);
    rule.weights[k - 1] = std::numbers::pi / (m + 1) * s * s;
  }
  return rule;
}

}  // namespace hypersing
