#include "hypersing/problems.hpp"

#include <numbers>

namespace hypersing {

void validate(const CrackParams& p) {
  if (!(p.mu > 0.0)) throw Error(ErrorCode::invalid_parameter, "mu must be positive");
  if (!(p.nu > 0.0 && p.nu < 0.5)) throw Error(ErrorCode::invalid_parameter, "nu must lie in (0, 0.5)");
  if (!(p.a > 0.0)) throw Error(ErrorCode::invalid_parameter, "a must be positive");
}

void validate(const ScreenParams& p) {
  if (!(p.k > 0.0)) throw Error(ErrorCode::invalid_parameter, "k must be positive");
  if (!(p.a > 0.0)) throw Error(ErrorCode::invalid_parameter, "a must be positive");
}

FullProblem<double> crack_problem(const CrackParams& params, int n) {
  validate(params);
  const double load = 2.0 * std::numbers::pi * (1.0 - params.nu) * params.sigma0 / params.mu;
  auto raw = constant_rhs<double>(load, "crack load 2 pi (1-nu) sigma0/mu");
  auto canonical = normalize_to_canonical<double>(-2.0, raw, zero_kernel<double>());
  canonical.rhs.description = "crack: f' = -pi (1-nu) sigma0/mu";
  return {make_mesh(-params.a, params.a, n), std::move(canonical.rhs), std::move(canonical.kernel)};
}

FullProblem<Complex> screen_problem(const ScreenParams& params, int n, double tol,
                                    AcousticBranch branch) {
  validate(params);
  const Complex ik(0.0, params.k);
  auto raw = constant_rhs<Complex>(-ik, "screen: -ik");
  auto canonical = normalize_to_canonical<Complex>(Complex(-1.0 / std::numbers::pi, 0.0), raw,
                                                   acoustic_kernel(params, tol, branch));
  canonical.rhs.description = "screen: f' = pi i k";
  return {make_mesh(-params.a, params.a, n), std::move(canonical.rhs), std::move(canonical.kernel)};
}

Complex screen_normalization(const ScreenParams& params) {
  return Complex(0.0, -std::numbers::pi * params.k);
}

}  // namespace hypersing
