#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <string>

#include "hypersing/error.hpp"
#include "hypersing/quadrature.hpp"

namespace hypersing {

/// A twice-differentiable density phi on (a, b) together with phi'.
/// `second` is an optional phi'' used for the removable limit at t = x;
/// without it a central second difference is taken.
template <class Scalar>
struct Density {
  std::function<Scalar(double)> value;
  std::function<Scalar(double)> deriv;
  std::optional<std::function<Scalar(double)>> second;
};

struct FinitePartOptions {
  double tol = 1e-9;
  int max_panels = 10000;
};

/// Closed-form Hadamard finite part of int_a^b dt/(x-t)^2, i.e. (a-b)/((x-a)(b-x)).
double finite_part_constant(double a, double b, double x);

namespace detail {

inline void require_open_interval(double a, double b, double x) {
  if (!(x > a && x < b)) {
    throw Error(ErrorCode::x_outside_open_interval,
                "x=" + std::to_string(x) + " not in (" + std::to_string(a) + ", " +
                    std::to_string(b) + ")");
  }
}

template <class Scalar>
Scalar second_derivative_estimate(const Density<Scalar>& phi, double a, double b, double x) {
  if (phi.second) return (*phi.second)(x);
  // Step shrinks near the endpoints so the stencil stays inside (a, b).
  double step = 1e-4 * (b - a);
  step = std::min({step, 0.5 * (x - a), 0.5 * (b - x)});
  return (phi.value(x + step) - 2.0 * phi.value(x) + phi.value(x - step)) / (step * step);
}

}  // namespace detail

/// Hadamard finite part of int_a^b phi(t)/(x-t)^2 dt for a < x < b.
///
/// Uses the regularisation
///   int [phi(t) - phi(x) - phi'(x)(t-x)]/(x-t)^2 dt
///     + phi(x) (a-b)/((x-a)(b-x)) + phi'(x) ln((b-x)/(x-a)),
/// where the first integral is ordinary and is evaluated adaptively with
/// absolute tolerance `opt.tol`, split at t = x.
template <class Scalar>
Scalar finite_part(const Density<Scalar>& phi, double a, double b, double x,
                   const FinitePartOptions& opt = {}) {
  detail::require_open_interval(a, b, x);
  if (!(opt.tol > 0)) throw Error(ErrorCode::invalid_parameter, "tol must be positive");

  const Scalar px = phi.value(x);
  const Scalar dpx = phi.deriv(x);
  const double eps_switch = 1e-5 * (b - a);
  std::optional<Scalar> half_second;

  auto integrand = [&](double t) -> Scalar {
    const double d = t - x;
    if (std::abs(d) < eps_switch) {
      if (!half_second) half_second = 0.5 * detail::second_derivative_estimate(phi, a, b, x);
      return *half_second;
    }
    return (phi.value(t) - px - dpx * d) / (d * d);
  };

  const std::array<double, 3> breaks{a, x, b};
  const auto q = integrate_adaptive(integrand, std::span<const double>(breaks),
                                    AdaptiveOptions{opt.tol, opt.max_panels, true});
  return q.value + px * finite_part_constant(a, b, x) + dpx * std::log((b - x) / (x - a));
}

/// Cauchy principal value of int_a^b phi(t)/(x-t) dt by the same subtraction:
///   int [phi(t) - phi(x)]/(x-t) dt + phi(x) ln((x-a)/(b-x)).
/// The hypersingular integral is minus its x-derivative.
template <class Scalar>
Scalar cauchy_principal_value(const std::function<Scalar(double)>& phi, double a, double b,
                              double x, double tol = 1e-12) {
  detail::require_open_interval(a, b, x);
  const Scalar px = phi(x);
  const double eps_switch = 1e-7 * (b - a);
  auto integrand = [&](double t) -> Scalar {
    const double d = x - t;
    if (std::abs(d) < eps_switch) {
      const double step = std::min(1e-5 * (b - a), 0.5 * std::min(x - a, b - x));
      return -(phi(x + step) - phi(x - step)) / (2.0 * step);
    }
    return (phi(t) - px) / d;
  };
  const std::array<double, 3> breaks{a, x, b};
  const auto q = integrate_adaptive(integrand, std::span<const double>(breaks),
                                    AdaptiveOptions{tol, 20000, true});
  return q.value + px * std::log((x - a) / (b - x));
}

}  // namespace hypersing
