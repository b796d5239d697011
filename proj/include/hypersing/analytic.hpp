#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "hypersing/error.hpp"
#include "hypersing/quadrature.hpp"

namespace hypersing {

/// Right-hand side of the canonical equation: f' drives collocation, the
/// antiderivative f (when known) drives the analytic inversion.
template <class Scalar>
struct RightHandSide {
  std::function<Scalar(double)> fprime;
  std::optional<std::function<Scalar(double)>> f;
  std::string description;

  /// Checks f' against a central difference of f at five interior points of
  /// (a, b) to relative 1e-4. No-op when f is absent.
  void validate(double a, double b) const {
    if (!f) return;
    const double step = 1e-5 * (b - a);
    for (int k = 1; k <= 5; ++k) {
      const double x = a + (b - a) * k / 6.0;
      const Scalar fd = ((*f)(x + step) - (*f)(x - step)) / (2.0 * step);
      const Scalar exact = fprime(x);
      if (std::abs(fd - exact) > 1e-4 * std::abs(exact) + 1e-9) {
        throw Error(ErrorCode::rhs_inconsistent,
                    "f' disagrees with the derivative of f at x=" + std::to_string(x));
      }
    }
  }

  /// alpha * rhs, keeping f when present.
  RightHandSide scaled(Scalar alpha) const {
    RightHandSide out;
    out.fprime = [g = fprime, alpha](double x) { return alpha * g(x); };
    if (f) out.f = [g = *f, alpha](double x) { return alpha * g(x); };
    out.description = description;
    return out;
  }
};

/// f'(x) = value, f(x) = value * x.
template <class Scalar>
RightHandSide<Scalar> constant_rhs(Scalar value, std::string description = {}) {
  return {[value](double) { return value; }, [value](double x) { return value * x; },
          std::move(description)};
}

/// Bounded solution of int_a^b g(t)/(x-t)^2 dt = f'(x) from the Cauchy inversion,
/// plus the constant C reported alongside it.
template <class Scalar>
struct InversionResult {
  std::function<Scalar(double)> g;
  Scalar C{};
  double a = -1.0;
  double b = 1.0;

  /// |g| must shrink toward both endpoints: compares offsets 1e-3 and 1e-4 of (b - a).
  bool vanishes_at_endpoints() const {
    const double L = b - a;
    return std::abs(g(a + 1e-4 * L)) <= std::abs(g(a + 1e-3 * L)) &&
           std::abs(g(b - 1e-4 * L)) <= std::abs(g(b - 1e-3 * L));
  }
};

namespace detail {

// Gauss-Chebyshev (first kind) samples of f on the mapped interval.
template <class Scalar>
struct ChebyshevSamples {
  Eigen::VectorXd tau;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values;
};

template <class Scalar>
ChebyshevSamples<Scalar> sample_first_kind(const std::function<Scalar(double)>& f, double c,
                                           double r, int m) {
  const auto rule = gauss_chebyshev_first(m);
  ChebyshevSamples<Scalar> s{rule.nodes, Eigen::Matrix<Scalar, Eigen::Dynamic, 1>(m)};
  for (int k = 0; k < m; ++k) s.values[k] = f(c + r * rule.nodes[k]);
  return s;
}

}  // namespace detail

/// Weighted Cauchy transform
///   (sqrt((x-a)(b-x))/pi^2) PV int_a^b f(t) / (sqrt((t-a)(b-t)) (x-t)) dt
/// by the m-point first-kind Gauss-Chebyshev rule applied to f(t) - f(x).
/// The subtracted term vanishes identically (PV of the Chebyshev weight over
/// x - t is zero inside the interval). When x lands on a node the (m+1)-point
/// rule is used instead.
template <class Scalar>
class WeightedCauchyInverse {
 public:
  WeightedCauchyInverse(std::function<Scalar(double)> f, double a, double b, int m)
      : f_(std::move(f)),
        a_(a),
        b_(b),
        c_(0.5 * (a + b)),
        r_(0.5 * (b - a)),
        primary_(detail::sample_first_kind<Scalar>(f_, c_, r_, m)),
        shifted_(detail::sample_first_kind<Scalar>(f_, c_, r_, m + 1)) {}

  Scalar operator()(double x) const {
    const double xi = (x - c_) / r_;
    if (xi <= -1.0 || xi >= 1.0) {
      if (xi == -1.0 || xi == 1.0) return Scalar(0);
      throw Error(ErrorCode::x_outside_open_interval, "inversion evaluated outside [a, b]");
    }
    const auto& s = hits_node(primary_.tau, xi) ? shifted_ : primary_;
    const Scalar fx = f_(x);
    Scalar sum(0);
    for (Eigen::Index k = 0; k < s.tau.size(); ++k) sum += (s.values[k] - fx) / (xi - s.tau[k]);
    const double weight = std::numbers::pi / static_cast<double>(s.tau.size());
    return std::sqrt(1.0 - xi * xi) / (std::numbers::pi * std::numbers::pi) * weight * sum;
  }

  /// (1/pi^2) int_a^b f(t)/sqrt((t-a)(b-t)) dt.
  Scalar constant() const {
    return primary_.values.sum() * (std::numbers::pi / primary_.tau.size()) /
           (std::numbers::pi * std::numbers::pi);
  }

 private:
  static bool hits_node(const Eigen::VectorXd& tau, double xi) {
    for (Eigen::Index k = 0; k < tau.size(); ++k)
      if (std::abs(xi - tau[k]) < 1e-10) return true;
    return false;
  }

  std::function<Scalar(double)> f_;
  double a_, b_, c_, r_;
  detail::ChebyshevSamples<Scalar> primary_;
  detail::ChebyshevSamples<Scalar> shifted_;
};

/// Closed-form inversion of the characteristic equation for the bounded solution.
/// Requires rhs.f; m >= 8 Gauss-Chebyshev nodes (default 64).
template <class Scalar>
InversionResult<Scalar> invert_characteristic(const RightHandSide<Scalar>& rhs, double a, double b,
                                              int m = 64) {
  if (!rhs.f) throw Error(ErrorCode::missing_f, "inversion needs the antiderivative f");
  if (!(b > a)) throw Error(ErrorCode::invalid_interval, "need b > a");
  if (m < 8) throw Error(ErrorCode::invalid_size, "inversion needs m >= 8");
  auto inverse = std::make_shared<const WeightedCauchyInverse<Scalar>>(*rhs.f, a, b, m);
  InversionResult<Scalar> out;
  out.C = inverse->constant();
  out.g = [inverse](double x) { return (*inverse)(x); };
  out.a = a;
  out.b = b;
  return out;
}

/// Crack opening (sigma0/mu)(1-nu) sqrt(a^2 - x^2) for |x| <= a.
double crack_exact(double sigma0, double mu, double nu, double a, double x);

/// 8 sqrt(1-x^2)(4 + A x)/(32 + A^2): bounded solution on (-1, 1) for
/// K0(x,t) = A(x-t) and f' = -pi.
double full_example_exact(double A, double x);

}  // namespace hypersing
