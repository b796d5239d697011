#include "hypersing/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hypersing/quadrature.hpp"
#include "hypersing/special.hpp"

namespace hypersing {

namespace {

constexpr double pi = std::numbers::pi;

// Breakpoints lo, lo + w, lo + 2w, ..., hi.
std::vector<double> uniform_breaks(double lo, double hi, double width) {
  std::vector<double> breaks{lo};
  const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / width)));
  for (int p = 1; p < panels; ++p) breaks.push_back(lo + (hi - lo) * p / panels);
  breaks.push_back(hi);
  return breaks;
}

}  // namespace

RegularKernel<double> polynomial_kernel(double A) {
  auto k = convolution_kernel<double>([A](double d) { return A * d; }, KernelKind::convolution,
                                      "polynomial A(x-t), A=" + std::to_string(A));
  k.antiderivative = [A](double x, double t) { return A * (0.5 * x * x - x * t); };
  return k;
}

FourierSymbol make_symbol(std::function<double(double)> L, double A, double delta) {
  FourierSymbol s;
  s.L0 = [L, A](double v) { return L(v) - A * std::abs(v); };
  s.L = std::move(L);
  s.A = A;
  s.delta = delta;
  return s;
}

FourierSymbol symbol_from_regular_part(std::function<double(double)> L0, double A, double delta) {
  FourierSymbol s;
  s.L = [L0, A](double v) { return A * std::abs(v) + L0(v); };
  s.L0 = std::move(L0);
  s.A = A;
  s.delta = delta;
  return s;
}

void validate_symbol(const FourierSymbol& symbol) {
  if (!(symbol.delta > 0.0)) throw Error(ErrorCode::symbol_decay_violation, "delta must be positive");
  double low = 0.0, high = 0.0;
  for (int p = 0; p <= 30; ++p) {
    const double s = 10.0 * std::pow(10.0, p / 10.0);  // 10 .. 1e4
    const double l0 = symbol.L0(s);
    const double l = symbol.L(s);
    const double split = l - symbol.A * s;
    if (std::abs(split - l0) > 1e-8 * std::max(1.0, std::abs(l))) {
      throw Error(ErrorCode::symbol_decay_violation,
                  "L0 differs from L - A|s| at s=" + std::to_string(s));
    }
    const double scaled = std::abs(l0) * std::pow(s, 1.0 + symbol.delta);
    if (!std::isfinite(scaled)) throw Error(ErrorCode::symbol_decay_violation, "L0 not finite");
    if (p <= 10) low = std::max(low, scaled);
    if (p >= 20) high = std::max(high, scaled);
  }
  if (high > 10.0 * low + 1e-300) {
    throw Error(ErrorCode::symbol_decay_violation,
                "|L0(s)| s^(1+delta) grows over [10, 1e4]; decay exponent too optimistic");
  }
}

double singular_coefficient(const FourierSymbol& symbol) { return -symbol.A / pi; }

RegularKernel<double> kernel_from_symbol(const FourierSymbol& symbol, double quad_cap, double tol) {
  if (!(quad_cap > 0.0)) throw Error(ErrorCode::invalid_parameter, "quad_cap must be positive");
  if (!(tol > 0.0)) throw Error(ErrorCode::invalid_parameter, "tol must be positive");
  validate_symbol(symbol);

  const auto L0 = symbol.L0;
  const double delta = symbol.delta;
  auto profile = [L0, delta, quad_cap, tol](double d) {
    const double x = std::abs(d);
    // Tail beyond the cap: decay bound, sharpened for x > 0 by one integration by parts.
    const double l_cap = std::abs(L0(quad_cap));
    double tail = l_cap * quad_cap / delta;
    if (x > 0.0) tail = std::min(tail, 2.0 * l_cap / x);
    tail /= pi;
    if (tail > tol) {
      throw Error(ErrorCode::tail_truncation_error,
                  "tail bound " + std::to_string(tail) + " exceeds tol at |x-t|=" + std::to_string(x));
    }
    const double width = x > 0.0 ? std::min(2.0 * pi / x, quad_cap) : quad_cap / 16.0;
    const auto breaks = uniform_breaks(0.0, quad_cap, width);
    auto integrand = [&](double s) { return L0(s) * std::cos(s * x); };
    const auto q = integrate_adaptive(integrand, std::span<const double>(breaks),
                                      AdaptiveOptions{pi * tol, 200000, true});
    return q.value / pi;
  };
  return convolution_kernel<double>(std::move(profile), KernelKind::symbol_derived,
                                    "symbol-derived, cap=" + std::to_string(quad_cap));
}

AcousticProfile::AcousticProfile(double k, double tol, AcousticBranch branch)
    : k_(k), tol_(tol), branch_(branch) {
  if (!(k > 0.0)) throw Error(ErrorCode::invalid_parameter, "wavenumber k must be positive");
  if (!(tol > 0.0)) throw Error(ErrorCode::invalid_parameter, "tol must be positive");
}

double AcousticProfile::tail_start(double d) const {
  const double x = std::abs(d);
  const double k6 = std::pow(k_, 6);
  return std::max({10.0 * k_, 20.0 / x, std::pow(k6 / (16.0 * pi * tol_), 0.25)});
}

double AcousticProfile::tail_bound(double d) const {
  const double s = tail_start(d);
  return std::pow(k_, 6) / (32.0 * pi * std::pow(s, 4));
}

Complex AcousticProfile::operator()(double d) const {
  if (d == 0.0) {
    throw Error(ErrorCode::diagonal_evaluation,
                "acoustic kernel is log-singular at x = t; never evaluate on the diagonal");
  }
  const double x = std::abs(d);
  const double k = k_;
  const double k2 = k * k;
  const double S = tail_start(x);
  const double bound = tail_bound(x);
  if (bound > 0.5 * tol_) {
    throw Error(ErrorCode::tail_truncation_error,
                "asymptotic tail bound " + std::to_string(bound) + " exceeds tol");
  }
  const double part_tol = pi * tol_ / 6.0;
  const double sigma = branch_ == AcousticBranch::plus_i ? 1.0 : -1.0;

  // (0, k): s = k sin(theta), gamma = sigma * i * k cos(theta).
  auto below = [&](double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return Complex(-k * s, sigma * k * c) * (std::cos(k * x * s) * k * c);
  };
  const auto q1 = integrate_adaptive(below, 0.0, 0.5 * pi, AdaptiveOptions{part_tol, 20000, true});

  // (k, 2k): s = k cosh(u), gamma - s = -k e^{-u}.
  auto near = [&](double u) { return -k2 * std::exp(-u) * std::sinh(u) * std::cos(x * k * std::cosh(u)); };
  const auto q2 = integrate_adaptive(near, 0.0, std::acosh(2.0), AdaptiveOptions{part_tol, 20000, true});

  // (2k, S): gamma - s = -k^2 / (gamma + s), no cancellation.
  auto mid = [&](double s) { return -k2 / (std::sqrt(s * s - k2) + s) * std::cos(s * x); };
  const auto breaks = uniform_breaks(2.0 * k, S, 2.0 * pi / x);
  const auto q3 = integrate_adaptive(mid, std::span<const double>(breaks),
                                     AdaptiveOptions{part_tol, 200000, true});

  // (S, inf): int cos(sx)/s = -Ci(Sx); int cos(sx)/s^3 = x^2 J(Sx),
  // J(z) = cos z/(2z^2) - sin z/(2z) + Ci(z)/2.
  const double z = S * x;
  const double ci = cosine_integral(z);
  const double J = std::cos(z) / (2.0 * z * z) - std::sin(z) / (2.0 * z) + 0.5 * ci;
  const double tail = 0.5 * k2 * ci - 0.125 * k2 * k2 * x * x * J;

  return (q1.value + Complex(q2.value + q3.value + tail, 0.0)) / pi;
}

RegularKernel<Complex> acoustic_kernel(const ScreenParams& params, double tol, AcousticBranch branch) {
  if (!(params.a > 0.0)) throw Error(ErrorCode::invalid_parameter, "half-length a must be positive");
  AcousticProfile profile(params.k, tol, branch);
  std::string meta = "acoustic screen K0, k=" + std::to_string(params.k) + ", branch gamma=" +
                     (branch == AcousticBranch::plus_i ? "+i" : "-i") + "*sqrt(k^2-s^2) on |s|<k";
  return convolution_kernel<Complex>([profile](double d) { return profile(d); },
                                     KernelKind::convolution, std::move(meta));
}

}  // namespace hypersing
