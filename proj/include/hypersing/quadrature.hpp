#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <span>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

#include "hypersing/error.hpp"

namespace hypersing {

/// Nodes and weights of a fixed rule; integrates sum_k w_k f(x_k).
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// m-point Gauss-Legendre rule on (-1, 1).
QuadratureRule gauss_legendre(int m);

/// First-kind Gauss-Chebyshev rule: int f(x)/sqrt(1-x^2) dx on (-1, 1).
/// Nodes cos((2k-1)pi/(2m)), equal weights pi/m.
QuadratureRule gauss_chebyshev_first(int m);

/// Second-kind Gauss-Chebyshev rule: int sqrt(1-x^2) f(x) dx on (-1, 1).
/// Nodes cos(k pi/(m+1)), weights pi/(m+1) sin^2(k pi/(m+1)).
QuadratureRule gauss_chebyshev_second(int m);

template <class T>
struct QuadratureResult {
  T value{};
  double error = 0.0;
  int panels = 0;
  bool converged = false;
};

struct AdaptiveOptions {
  double abs_tol = 1e-10;
  int max_panels = 10000;
  bool throw_on_failure = true;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule.
inline constexpr std::array<double, 8> kronrod_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_w = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss7_w = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
double magnitude(const T& v) {
  return std::abs(v);
}

template <class F>
auto gauss_kronrod_panel(F& f, double lo, double hi) {
  using T = std::decay_t<decltype(f(lo))>;
  const double c = 0.5 * (lo + hi);
  const double r = 0.5 * (hi - lo);
  const T fc = f(c);
  T kronrod = fc * kronrod_w[7];
  T gauss = fc * gauss7_w[3];
  for (int k = 0; k < 7; ++k) {
    const double dx = r * kronrod_x[k];
    const T sum = f(c - dx) + f(c + dx);
    kronrod += sum * kronrod_w[k];
    if (k % 2 == 1) gauss += sum * gauss7_w[k / 2];
  }
  kronrod *= r;
  gauss *= r;
  return std::pair<T, double>{kronrod, magnitude(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over the panels
/// delimited by `breaks` (sorted, at least two entries). The worst panel is
/// bisected until the summed error estimate drops below abs_tol or the panel
/// budget is spent.
template <class F>
auto integrate_adaptive(F&& f, std::span<const double> breaks, const AdaptiveOptions& opt = {}) {
  using T = std::decay_t<decltype(f(breaks[0]))>;
  struct Panel {
    double lo, hi;
    T value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
  };

  std::priority_queue<Panel> queue;
  QuadratureResult<T> result;
  double total_error = 0.0;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    if (!(breaks[p + 1] > breaks[p])) continue;
    auto [v, e] = detail::gauss_kronrod_panel(f, breaks[p], breaks[p + 1]);
    queue.push({breaks[p], breaks[p + 1], v, e});
    total_error += e;
    ++result.panels;
  }

  while (total_error > opt.abs_tol && result.panels < opt.max_panels && !queue.empty()) {
    Panel worst = queue.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) break;  // cannot split further
    queue.pop();
    auto [vl, el] = detail::gauss_kronrod_panel(f, worst.lo, mid);
    auto [vr, er] = detail::gauss_kronrod_panel(f, mid, worst.hi);
    total_error += el + er - worst.error;
    queue.push({worst.lo, mid, vl, el});
    queue.push({mid, worst.hi, vr, er});
    ++result.panels;
  }

  // Re-sum from the panels; the running total drifts under cancellation.
  result.error = 0.0;
  while (!queue.empty()) {
    result.value += queue.top().value;
    result.error += queue.top().error;
    queue.pop();
  }
  result.converged = result.error <= opt.abs_tol;
  if (!result.converged && opt.throw_on_failure) {
    throw Error(ErrorCode::quadrature_nonconvergence,
                "error estimate " + std::to_string(result.error) + " above tolerance " +
                    std::to_string(opt.abs_tol) + " after " + std::to_string(result.panels) +
                    " panels");
  }
  return result;
}

template <class F>
auto integrate_adaptive(F&& f, double lo, double hi, const AdaptiveOptions& opt = {}) {
  const std::array<double, 2> breaks{lo, hi};
  return integrate_adaptive(std::forward<F>(f), std::span<const double>(breaks), opt);
}

}  // namespace hypersing
