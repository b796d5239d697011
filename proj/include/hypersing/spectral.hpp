#pragma once

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>
#include <utility>
#include <vector>

#include "hypersing/analytic.hpp"
#include "hypersing/hypersingular.hpp"
#include "hypersing/kernels.hpp"
#include "hypersing/linalg.hpp"
#include "hypersing/quadrature.hpp"

namespace hypersing {

/// Chebyshev polynomial of the second kind U_j(x), |x| <= 1, by recurrence.
double chebyshev_U(int j, double x);

/// phi(x) = sqrt(1 - xi^2) sum_j coeffs[j] U_j(xi), xi the image of x in (-1, 1).
template <class Scalar>
class ChebyshevSolution {
 public:
  ChebyshevSolution(DenseVector<Scalar> coeffs, double a = -1.0, double b = 1.0)
      : coeffs_(std::move(coeffs)), a_(a), b_(b) {}

  const DenseVector<Scalar>& coeffs() const noexcept { return coeffs_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

  Scalar operator()(double x) const {
    const double xi = to_reference(x);
    if (xi <= -1.0 || xi >= 1.0) return Scalar(0);
    return std::sqrt(1.0 - xi * xi) * series(xi).first;
  }

  /// d phi / dx on the open interval.
  Scalar derivative(double x) const {
    const double xi = to_reference(x);
    const double w = std::sqrt(1.0 - xi * xi);
    const auto [s, ds] = series(xi);
    return (-xi / w * s + w * ds) / (0.5 * (b_ - a_));
  }

  /// value/derivative pair usable by the finite-part evaluator.
  Density<Scalar> as_density() const {
    return {[self = *this](double x) { return self(x); },
            [self = *this](double x) { return self.derivative(x); }, std::nullopt};
  }

 private:
  double to_reference(double x) const {
    const double xi = (2.0 * x - a_ - b_) / (b_ - a_);
    if (xi < -1.0 - 1e-14 || xi > 1.0 + 1e-14)
      throw Error(ErrorCode::x_outside_open_interval, "Chebyshev solution evaluated outside [a, b]");
    return std::clamp(xi, -1.0, 1.0);
  }

  // sum_j c_j U_j(xi) and its xi-derivative via the three-term recurrences.
  std::pair<Scalar, Scalar> series(double xi) const {
    double u_prev = 0.0, u = 1.0, du_prev = 0.0, du = 0.0;
    Scalar s(0), ds(0);
    for (Eigen::Index j = 0; j < coeffs_.size(); ++j) {
      s += coeffs_[j] * u;
      ds += coeffs_[j] * du;
      const double u_next = 2.0 * xi * u - u_prev;
      const double du_next = 2.0 * u + 2.0 * xi * du - du_prev;
      u_prev = u, u = u_next;
      du_prev = du, du = du_next;
    }
    return {s, ds};
  }

  DenseVector<Scalar> coeffs_;
  double a_, b_;
};

struct SpectralOptions {
  int N = 32;
  int mquad = 128;
  double a = -1.0;
  double b = 1.0;
  int threads = 1;
};

/// Truncated second-kind system in the U_j basis.
template <class Scalar>
struct SpectralSystem {
  DenseMatrix<Scalar> matrix;
  DenseVector<Scalar> rhs;
};

namespace detail {

// Evaluates body(p) for p in [0, count), split over `threads` workers. Each
// index is written by exactly one worker, so the result is schedule-independent.
template <class Body>
void parallel_rows(int count, int threads, Body&& body) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int p = 0; p < count; ++p) body(p);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int p = w; p < count; p += threads) body(p);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace detail

/// Assembles [-(i+1) pi^2/2 delta_ij + k_ij] phi_j = f_i, i, j < N.
///
/// k_ij and f_i use second-kind Gauss-Chebyshev rules; the x-grid has mquad
/// nodes and the t-grid mquad + 1, so no x node meets a t node and weakly
/// singular kernels are never evaluated on the diagonal. The interval (a, b)
/// is mapped to (-1, 1), scaling the kernel by r^2 and the rhs by r.
template <class Scalar>
SpectralSystem<Scalar> assemble_spectral(const RegularKernel<Scalar>& kernel,
                                         const RightHandSide<Scalar>& rhs,
                                         const SpectralOptions& opt) {
  if (opt.N < 2) throw Error(ErrorCode::invalid_size, "spectral oracle needs N >= 2");
  if (opt.mquad < 2 * opt.N) throw Error(ErrorCode::invalid_size, "spectral oracle needs mquad >= 2N");
  if (!(opt.b > opt.a)) throw Error(ErrorCode::invalid_interval, "need b > a");

  const int N = opt.N, mx = opt.mquad, mt = opt.mquad + 1;
  const double c = 0.5 * (opt.a + opt.b), r = 0.5 * (opt.b - opt.a);
  const auto gx = gauss_chebyshev_second(mx);
  const auto gt = gauss_chebyshev_second(mt);

  DenseMatrix<Scalar> kgrid(mx, mt);
  detail::parallel_rows(mx, opt.threads, [&](int p) {
    const double x = c + r * gx.nodes[p];
    for (int q = 0; q < mt; ++q) {
      const double t = c + r * gt.nodes[q];
      kgrid(p, q) = r * r * (kernel.profile ? (*kernel.profile)(x - t) : kernel.eval(x, t));
    }
  });

  Eigen::MatrixXd ux(N, mx), ut(N, mt);
  for (int i = 0; i < N; ++i) {
    for (int p = 0; p < mx; ++p) ux(i, p) = chebyshev_U(i, gx.nodes[p]) * gx.weights[p];
    for (int q = 0; q < mt; ++q) ut(i, q) = chebyshev_U(i, gt.nodes[q]) * gt.weights[q];
  }

  SpectralSystem<Scalar> sys;
  sys.matrix = ux.template cast<Scalar>() * kgrid * ut.transpose().template cast<Scalar>();
  const double half_pi2 = 0.5 * std::numbers::pi * std::numbers::pi;
  for (int i = 0; i < N; ++i) sys.matrix(i, i) -= (i + 1) * half_pi2;

  DenseVector<Scalar> fx(mx);
  for (int p = 0; p < mx; ++p) fx[p] = r * rhs.fprime(c + r * gx.nodes[p]);
  sys.rhs = ux.template cast<Scalar>() * fx;
  return sys;
}

template <class Scalar>
ChebyshevSolution<Scalar> solve_spectral(const RegularKernel<Scalar>& kernel,
                                         const RightHandSide<Scalar>& rhs,
                                         const SpectralOptions& opt = {}) {
  const auto sys = assemble_spectral(kernel, rhs, opt);
  const auto lu = lu_factor(sys.matrix);
  return ChebyshevSolution<Scalar>(lu.solve(sys.rhs), opt.a, opt.b);
}

}  // namespace hypersing
