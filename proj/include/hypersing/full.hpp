#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "hypersing/analytic.hpp"
#include "hypersing/characteristic.hpp"
#include "hypersing/kernels.hpp"
#include "hypersing/quadrature.hpp"

namespace hypersing {

/// int_a^b [1/(x-t)^2 + K0(x,t)] g(t) dt = f'(x) on a collocation mesh.
template <class Scalar>
struct FullProblem {
  Mesh mesh;
  RightHandSide<Scalar> rhs;
  RegularKernel<Scalar> kernel;
};

namespace detail {

template <class Scalar, class F>
Scalar checked_kernel_value(F&& f, double x, double t) {
  Scalar v;
  try {
    v = f();
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kernel_evaluation_failure,
                "at (x,t)=(" + std::to_string(x) + "," + std::to_string(t) + "): " + e.what());
  }
  if (!std::isfinite(std::abs(v))) {
    throw Error(ErrorCode::kernel_evaluation_failure,
                "non-finite value at (x,t)=(" + std::to_string(x) + "," + std::to_string(t) + ")");
  }
  return v;
}

}  // namespace detail

/// K[i][j] = K0(x_i, t_j). Convolution kernels are evaluated once per distinct
/// offset i - j (2n - 1 values on a uniform mesh).
template <class Scalar>
DenseMatrix<Scalar> kernel_matrix(const Mesh& mesh, const RegularKernel<Scalar>& kernel) {
  const int n = mesh.n();
  DenseMatrix<Scalar> k(n, n);
  if (kernel.profile) {
    std::vector<Scalar> table(2 * n - 1);
    for (int offset = -(n - 1); offset <= n - 1; ++offset) {
      const int i = offset >= 0 ? offset + 1 : 1;
      const int j = offset >= 0 ? 1 : 1 - offset;
      const double x = mesh.colloc(i), t = mesh.node(j);
      table[offset + n - 1] =
          detail::checked_kernel_value<Scalar>([&] { return (*kernel.profile)(x - t); }, x, t);
    }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) k(i - 1, j - 1) = table[i - j + n - 1];
    return k;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const double x = mesh.colloc(i), t = mesh.node(j);
      k(i - 1, j - 1) = detail::checked_kernel_value<Scalar>([&] { return kernel.eval(x, t); }, x, t);
    }
  }
  return k;
}

/// [M + h K] of the perturbed collocation system (rectangle rule on K0).
template <class Scalar>
DenseMatrix<Scalar> assemble_full(const Mesh& mesh, const RegularKernel<Scalar>& kernel) {
  DenseMatrix<Scalar> m = assemble_characteristic(mesh).template cast<Scalar>();
  m += mesh.h() * kernel_matrix(mesh, kernel);
  return m;
}

template <class Scalar>
DiscreteSolution<Scalar> solve_full(const FullProblem<Scalar>& problem) {
  return detail::solve_dense(problem.mesh, assemble_full(problem.mesh, problem.kernel),
                             detail::sample_rhs(problem.mesh, problem.rhs));
}

/// Residual of the second-kind Fredholm form g + int N1 g = f1 for a density g,
///
///   N1(x,t) = inversion of K1(., t),  f1 = inversion of f,
///
/// both by the m-point weighted Cauchy rule; the t-integral uses m-point
/// Gauss-Legendre. Maximum over x = a + (b-a) k/12, k = 1..11. Diagnostic only.
template <class Scalar>
double fredholm_residual(const FullProblem<Scalar>& problem, const std::function<Scalar(double)>& g,
                         int m) {
  if (!problem.kernel.antiderivative)
    throw Error(ErrorCode::kernel_lacks_antiderivative, "kernel has no K1 with dK1/dx = K0");
  if (!problem.rhs.f) throw Error(ErrorCode::missing_f, "Fredholm residual needs f");
  if (m < 8) throw Error(ErrorCode::invalid_size, "Fredholm residual needs m >= 8");

  const double a = problem.mesh.a(), b = problem.mesh.b();
  const WeightedCauchyInverse<Scalar> f1(*problem.rhs.f, a, b, m);
  const auto rule = gauss_legendre(m);
  const double c = 0.5 * (a + b), r = 0.5 * (b - a);
  const auto& k1 = *problem.kernel.antiderivative;

  std::vector<WeightedCauchyInverse<Scalar>> n1;
  std::vector<Scalar> weighted_g;
  n1.reserve(m);
  for (int q = 0; q < m; ++q) {
    const double t = c + r * rule.nodes[q];
    n1.emplace_back([&k1, t](double tau) { return k1(tau, t); }, a, b, m);
    weighted_g.push_back(r * rule.weights[q] * g(t));
  }

  double worst = 0.0;
  for (int k = 1; k <= 11; ++k) {
    const double x = a + (b - a) * k / 12.0;
    Scalar integral(0);
    for (int q = 0; q < m; ++q) integral += n1[q](x) * weighted_g[q];
    worst = std::max(worst, std::abs(g(x) + integral - f1(x)));
  }
  return worst;
}

template <class Scalar>
double fredholm_residual(const FullProblem<Scalar>& problem, const DiscreteSolution<Scalar>& solution,
                         int m) {
  return fredholm_residual<Scalar>(problem, [&solution](double x) { return solution(x); }, m);
}

}  // namespace hypersing
