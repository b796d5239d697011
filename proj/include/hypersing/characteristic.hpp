#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "hypersing/analytic.hpp"
#include "hypersing/linalg.hpp"
#include "hypersing/mesh.hpp"

namespace hypersing {

/// Condition estimates above this are flagged on the solution.
inline constexpr double kIllConditioned = 1e12;

/// Result of a collocation solve.
///
/// `values[j-1]` is the unknown multiplying the cell integral over
/// (t_{j-1}, t_j). For a symmetric right-hand side the values are mirror
/// symmetric, so they act as samples at the cell midpoints x_j. Between samples
/// the solution is interpolated linearly, with g(a) = g(b) = 0.
template <class Scalar>
class DiscreteSolution {
 public:
  DiscreteSolution(Mesh mesh, DenseVector<Scalar> values, double condition_estimate)
      : mesh_(std::move(mesh)), values_(std::move(values)), condition_(condition_estimate) {
    if (values_.size() != mesh_.n())
      throw Error(ErrorCode::invalid_size, "solution length differs from mesh size");
    if (!values_.allFinite()) throw Error(ErrorCode::singular_matrix, "non-finite solution values");
  }

  const Mesh& mesh() const noexcept { return mesh_; }
  const DenseVector<Scalar>& values() const noexcept { return values_; }
  const Eigen::VectorXd& sample_points() const noexcept { return mesh_.colloc(); }

  double condition_estimate() const noexcept { return condition_; }
  bool ill_conditioned() const noexcept { return condition_ > kIllConditioned; }

  /// Evaluation rule on [a, b].
  Scalar operator()(double x) const {
    const double a = mesh_.a(), b = mesh_.b(), h = mesh_.h();
    const int n = mesh_.n();
    if (x < a || x > b) throw Error(ErrorCode::x_outside_open_interval, "evaluation outside [a, b]");
    // Segment k joins sample k-1 and sample k, where sample 0 is (a, 0) and
    // sample n+1 is (b, 0).
    const double s = (x - a) / h + 0.5;  // position in units of h, samples at integers 1..n
    if (s <= 1.0) {
      const double w = (x - a) / (mesh_.colloc(1) - a);
      return w * values_[0];
    }
    if (s >= n) {
      const double w = (b - x) / (b - mesh_.colloc(n));
      return w * values_[n - 1];
    }
    int k = static_cast<int>(std::floor(s));
    k = std::clamp(k, 1, n - 1);
    const double w = (x - mesh_.colloc(k)) / h;
    return (1.0 - w) * values_[k - 1] + w * values_[k];
  }

  /// Evaluation rule at t_1..t_n.
  DenseVector<Scalar> at_nodes() const {
    DenseVector<Scalar> out(mesh_.n());
    for (int j = 1; j <= mesh_.n(); ++j) out[j - 1] = (*this)(mesh_.node(j));
    return out;
  }

  template <class T>
  DiscreteSolution<T> cast() const {
    return DiscreteSolution<T>(mesh_, values_.template cast<T>(), condition_);
  }

 private:
  Mesh mesh_;
  DenseVector<Scalar> values_;
  double condition_;
};

/// M[i][j] = 1/(x_i - t_j) - 1/(x_i - t_{j-1}), i, j = 1..n.
DenseMatrix<double> assemble_characteristic(const Mesh& mesh);

namespace detail {

template <class Scalar>
DenseVector<Scalar> sample_rhs(const Mesh& mesh, const RightHandSide<Scalar>& rhs) {
  DenseVector<Scalar> out(mesh.n());
  for (int i = 1; i <= mesh.n(); ++i) {
    out[i - 1] = rhs.fprime(mesh.colloc(i));
    if (!std::isfinite(std::abs(out[i - 1])))
      throw Error(ErrorCode::nonfinite_rhs, "f' not finite at x=" + std::to_string(mesh.colloc(i)));
  }
  return out;
}

template <class Scalar>
DiscreteSolution<Scalar> solve_dense(const Mesh& mesh, const DenseMatrix<Scalar>& matrix,
                                     const DenseVector<Scalar>& rhs) {
  const auto lu = lu_factor(matrix);
  return DiscreteSolution<Scalar>(mesh, lu.solve(rhs), lu.condition_estimate_1norm());
}

}  // namespace detail

/// Solves the characteristic collocation system M g = f'(x_i).
template <class Scalar = double>
DiscreteSolution<Scalar> solve_characteristic(const Mesh& mesh, const RightHandSide<Scalar>& rhs) {
  const DenseMatrix<Scalar> m = assemble_characteristic(mesh).template cast<Scalar>();
  return detail::solve_dense(mesh, m, detail::sample_rhs(mesh, rhs));
}

/// Closed-form determinant of the characteristic matrix (Cauchy-determinant
/// factorisation). Limited to n <= 12; the products overflow quickly beyond.
double characteristic_determinant_closed_form(const Mesh& mesh);

}  // namespace hypersing
