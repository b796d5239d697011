#pragma once

#include <Eigen/Core>

namespace hypersing {

/// Uniform subdivision of (a, b) into n cells.
///
/// Nodes are t_j = a + j*h for j = 0..n (endpoints stored exactly) and the
/// collocation points are the cell midpoints x_i = a + (i - 1/2)*h for
/// i = 1..n. Every collocation point sits h/2 away from the nearest node.
/// Immutable once built.
class Mesh {
 public:
  Mesh(double a, double b, int n);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  int n() const noexcept { return n_; }
  double h() const noexcept { return h_; }

  /// t_0..t_n, size n + 1.
  const Eigen::VectorXd& nodes() const noexcept { return nodes_; }
  /// x_1..x_n, size n (zero-based storage).
  const Eigen::VectorXd& colloc() const noexcept { return colloc_; }

  double node(int j) const { return nodes_[j]; }
  double colloc(int i) const { return colloc_[i - 1]; }

 private:
  double a_;
  double b_;
  int n_;
  double h_;
  Eigen::VectorXd nodes_;
  Eigen::VectorXd colloc_;
};

Mesh make_mesh(double a, double b, int n);

}  // namespace hypersing
