#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "hypersing/error.hpp"

namespace hypersing {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;

/// P A = L U with partial pivoting.
///
/// Construction fails with singular-matrix when a pivot falls below
/// 1e-13 * max|A_ij|.
template <class Scalar>
class LuFactorization {
 public:
  explicit LuFactorization(const DenseMatrix<Scalar>& a) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::not_square, "LU needs a square matrix");
    if (!a.allFinite()) throw Error(ErrorCode::singular_matrix, "matrix has non-finite entries");
    max_entry_ = a.size() ? a.cwiseAbs().maxCoeff() : 0.0;
    norm1_ = a.size() ? a.cwiseAbs().colwise().sum().maxCoeff() : 0.0;
    lu_.compute(a);
    const double threshold = 1e-13 * max_entry_;
    const auto diag = lu_.matrixLU().diagonal();
    for (Eigen::Index k = 0; k < diag.size(); ++k) {
      if (!(std::abs(diag[k]) > threshold)) {
        throw Error(ErrorCode::singular_matrix,
                    "pivot " + std::to_string(std::abs(diag[k])) + " at step " + std::to_string(k) +
                        " below 1e-13*max|entry|");
      }
    }
  }

  Eigen::Index size() const { return lu_.rows(); }

  Scalar determinant() const { return lu_.determinant(); }

  template <class Rhs>
  DenseVector<Scalar> solve(const Eigen::MatrixBase<Rhs>& b) const {
    return lu_.solve(b);
  }

  /// Estimate of ||A||_1 ||A^-1||_1 (Hager/Higham estimator on the factors).
  double condition_estimate_1norm() const {
    const double rcond = lu_.rcond();
    return rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  }

  double norm1() const { return norm1_; }

 private:
  Eigen::PartialPivLU<DenseMatrix<Scalar>> lu_;
  double max_entry_ = 0.0;
  double norm1_ = 0.0;
};

template <class Scalar>
LuFactorization<Scalar> lu_factor(const DenseMatrix<Scalar>& a) {
  return LuFactorization<Scalar>(a);
}

template <class Scalar>
double condition_estimate_1norm(const LuFactorization<Scalar>& f) {
  return f.condition_estimate_1norm();
}

}  // namespace hypersing
