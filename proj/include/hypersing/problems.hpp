#pragma once

#include "hypersing/full.hpp"
#include "hypersing/kernels.hpp"

namespace hypersing {

struct CrackParams {
  double sigma0 = 1.0;  ///< applied normal load
  double mu = 1.0;      ///< shear modulus
  double nu = 0.3;      ///< Poisson ratio
  double a = 1.0;       ///< crack half-length
};

template <class Scalar>
struct CanonicalForm {
  RightHandSide<Scalar> rhs;
  RegularKernel<Scalar> kernel;
};

/// Rescales an equation whose hypersingular part is coefficient/(x-t)^2 so the
/// coefficient becomes one.
template <class Scalar>
CanonicalForm<Scalar> normalize_to_canonical(Scalar coefficient, const RightHandSide<Scalar>& rhs,
                                             const RegularKernel<Scalar>& kernel) {
  if (coefficient == Scalar(0))
    throw Error(ErrorCode::zero_singular_coefficient, "singular-part coefficient is zero");
  const Scalar inv = Scalar(1) / coefficient;
  return {rhs.scaled(inv), kernel.scaled(inv)};
}

void validate(const CrackParams& params);
void validate(const ScreenParams& params);

/// Crack under uniform normal load: kernel -2/(x-t)^2, load 2 pi (1-nu) sigma0/mu,
/// rescaled to f'(x) = -pi (1-nu) sigma0/mu with K0 = 0 on (-a, a).
FullProblem<double> crack_problem(const CrackParams& params, int n);

/// Rigid screen on (-a, a): kernel -1/(pi (x-t)^2) + K0, rhs -ik, rescaled to
/// kernel -pi K0 and f'(x) = pi i k.
FullProblem<Complex> screen_problem(const ScreenParams& params, int n, double tol = 1e-10,
                                    AcousticBranch branch = AcousticBranch::plus_i);

/// Factor dividing a screen solution for plotting: -pi i k.
Complex screen_normalization(const ScreenParams& params);

}  // namespace hypersing
