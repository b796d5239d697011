#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "hypersing/error.hpp"
#include "hypersing/linalg.hpp"

namespace hypersing {

enum class KernelKind { closed_form, convolution, symbol_derived };

/// Smooth (or weakly singular) remainder K0(x, t) of a hypersingular kernel.
///
/// Convolution kernels also carry `profile`, with eval(x, t) == profile(x - t);
/// solvers use it to tabulate the kernel once per distinct difference.
/// `antiderivative` is K1 with dK1/dx = K0, needed by the Fredholm check.
template <class Scalar>
struct RegularKernel {
  std::function<Scalar(double, double)> eval;
  KernelKind kind = KernelKind::closed_form;
  std::optional<std::function<Scalar(double)>> profile;
  std::optional<std::function<Scalar(double, double)>> antiderivative;
  std::string metadata;

  bool is_convolution() const { return profile.has_value(); }

  RegularKernel scaled(Scalar alpha) const {
    RegularKernel out;
    out.eval = [e = eval, alpha](double x, double t) { return alpha * e(x, t); };
    out.kind = kind;
    if (profile) out.profile = [p = *profile, alpha](double d) { return alpha * p(d); };
    if (antiderivative)
      out.antiderivative = [k = *antiderivative, alpha](double x, double t) { return alpha * k(x, t); };
    out.metadata = metadata;
    return out;
  }

  template <class T>
  RegularKernel<T> cast() const {
    RegularKernel<T> out;
    out.eval = [e = eval](double x, double t) { return T(e(x, t)); };
    out.kind = kind;
    if (profile) out.profile = [p = *profile](double d) { return T(p(d)); };
    if (antiderivative)
      out.antiderivative = [k = *antiderivative](double x, double t) { return T(k(x, t)); };
    out.metadata = metadata;
    return out;
  }
};

/// Convolution kernel from a profile K0(d): eval(x, t) = profile(x - t).
template <class Scalar>
RegularKernel<Scalar> convolution_kernel(std::function<Scalar(double)> profile, KernelKind kind,
                                         std::string metadata) {
  RegularKernel<Scalar> k;
  k.eval = [profile](double x, double t) { return profile(x - t); };
  k.kind = kind;
  k.profile = std::move(profile);
  k.metadata = std::move(metadata);
  return k;
}

template <class Scalar>
RegularKernel<Scalar> zero_kernel() {
  auto k = convolution_kernel<Scalar>([](double) { return Scalar(0); }, KernelKind::closed_form,
                                      "zero");
  k.antiderivative = [](double, double) { return Scalar(0); };
  return k;
}

/// K0(x, t) = A (x - t), with K1(x, t) = A (x^2/2 - x t).
RegularKernel<double> polynomial_kernel(double A);

/// Fourier symbol L(s) = A|s| + L0(s) with L0(s) = O(s^{-1-delta}).
struct FourierSymbol {
  std::function<double(double)> L;
  std::function<double(double)> L0;
  double A = 0.0;
  double delta = 1.0;
};

/// Symbol with L0 derived as L(s) - A|s|.
FourierSymbol make_symbol(std::function<double(double)> L, double A, double delta);

/// Symbol given by its regular part; L is reconstructed as A|s| + L0(s).
FourierSymbol symbol_from_regular_part(std::function<double(double)> L0, double A, double delta);

/// Checks L0 = L - A|s| on samples and that |L0(s)| s^{1+delta} stays bounded
/// over [10, 1e4]. Throws symbol-decay-violation otherwise.
void validate_symbol(const FourierSymbol& symbol);

/// Coefficient of 1/x^2 in the kernel generated by symbol: (1/2pi) int A|s| e^{-isx} ds = -A/(pi x^2).
double singular_coefficient(const FourierSymbol& symbol);

/// K0(d) = (1/pi) int_0^cap L0(s) cos(s d) ds, adaptively, with the tail
/// beyond `quad_cap` bounded from the decay exponent. Throws
/// tail-truncation-error-exceeds-tolerance when that bound exceeds tol.
RegularKernel<double> kernel_from_symbol(const FourierSymbol& symbol, double quad_cap,
                                         double tol = 1e-8);

/// Branch of gamma(s) = sqrt(s^2 - k^2) on |s| < k.
enum class AcousticBranch {
  plus_i,   ///< gamma = +i sqrt(k^2 - s^2); matches the reference screen solution
  minus_i,  ///< gamma = -i sqrt(k^2 - s^2)
};

struct ScreenParams {
  double k = 1.0;  ///< wavenumber omega / c
  double a = 1.0;  ///< screen half-length
};

/// K0(d) = (1/pi) int_0^inf (gamma(s) - s) cos(s d) ds for the screen problem.
///
/// The range splits at s = k, 2k and S; beyond S the integrand is replaced by
/// -k^2/(2s) - k^4/(8s^3), integrated in closed form with Ci, and the
/// k^6/s^5 remainder is bounded against tol. Log-singular at d = 0.
class AcousticProfile {
 public:
  AcousticProfile(double k, double tol, AcousticBranch branch);

  Complex operator()(double d) const;

  /// Upper split point for |d|.
  double tail_start(double d) const;
  /// Bound on the discarded tail contribution for |d|.
  double tail_bound(double d) const;

  double k() const { return k_; }
  double tol() const { return tol_; }
  AcousticBranch branch() const { return branch_; }

 private:
  double k_;
  double tol_;
  AcousticBranch branch_;
};

RegularKernel<Complex> acoustic_kernel(const ScreenParams& params, double tol = 1e-10,
                                       AcousticBranch branch = AcousticBranch::plus_i);

}  // namespace hypersing
