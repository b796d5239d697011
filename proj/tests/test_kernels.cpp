#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hypersing/problems.hpp"
#include "oracles.hpp"

using namespace hypersing;
constexpr double pi = std::numbers::pi;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::invalid_parameter;
}

}  // namespace

TEST(PolynomialKernel, Values) {
  const auto k = polynomial_kernel(3.0);
  EXPECT_DOUBLE_EQ(k.eval(0.5, -0.5), 3.0);
  EXPECT_DOUBLE_EQ(k.eval(-0.25, 0.75), -3.0);
  EXPECT_DOUBLE_EQ((*k.antiderivative)(1.0, 0.5), 3.0 * (0.5 - 0.5));
  EXPECT_TRUE(k.is_convolution());
}

TEST(PolynomialKernel, AntiderivativeDifferentiates) {
  const auto k = polynomial_kernel(-1.7);
  const double h = 1e-6;
  for (double x : {-0.8, 0.1, 0.6})
    for (double t : {-0.3, 0.9}) {
      const double fd = ((*k.antiderivative)(x + h, t) - (*k.antiderivative)(x - h, t)) / (2 * h);
      EXPECT_NEAR(fd, k.eval(x, t), 1e-8);
    }
}

TEST(PolynomialKernel, ShiftInvariant) {
  const auto k = polynomial_kernel(2.5);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int r = 0; r < 20; ++r) {
    const double x = u(rng), t = u(rng), c = u(rng);
    EXPECT_NEAR(k.eval(x + c, t + c), k.eval(x, t), 1e-10);
  }
}

TEST(Symbol, ZeroRegularPartGivesZeroKernel) {
  const auto sym = symbol_from_regular_part([](double) { return 0.0; }, 1.0, 1.0);
  const auto k = kernel_from_symbol(sym, 100.0);
  for (double d : {0.0, 0.3, 1.7}) EXPECT_EQ(k.eval(d, 0.0), 0.0);
}

TEST(Symbol, GaussianAtOrigin) {
  // (1/pi) int_0^inf e^{-s^2} ds = 1/(2 sqrt(pi))
  const auto sym = symbol_from_regular_part([](double s) { return std::exp(-s * s); }, 0.0, 1.0);
  const auto k = kernel_from_symbol(sym, 40.0, 1e-10);
  EXPECT_NEAR(k.eval(0.2, 0.2), 0.28209479177387814347, 1e-9);
  // (1/pi) int_0^inf e^{-s^2} cos(s d) ds = exp(-d^2/4)/(2 sqrt(pi))
  EXPECT_NEAR(k.eval(1.5, 0.0), 0.28209479177387814347 * std::exp(-0.5625), 1e-9);
}

TEST(Symbol, LorentzianProfile) {
  // (1/pi) int_0^inf cos(s)/(1+s^2) ds = e^{-1}/2
  const auto sym = symbol_from_regular_part([](double s) { return 1.0 / (1.0 + s * s); }, 0.0, 1.0);
  const auto k = kernel_from_symbol(sym, 1e4, 1e-6);
  EXPECT_NEAR(k.eval(1.0, 0.0), 0.1839397205857211608, 1e-6);
  EXPECT_NEAR(k.eval(0.0, 1.0), 0.1839397205857211608, 1e-6);
}

TEST(Symbol, PureAbsoluteValue) {
  const auto sym = make_symbol([](double s) { return 2.0 * std::abs(s); }, 2.0, 1.0);
  EXPECT_NO_THROW(validate_symbol(sym));
  EXPECT_DOUBLE_EQ(singular_coefficient(sym), -2.0 / pi);
  const auto k = kernel_from_symbol(sym, 50.0);
  EXPECT_EQ(k.eval(0.4, 0.0), 0.0);
  EXPECT_EQ(k.kind, KernelKind::symbol_derived);
}

TEST(Symbol, DecayViolation) {
  // L0 ~ 1/sqrt(s) claimed with delta = 1
  const auto sym = symbol_from_regular_part([](double s) { return 1.0 / std::sqrt(1.0 + std::abs(s)); }, 0.0, 1.0);
  EXPECT_EQ(code_of([&] { validate_symbol(sym); }), ErrorCode::symbol_decay_violation);
  const auto wrong_split = make_symbol([](double s) { return std::abs(s); }, 0.5, 1.0);
  EXPECT_EQ(code_of([&] { validate_symbol(wrong_split); }), ErrorCode::symbol_decay_violation);
}

TEST(Symbol, TailTruncation) {
  const auto sym = symbol_from_regular_part([](double s) { return 1.0 / (1.0 + s * s); }, 0.0, 1.0);
  const auto k = kernel_from_symbol(sym, 10.0, 1e-10);
  EXPECT_EQ(code_of([&] { k.eval(0.5, 0.0); }), ErrorCode::tail_truncation_error);
}

TEST(Acoustic, MatchesHankelForm) {
  for (double k : {0.5, 1.5, 2.5}) {
    const auto minus = acoustic_kernel({k, 1.0}, 1e-10, AcousticBranch::minus_i);
    const auto plus = acoustic_kernel({k, 1.0}, 1e-10, AcousticBranch::plus_i);
    for (double x : {0.01, 0.1, 0.5, 1.0, 1.9}) {
      const auto ref = oracle::acoustic_k0_minus_branch(k, x);
      EXPECT_LE(std::abs(minus.eval(x, 0.0) - ref), 1e-8) << k << " " << x;
      EXPECT_LE(std::abs(plus.eval(0.0, x) - std::conj(ref)), 1e-8) << k << " " << x;
    }
  }
}

TEST(Acoustic, FrozenValues) {
  const auto minus = acoustic_kernel({1.5, 1.0}, 1e-10, AcousticBranch::minus_i);
  const Complex v1 = minus.eval(0.1, 0.0), v2 = minus.eval(0.5, 0.0), v3 = minus.eval(1.9, 0.0);
  EXPECT_NEAR(v1.real(), -0.89663736183758894, 1e-8);
  EXPECT_NEAR(v1.imag(), -0.560919451209263846, 1e-8);
  EXPECT_NEAR(v2.real(), -0.283152281418765443, 1e-8);
  EXPECT_NEAR(v2.imag(), -0.523865403262293289, 1e-8);
  EXPECT_NEAR(v3.real(), 0.198776547659815195, 1e-8);
  EXPECT_NEAR(v3.imag(), -0.155071781273064666, 1e-8);
}

TEST(Acoustic, LogarithmicNearDiagonal) {
  // Re K0 ~ (k^2/(2 pi)) ln|x| as x -> 0.
  const auto kern = acoustic_kernel({1.0, 1.0});
  const double x1 = 1e-4, x2 = 1e-6;
  const double slope = (kern.eval(x1, 0.0).real() - kern.eval(x2, 0.0).real()) / (std::log(x1) - std::log(x2));
  const double expected = 1.0 / (2.0 * pi);
  EXPECT_NEAR(slope / expected, 1.0, 0.25);
}

TEST(Acoustic, SmallWavenumber) {
  const auto kern = acoustic_kernel({1e-3, 1.0});
  EXPECT_LE(std::abs(kern.eval(0.5, 0.0)), 1e-3);
}

TEST(Acoustic, EvenInOffset) {
  const auto kern = acoustic_kernel({2.0, 1.0});
  for (double d : {0.05, 0.7, 1.6}) EXPECT_EQ(kern.eval(d, 0.0), kern.eval(0.0, d));
}

TEST(Acoustic, TightenedToleranceStaysClose) {
  const AcousticProfile coarse(1.5, 1e-6, AcousticBranch::plus_i);
  const AcousticProfile fine(1.5, 5e-7, AcousticBranch::plus_i);
  for (double d : {0.02, 0.4, 1.3}) {
    EXPECT_LE(std::abs(coarse(d) - fine(d)), 1e-6);
    EXPECT_LE(coarse.tail_bound(d), 0.5 * coarse.tol());
  }
}

TEST(Acoustic, DiagonalRefused) {
  const auto kern = acoustic_kernel({1.0, 1.0});
  EXPECT_EQ(code_of([&] { kern.eval(0.3, 0.3); }), ErrorCode::diagonal_evaluation);
  EXPECT_EQ(code_of([] { AcousticProfile(-1.0, 1e-8, AcousticBranch::plus_i); }), ErrorCode::invalid_parameter);
}

TEST(Crack, FortyCells) {
  const CrackParams p{1.0, 1.0, 0.3, 1.0};
  const auto problem = crack_problem(p, 40);
  const auto sol = solve_full(problem);
  const auto g = sol.at_nodes();
  for (int j = 1; j <= 40; ++j) {
    const double t = sol.mesh().node(j);
    EXPECT_LE(std::abs(g[j - 1] - crack_exact(1.0, 1.0, 0.3, 1.0, t)), 0.05 * 0.7) << t;
  }
}

TEST(Crack, LinearInLoad) {
  const auto zero = solve_full(crack_problem({0.0, 1.0, 0.3, 1.0}, 20));
  EXPECT_EQ(zero.values().cwiseAbs().maxCoeff(), 0.0);
  const auto one = solve_full(crack_problem({1.0, 2.0, 0.25, 1.5}, 20));
  const auto two = solve_full(crack_problem({2.0, 2.0, 0.25, 1.5}, 20));
  EXPECT_LE((two.values() - 2.0 * one.values()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Crack, Validation) {
  EXPECT_EQ(code_of([] { crack_problem({1.0, 0.0, 0.3, 1.0}, 10); }), ErrorCode::invalid_parameter);
  EXPECT_EQ(code_of([] { crack_problem({1.0, 1.0, 0.5, 1.0}, 10); }), ErrorCode::invalid_parameter);
  EXPECT_EQ(code_of([] { crack_problem({1.0, 1.0, 0.3, -1.0}, 10); }), ErrorCode::invalid_parameter);
}

TEST(Canonical, Rescaling) {
  const auto c = normalize_to_canonical<double>(-2.0, constant_rhs<double>(4.0), polynomial_kernel(6.0));
  EXPECT_DOUBLE_EQ(c.rhs.fprime(0.3), -2.0);
  EXPECT_DOUBLE_EQ((*c.rhs.f)(0.5), -1.0);
  EXPECT_DOUBLE_EQ(c.kernel.eval(1.0, 0.0), -3.0);
  EXPECT_EQ(code_of([] { normalize_to_canonical<double>(0.0, constant_rhs<double>(1.0), zero_kernel<double>()); }),
            ErrorCode::zero_singular_coefficient);
}

TEST(Screen, CanonicalForm) {
  const ScreenParams p{1.5, 1.0};
  const auto problem = screen_problem(p, 10);
  EXPECT_LE(std::abs(problem.rhs.fprime(0.2) - Complex(0.0, pi * 1.5)), 1e-14);
  const AcousticProfile raw(1.5, 1e-10, AcousticBranch::plus_i);
  EXPECT_LE(std::abs(problem.kernel.eval(0.4, 0.0) + pi * raw(0.4)), 1e-12);
  EXPECT_EQ(screen_normalization(p), Complex(0.0, -pi * 1.5));
  EXPECT_EQ(code_of([] { screen_problem({0.0, 1.0}, 10); }), ErrorCode::invalid_parameter);
}

TEST(Screen, BranchConjugation) {
  // Opposite branch with conjugated data gives the conjugate solution.
  const ScreenParams p{1.0, 1.0};
  const auto plus = screen_problem(p, 24, 1e-10, AcousticBranch::plus_i);
  auto minus = screen_problem(p, 24, 1e-10, AcousticBranch::minus_i);
  minus.rhs = minus.rhs.scaled(Complex(-1.0, 0.0));  // conj(pi i k) = -pi i k
  const auto a = solve_full(plus), b = solve_full(minus);
  EXPECT_LE((a.values().conjugate() - b.values()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Screen, DefaultBranchSign) {
  const ScreenParams p{0.5, 1.0};
  const auto sol = solve_full(screen_problem(p, 40));
  const Complex centre = sol(0.0) / screen_normalization(p);
  EXPECT_GT(centre.real(), 0.0);
  EXPECT_LT(centre.imag(), 0.0);
}
