#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hypersing/hypersingular.hpp"
#include "oracles.hpp"

using namespace hypersing;
constexpr double pi = std::numbers::pi;

namespace {

Density<double> constant_density(double c) {
  return {[c](double) { return c; }, [](double) { return 0.0; }, std::nullopt};
}

// sqrt(1-t^2) U_j(t) with its derivative, from the trigonometric oracle forms.
Density<double> weighted_u(int j) {
  return {[j](double t) { return std::sqrt(1.0 - t * t) * oracle::chebyshev_U(j, t); },
          [j](double t) {
            const double w = std::sqrt(1.0 - t * t);
            return -t / w * oracle::chebyshev_U(j, t) + w * oracle::chebyshev_U_prime(j, t);
          },
          std::nullopt};
}

}  // namespace

TEST(FinitePart, ConstantDensityOnSymmetricInterval) {
  EXPECT_NEAR(finite_part(constant_density(1.0), -1.0, 1.0, 0.0), -2.0, 1e-9);
}

TEST(FinitePart, ConstantDensityOffCentre) {
  EXPECT_NEAR(finite_part(constant_density(1.0), 0.0, 2.0, 0.5), -8.0 / 3.0, 1e-9);
}

TEST(FinitePart, ChebyshevU2) {
  const double u2 = 4.0 * 0.09 - 1.0;
  EXPECT_NEAR(finite_part(weighted_u(2), -1.0, 1.0, 0.3), -3.0 * pi * u2, 1e-8);
  EXPECT_NEAR(-3.0 * pi * u2, 3.0 * pi * 0.64, 1e-14);
}

TEST(FinitePartConstant, ClosedForm) {
  EXPECT_DOUBLE_EQ(finite_part_constant(-1.0, 1.0, 0.0), -2.0);
  EXPECT_DOUBLE_EQ(finite_part_constant(-1.0, 1.0, 0.5), -8.0 / 3.0);
  for (double x : {-0.9, -0.2, 0.35, 0.8})
    EXPECT_DOUBLE_EQ(finite_part_constant(-1.0, 2.0, x), finite_part_constant(-2.0, 1.0, -x));
}

TEST(FinitePart, RejectsPointsOutsideOpenInterval) {
  for (double x : {-1.0, 1.0, 1.5}) {
    try {
      finite_part(constant_density(1.0), -1.0, 1.0, x);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::x_outside_open_interval);
    }
    EXPECT_THROW(finite_part_constant(-1.0, 1.0, x), Error);
  }
}

TEST(FinitePart, BudgetExhaustion) {
  try {
    finite_part(weighted_u(8), -1.0, 1.0, 0.1, FinitePartOptions{1e-15, 10});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::quadrature_nonconvergence);
  }
}

TEST(FinitePart, ChebyshevIdentityGrid) {
  for (int j = 0; j <= 8; ++j) {
    const auto phi = weighted_u(j);
    for (int k = 0; k < 21; ++k) {
      const double x = -0.95 + 1.9 * k / 20.0;
      const double value = finite_part(phi, -1.0, 1.0, x, FinitePartOptions{1e-9});
      ASSERT_LE(std::abs(value + pi * (j + 1) * oracle::chebyshev_U(j, x)), 1e-6)
          << "j=" << j << " x=" << x;
    }
  }
}

TEST(FinitePart, ConstantDensityAgreesWithClosedForm) {
  for (int k = 0; k < 21; ++k) {
    const double x = -0.95 + 1.9 * k / 20.0;
    EXPECT_NEAR(finite_part(constant_density(1.0), -1.0, 1.0, x), finite_part_constant(-1.0, 1.0, x), 1e-9);
  }
}

TEST(FinitePart, SecondDerivativeHintIsUsed) {
  auto phi = Density<double>{[](double t) { return std::cos(t); }, [](double t) { return -std::sin(t); },
                             [](double t) { return -std::cos(t); }};
  auto plain = phi;
  plain.second.reset();
  EXPECT_NEAR(finite_part(phi, -1.0, 2.0, 0.4), finite_part(plain, -1.0, 2.0, 0.4), 1e-9);
}

TEST(FinitePart, IsMinusDerivativeOfPrincipalValue) {
  const std::function<double(double)> phi = [](double t) { return std::cos(t); };
  const Density<double> density{phi, [](double t) { return -std::sin(t); }, std::nullopt};
  const double a = -1.0, b = 1.5, x = 0.3;
  const double hadamard = finite_part(density, a, b, x, FinitePartOptions{1e-12});
  std::vector<double> errors;
  for (double delta : {1e-2, 5e-3, 2.5e-3}) {
    const double fd = -(cauchy_principal_value(phi, a, b, x + delta, 1e-14) -
                        cauchy_principal_value(phi, a, b, x - delta, 1e-14)) /
                      (2.0 * delta);
    errors.push_back(std::abs(fd - hadamard));
  }
  for (std::size_t k = 1; k < errors.size(); ++k) {
    const double order = std::log2(errors[k - 1] / errors[k]);
    EXPECT_GE(order, 1.8) << "errors " << errors[k - 1] << " -> " << errors[k];
  }
}

TEST(FinitePart, ComplexDensity) {
  using C = std::complex<double>;
  Density<C> phi{[](double t) { return C(std::sqrt(1 - t * t), 2.0 * std::sqrt(1 - t * t)); },
                 [](double t) { return C(-t, -2.0 * t) / std::sqrt(1 - t * t); }, std::nullopt};
  const C v = finite_part(phi, -1.0, 1.0, 0.2);
  EXPECT_NEAR(v.real(), -pi, 1e-8);
  EXPECT_NEAR(v.imag(), -2.0 * pi, 1e-8);
}
