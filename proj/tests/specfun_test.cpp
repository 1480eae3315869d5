#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ptmorse/specfun.hpp"

namespace {

using ptmorse::Complex;
using namespace ptmorse::specfun;

double rel(Complex got, Complex want) { return std::abs(got - want) / std::max(1e-300, std::abs(want)); }

// Oracle: coefficients (a)_k / ((b)_k k!) built one at a time in extended
// precision, then Horner.
Complex horner_terminating(int n, Complex b, Complex z) {
  using Wide = std::complex<long double>;
  const Wide wb(b.real(), b.imag());
  const Wide wz(z.real(), z.imag());
  std::vector<Wide> coeff(n + 1);
  coeff[0] = 1.0L;
  for (int k = 1; k <= n; ++k) {
    long double pochhammer_a = 1.0L;
    Wide pochhammer_b = 1.0L;
    long double factorial = 1.0L;
    for (int j = 0; j < k; ++j) {
      pochhammer_a *= (-n + j);
      pochhammer_b *= (wb + static_cast<long double>(j));
      factorial *= (j + 1);
    }
    coeff[k] = pochhammer_a / (pochhammer_b * factorial);
  }
  Wide value = coeff[n];
  for (int k = n - 1; k >= 0; --k) {
    value = value * wz + coeff[k];
  }
  return {static_cast<double>(value.real()), static_cast<double>(value.imag())};
}

// Oracle: Γ(b)/(Γ(a)Γ(b-a)) ∫₀¹ e^{zt} t^{a-1} (1-t)^{b-a-1} dt by composite Simpson,
// valid for integer-friendly smooth integrands (a >= 1, b - a >= 1).
Complex kummer_by_quadrature(double a, double b, Complex z) {
  const int panels = 20000;
  const double h = 1.0 / panels;
  Complex sum = 0.0;
  for (int i = 0; i <= panels; ++i) {
    const double t = i * h;
    const double weight = (i == 0 || i == panels) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += weight * std::exp(z * t) * std::pow(t, a - 1.0) * std::pow(1.0 - t, b - a - 1.0);
  }
  const double prefactor = std::tgamma(b) / (std::tgamma(a) * std::tgamma(b - a));
  return prefactor * sum * h / 3.0;
}

TEST(Kummer, EmptyArgumentIsOne) {
  EXPECT_EQ(kummer_1f1({0.3, 0.1}, 1.5, 0.0), Complex(1.0, 0.0));
}

TEST(Kummer, TerminatingTwoTermSeries) {
  EXPECT_NEAR(std::abs(kummer_1f1(-1.0, 2.0, 0.8) - Complex(0.6, 0.0)), 0.0, 1e-15);
}

TEST(Kummer, EqualParametersGiveExponential) {
  EXPECT_LT(rel(kummer_1f1(2.5, 2.5, 1.0), std::numbers::e), 1e-14);
}

TEST(Kummer, MatchesClosedFormForOneTwo) {
  // 1F1(1; 2; z) = (e^z - 1)/z
  for (Complex z : {Complex(3.0, -2.0), Complex(-5.0, 1.0), Complex(0.1, 7.0)}) {
    EXPECT_LT(rel(kummer_1f1(1.0, 2.0, z), (std::exp(z) - 1.0) / z), 1e-13) << z;
  }
}

TEST(Kummer, MatchesIntegralRepresentation) {
  for (Complex z : {Complex(1.5, -0.5), Complex(-4.0, 2.0), Complex(0.0, 6.0)}) {
    EXPECT_LT(rel(kummer_1f1(2.0, 5.0, z), kummer_by_quadrature(2.0, 5.0, z)), 1e-9) << z;
    EXPECT_LT(rel(kummer_1f1(1.0, 3.5, z), kummer_by_quadrature(1.0, 3.5, z)), 1e-9) << z;
  }
}

TEST(Kummer, NearIntegerFirstParameterTerminates) {
  // -3 + 1e-13 is snapped to -3: a cubic, even at a huge argument.
  const Complex z(250.0, 10.0);
  EXPECT_LT(rel(kummer_1f1(Complex(-3.0 + 1e-13, 0.0), 0.5, z), horner_terminating(3, 0.5, z)), 1e-12);
}

TEST(Kummer, PoleWhenSeriesReachesNonPositiveB) {
  EXPECT_THROW(kummer_1f1(0.5, 0.0, 1.0), ptmorse::PoleError);
  EXPECT_THROW(kummer_1f1(0.5, -2.0, 1.0), ptmorse::PoleError);
  EXPECT_THROW(kummer_1f1(-3.0, -2.0, 1.0), ptmorse::PoleError);
}

TEST(Kummer, TerminatesBeforeThePole) {
  // (b)_k never reaches the zero factor b + 3 for a degree-2 polynomial.
  const Complex z(0.7, -0.2);
  EXPECT_LT(rel(kummer_1f1(-2.0, -3.0, z), horner_terminating(2, -3.0, z)), 1e-14);
}

TEST(Kummer, LargeArgumentRaisesNonConvergence) {
  EXPECT_THROW(kummer_1f1(0.5, 1.5, Complex(201.0, 0.0)), ptmorse::NonConvergence);
}

TEST(Kummer, TerminationMatchesHornerPolynomial) {
  // Relative agreement is meaningless right at a zero of the polynomial, so
  // the disc stays inside |z| <= 8 (the lowest zeros of degree 20 lie near
  // the positive axis); the left half-plane has no cancellation and goes to 10.
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int n = 0; n <= 20; ++n) {
    for (int ai = 1; ai <= 30; ++ai) {
      const double b = 0.1 * ai;
      for (int trial = 0; trial < 4; ++trial) {
        const Complex disc = std::polar(8.0 * unit(rng), 2.0 * std::numbers::pi * unit(rng));
        const Complex left = std::polar(10.0 * unit(rng), std::numbers::pi * (0.5 + unit(rng)));
        for (Complex z : {disc, left}) {
          const Complex want = horner_terminating(n, b, z);
          const Complex got = kummer_1f1(static_cast<double>(-n), b, z);
          EXPECT_LT(std::abs(got - want), 1e-12 * std::max(1.0, std::abs(want)))
              << "n=" << n << " b=" << b << " z=" << z;
        }
      }
    }
  }
}

TEST(Kummer, TransformationIdentity) {
  // e^z 1F1(a; b; -z) = 1F1(b - a; b; z)
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = 0.1 + 1.9 * unit(rng);
    const double b = a + 0.5 + 2.5 * unit(rng);
    const double radius = 10.0 * unit(rng);
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    const Complex z = std::polar(radius, angle);
    const Complex lhs = std::exp(z) * kummer_1f1(a, b, -z);
    const Complex rhs = kummer_1f1(b - a, b, z);
    EXPECT_LT(rel(lhs, rhs), 1e-9) << "a=" << a << " b=" << b << " z=" << z;
  }
}

TEST(Laguerre, LowOrders) {
  const Complex z(0.4, -1.3);
  EXPECT_EQ(laguerre(0, 2.7, z), Complex(1.0, 0.0));
  EXPECT_LT(std::abs(laguerre(1, 0.3, z) - (1.0 + 0.3 - z)), 1e-15);
}

TEST(Laguerre, SecondOrderAgainstExplicitPolynomial) {
  const double z = 2.0;
  EXPECT_DOUBLE_EQ((z * z - 4.0 * z + 2.0) / 2.0, -1.0);
  EXPECT_NEAR(laguerre(2, 0.0, z).real(), -1.0, 1e-15);
  EXPECT_EQ(laguerre(2, 0.0, z).imag(), 0.0);
}

TEST(Laguerre, AgreesWithKummer) {
  // L_n^{(a)}(z) = binom(n + a, n) 1F1(-n; a + 1; z)
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (unsigned n = 0; n <= 15; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const double a = 3.0 * unit(rng) - 0.45; // keeps a + 1 away from non-positive integers
      const Complex z = std::polar(10.0 * unit(rng), 2.0 * std::numbers::pi * unit(rng));
      const double binom = std::tgamma(n + a + 1.0) / (std::tgamma(n + 1.0) * std::tgamma(a + 1.0));
      const Complex want = binom * kummer_1f1(-static_cast<double>(n), a + 1.0, z);
      EXPECT_LT(std::abs(laguerre(n, a, z) - want), 1e-10 * std::max(1.0, std::abs(want)))
          << "n=" << n << " a=" << a << " z=" << z;
    }
  }
}

TEST(ComplexPower, SpecExamples) {
  EXPECT_LT(std::abs(complex_power(1.0, 0.5) - Complex(1.0, 0.0)), 1e-15);
  EXPECT_LT(std::abs(complex_power(Complex(0.0, -1.0), 2.0) - Complex(-1.0, 0.0)), 1e-15);
  // arg(-1) = -π on this branch, so (-1)^{1/2} = e^{-iπ/2} = -i.
  EXPECT_LT(std::abs(complex_power(-1.0, 0.5) - Complex(0.0, -1.0)), 1e-15);
}

TEST(ComplexPower, BranchRange) {
  EXPECT_DOUBLE_EQ(branch_arg(Complex(0.0, 1.0)), std::numbers::pi / 2);
  EXPECT_DOUBLE_EQ(branch_arg(Complex(-1.0, 0.0)), -std::numbers::pi);
  // Just above the negative axis the standard angle π - δ is moved down by 2π.
  EXPECT_NEAR(branch_arg(Complex(-1.0, 1e-9)), -std::numbers::pi - 1e-9, 1e-15);
  EXPECT_NEAR(branch_arg(Complex(-1.0, -1e-9)), -std::numbers::pi + 1e-9, 1e-15);
  EXPECT_NEAR(branch_arg(Complex(-1e-9, 1.0)), -1.5 * std::numbers::pi + 1e-9, 1e-12);
}

TEST(ComplexPower, ZeroBase) {
  EXPECT_EQ(complex_power(0.0, 1.5), Complex(0.0, 0.0));
  EXPECT_THROW(complex_power(0.0, 0.0), ptmorse::DomainError);
  EXPECT_THROW(complex_power(0.0, Complex(-0.5, 2.0)), ptmorse::DomainError);
}

TEST(ComplexPower, ContinuousAwayFromPositiveImaginaryAxis) {
  const Complex p(0.7, -0.3);
  const std::vector<Complex> centres{{0.0, -1.0}, {-1.0, 0.0}, {1.0, 0.5}, {-2.0, -2.0}, {-0.5, 0.2}};
  for (Complex centre : centres) {
    const double radius = 0.25 * std::abs(centre);
    const int steps = 4000;
    Complex previous = complex_power(centre + radius, p);
    for (int i = 1; i <= steps; ++i) {
      const Complex point = centre + std::polar(radius, 2.0 * std::numbers::pi * i / steps);
      const Complex value = complex_power(point, p);
      // Consecutive points are 2π r/4000 apart; a branch jump would be O(1).
      EXPECT_LT(std::abs(value - previous) / std::abs(value), 1e-2) << centre;
      previous = value;
    }
    EXPECT_LT(std::abs(previous - complex_power(centre + radius, p)) / std::abs(previous), 1e-9) << centre;
  }
}

TEST(ComplexPower, JumpsAcrossPositiveImaginaryAxis) {
  const Complex p(0.5, 0.0);
  const Complex right = complex_power(Complex(1e-12, 1.0), p);
  const Complex left = complex_power(Complex(-1e-12, 1.0), p);
  EXPECT_GT(std::abs(right - left), 1.0);
}

} // namespace
