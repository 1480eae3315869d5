#include <cmath>
#include <complex>
#include <vector>

#include <gtest/gtest.h>

#include "ptmorse/verifier.hpp"

namespace {

using ptmorse::Complex;
using ptmorse::ProblemSpec;
using namespace ptmorse::verifier;
namespace contour = ptmorse::contour;

ShootingConfig window(double lo, double hi, unsigned per_unit = 20) {
  ShootingConfig cfg;
  cfg.grid = {lo, hi, std::max(101u, static_cast<unsigned>(per_unit * (hi - lo)) + 1)};
  return cfg;
}

std::vector<double> real_parts(const std::vector<ShootingResult>& found) {
  std::vector<double> out;
  for (const auto& r : found) {
    out.push_back(r.eigenvalue.real());
  }
  return out;
}

void expect_spectrum(const std::vector<AnalyticValue>& want, const std::vector<ShootingResult>& found) {
  const auto report = verify_spectrum(want, found, 1e-6);
  EXPECT_TRUE(report.pass) << "spurious=" << report.spurious << " missing_required=" << report.missing_required
                           << " found=" << ::testing::PrintToString(real_parts(found));
  for (const auto& r : found) {
    EXPECT_TRUE(r.converged) << r.eigenvalue << " " << r.note;
    EXPECT_LT(std::abs(r.eigenvalue.imag()), 1e-6) << r.eigenvalue;
  }
}

TEST(IntegrateHalf, HalvesFollowTheGroundState) {
  // ψ = e^{-r²/2} at E = 1, α = 1/2: ψ'/ψ = -r at the match point r = -ic.
  const auto p = ProblemSpec::ho(1.0, 0.5, 1.0);
  const ShootingConfig cfg;
  for (Side side : {Side::left, Side::right}) {
    const auto half = integrate_half(p, 1.0, side, cfg);
    EXPECT_LT(std::abs(half.derivative / half.value - Complex(0.0, 1.0)), 1e-8);
    EXPECT_GT(half.steps, 0);
  }
}

TEST(IntegrateHalf, RejectsMatchPointOffThePath) {
  const auto p = ProblemSpec::morse(1.0, 2.0, contour::build_C(1.0));
  ShootingConfig cfg;
  cfg.match_parameter = 2.0;
  EXPECT_THROW(integrate_half(p, 1.0, Side::left, cfg), ptmorse::DomainError);
  EXPECT_THROW(integrate_half(p, Complex(std::nan(""), 0.0), Side::left, ShootingConfig{}), ptmorse::DomainError);
}

TEST(Mismatch, VanishesOnlyAtEigenvalues) {
  const auto ho = ProblemSpec::ho(1.0, 0.5, 1.0);
  const ShootingConfig cfg;
  EXPECT_LT(std::abs(mismatch(ho, 1.0, cfg)), 1e-8);
  EXPECT_GT(std::abs(mismatch(ho, 2.0, cfg)), 1e-2);

  const auto morse = ProblemSpec::morse(1.0, 0.0, contour::build_C(1.0));
  EXPECT_LT(std::abs(mismatch(morse, 1.0, cfg)), 1e-8);
  EXPECT_GT(std::abs(mismatch(morse, 4.0, cfg)), 1e-2);
}

TEST(Mismatch, IndependentOfMatchPoint) {
  const auto p = ProblemSpec::morse(1.0, 5.0, contour::build_C(1.0));
  for (double v : {-0.6, 0.0, 0.45}) {
    ShootingConfig cfg;
    cfg.match_parameter = v;
    EXPECT_LT(std::abs(mismatch(p, 2.25, cfg)), 1e-8) << v;
  }
}

TEST(Mismatch, SurvivesRenormalization) {
  // A cap of 300 starts the halves where the growing solution passes 1e100.
  auto p = ProblemSpec::ho(1.0, 0.5, 1.0);
  p.decay_exponent_cap = 300.0;
  const ShootingConfig cfg;
  const auto half = integrate_half(p, 1.0, Side::right, cfg);
  EXPECT_GT(half.log_scale, 0.0);
  EXPECT_LT(std::abs(mismatch(p, 1.0, cfg)), 1e-8);
  EXPECT_LT(std::abs(mismatch(p, 5.0, cfg)), 1e-8);
}

TEST(Mismatch, TighterToleranceShrinksResidualMismatch) {
  const auto p = ProblemSpec::morse(1.0, 2.0, contour::build_C(1.0));
  ShootingConfig loose;
  loose.step_tolerance = 1e-5;
  ShootingConfig tight;
  tight.step_tolerance = 1e-11;
  const double at_loose = std::abs(mismatch(p, 4.0, loose));
  const double at_tight = std::abs(mismatch(p, 4.0, tight));
  EXPECT_LT(at_tight, at_loose);
  EXPECT_LT(at_tight, 1e-9);
}

TEST(FindEigenvalues, OscillatorEquidistantLadder) {
  const auto p = ProblemSpec::ho(1.0, 0.5, 1.0);
  const auto cfg = window(0.0, 12.0);
  const auto found = find_eigenvalues(p, cfg);
  expect_spectrum(analytic_ho(0.5, 1.0, 0.0, 12.0), found);
  EXPECT_EQ(found.size(), 6u); // 1, 3, 5, 7, 9, 11
}

TEST(FindEigenvalues, OscillatorGeneralAlpha) {
  const auto p = ProblemSpec::ho(1.0, 0.7, 1.0);
  const auto found = find_eigenvalues(p, window(0.0, 10.0));
  expect_spectrum(analytic_ho(0.7, 1.0, 0.0, 10.0), found);
}

TEST(FindEigenvalues, MorsePlusFamily) {
  const auto p = ProblemSpec::morse(1.0, 5.0, contour::build_C(1.0));
  const auto found = find_eigenvalues(p, window(0.0, 21.0));
  const auto analytic = analytic_morse(5.0, 1.0, 0.0, 21.0);
  expect_spectrum(analytic, found);
  const std::vector<double> plus{0.25, 2.25, 6.25, 20.25};
  ASSERT_EQ(found.size(), plus.size());
  for (std::size_t i = 0; i < plus.size(); ++i) {
    EXPECT_NEAR(found[i].eigenvalue.real(), plus[i], 1e-6 * (1.0 + plus[i]));
  }
  // The minus level 12.25 is listed but only informational.
  const auto report = verify_spectrum(analytic, found, 1e-6);
  EXPECT_EQ(report.missing, 1);
  EXPECT_EQ(report.missing_required, 0);
}

TEST(FindEigenvalues, CrossingIsLocatedAsDoubleRoot) {
  const auto p = ProblemSpec::morse(1.0, 4.0, contour::build_C(1.0));
  const auto found = find_eigenvalues(p, window(0.0, 10.0));
  expect_spectrum(analytic_morse(4.0, 1.0, 0.0, 10.0), found);
  ASSERT_FALSE(found.empty());
  EXPECT_NEAR(found.front().eigenvalue.real(), 1.0, 1e-6);
  EXPECT_TRUE(found.front().crossing_refined);
}

TEST(FindEigenvalues, IndependentOfDepth) {
  std::vector<std::vector<double>> runs;
  for (double c : {0.5, 2.0}) {
    const auto p = ProblemSpec::morse(1.0, 5.0, contour::build_C(c));
    const auto found = find_eigenvalues(p, window(0.0, 10.0));
    expect_spectrum(analytic_morse(5.0, 1.0, 0.0, 10.0), found);
    runs.push_back(real_parts(found));
  }
  ASSERT_EQ(runs[0].size(), runs[1].size());
  for (std::size_t i = 0; i < runs[0].size(); ++i) {
    EXPECT_NEAR(runs[0][i], runs[1][i], 1e-6 * (1.0 + runs[0][i]));
  }
}

TEST(FindEigenvalues, GeneralizedOneOneMatchesBentCurve) {
  const auto bent = ProblemSpec::morse(1.0, 2.0, contour::build_C(1.0));
  const auto general = ProblemSpec::morse(1.0, 2.0, contour::build_generalized(1, 1, 1.0));
  const auto cfg = window(0.0, 10.0);
  const auto a = real_parts(find_eigenvalues(bent, cfg));
  const auto b = real_parts(find_eigenvalues(general, cfg));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(a[i], b[i], 1e-9 * (1.0 + a[i]));
  }
}

TEST(FindEigenvalues, SerialAndParallelAgree) {
  const auto p = ProblemSpec::morse(1.0, 2.0, contour::build_C(1.0));
  auto cfg = window(0.0, 10.0);
  const auto parallel = real_parts(find_eigenvalues(p, cfg));
  cfg.parallel = false;
  EXPECT_EQ(parallel, real_parts(find_eigenvalues(p, cfg)));
}

TEST(Config, Validation) {
  ShootingConfig cfg;
  cfg.grid = {5.0, 1.0, 10};
  EXPECT_THROW(cfg.validate(), ptmorse::DomainError);
  cfg.grid = {0.0, 1.0, 1};
  EXPECT_THROW(cfg.validate(), ptmorse::DomainError);
  cfg = ShootingConfig{};
  cfg.step_tolerance = 0.0;
  EXPECT_THROW(cfg.validate(), ptmorse::DomainError);
  EXPECT_THROW(ProblemSpec::morse(1.0, 2.0, contour::build_line(1.0)), ptmorse::DomainError);
}

TEST(PromotedMinima, LocalContrast) {
  const std::vector<double> values{5, 4, 0.1, 4, 5, 3, 2.5, 3, 5};
  const auto picked = promoted_minima(values, 0.25, 10);
  ASSERT_EQ(picked.size(), 1u);
  EXPECT_EQ(picked[0], 2u);
}

ShootingResult result_at(double value, bool converged = true) {
  ShootingResult r;
  r.eigenvalue = value;
  r.converged = converged;
  return r;
}

TEST(VerifySpectrum, TrivialCases) {
  EXPECT_TRUE(verify_spectrum(std::vector<double>{}, {}, 1e-6).pass);

  const auto exact = verify_spectrum(std::vector<double>{1.0, 3.0}, {result_at(1.0), result_at(3.0 + 1e-9)}, 1e-6);
  EXPECT_TRUE(exact.pass);
  EXPECT_EQ(exact.matched, 2);

  const auto extra = verify_spectrum(std::vector<double>{1.0}, {result_at(1.0), result_at(2.0)}, 1e-6);
  EXPECT_FALSE(extra.pass);
  EXPECT_EQ(extra.spurious, 1);

  const auto missing = verify_spectrum(std::vector<double>{1.0, 3.0}, {result_at(1.0)}, 1e-6);
  EXPECT_FALSE(missing.pass);
  EXPECT_EQ(missing.missing_required, 1);

  const auto unconverged = verify_spectrum(std::vector<double>{1.0}, {result_at(1.0, false)}, 1e-6);
  EXPECT_FALSE(unconverged.pass);
  EXPECT_EQ(unconverged.spurious, 1);

  EXPECT_THROW(verify_spectrum(std::vector<double>{1.0}, {}, 0.0), ptmorse::DomainError);
}

TEST(VerifySpectrum, OptionalValuesMayBeMissing) {
  const std::vector<AnalyticValue> want{{1.0, "a", true}, {2.0, "b", false}};
  const auto report = verify_spectrum(want, {result_at(1.0)}, 1e-6);
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.missing, 1);
}

TEST(Analytic, MorseLevelsInWindow) {
  const auto levels = analytic_morse(5.0, 1.0, 0.0, 21.0);
  ASSERT_EQ(levels.size(), 5u);
  EXPECT_EQ(levels[0].label, "e+1");
  EXPECT_TRUE(levels[0].required);
  EXPECT_EQ(levels[3].label, "e-0");
  EXPECT_FALSE(levels[3].required);
}

TEST(Analytic, OscillatorLevelsInWindow) {
  const auto levels = analytic_ho(0.7, 1.0, 0.0, 10.0);
  // 0.6, 3.4, 4.6, 7.4, 8.6
  ASSERT_EQ(levels.size(), 5u);
  EXPECT_NEAR(levels[0].value, 0.6, 1e-15);
}

} // namespace
