#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "svmasym/hard_margin_theory.hpp"

using namespace svmasym;
using namespace svmasym::hard;

namespace {

double foc(double eta, double rho, double shift, const ModelParams& m) {
  const double a = rho * m.snr() - shift;
  return m.pi1 * gauss::hinge_moment(a + eta) - m.pi0 * gauss::hinge_moment(a - eta);
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST(EtaStarMargin, SymmetricClassesGiveZero) {
  EXPECT_NEAR(eta_star_margin(0.5, 0.0, ModelParams::balanced(1.0, 1.0, 2.0)), 0.0, 1e-12);
}

TEST(EtaStarMargin, LargerClassGetsPositiveBias) {
  const ModelParams m = ModelParams::with_pi1(1.0, 1.0, 2.0, 0.7);
  const double eta = eta_star_margin(0.5, 0.0, m);
  EXPECT_GT(eta, 0.0);
  EXPECT_LE(std::abs(foc(eta, 0.5, 0.0, m)), 1e-10);
}

TEST(EtaStarMargin, ResidualAgainstGridScan) {
  const ModelParams m = ModelParams::with_pi1(1.0, 1.0, 2.0, 0.6);
  const double eta = eta_star_margin(0.3, 0.8, m);
  EXPECT_LE(std::abs(foc(eta, 0.3, 0.8, m)), 1e-10);
  double scan = 0.0;
  const int n = 400001;
  for (int i = 1; i < n; ++i) {
    const double a = -4.0 + 8.0 * (i - 1) / (n - 1), b = -4.0 + 8.0 * i / (n - 1);
    if (foc(a, 0.3, 0.8, m) > 0.0 && foc(b, 0.3, 0.8, m) <= 0.0) scan = 0.5 * (a + b);
  }
  EXPECT_NEAR(eta, scan, 2e-5);
}

TEST(SeparabilityThreshold, PhaseBoundaryCoordinates) {
  const double want[][2] = {{0.1, 2.012767}, {1.0, 3.700023}, {2.0, 20.722920}, {3.0, 315.921855}};
  for (const auto& w : want) EXPECT_LT(rel(separability_threshold(ModelParams::balanced(w[0], 1.0, 1.0)), w[1]), 1e-2);
  EXPECT_NEAR(separability_threshold(ModelParams::balanced(0.1, 1.0, 1.0)), 2.012767, 1e-2);
  EXPECT_NEAR(separability_threshold(ModelParams::balanced(1.0, 1.0, 1.0)), 3.700023, 1e-2);
  EXPECT_NEAR(separability_threshold(ModelParams::balanced(2.0, 1.0, 1.0)), 20.722920, 0.1);
}

TEST(SeparabilityThreshold, MatchesTwoDimensionalGridOracle) {
  for (double pi1 : {0.5, 0.7}) {
    const ModelParams m = ModelParams::with_pi1(1.0, 1.0, 1.0, pi1);
    auto g = [&](double rho, double eta) {
      return (m.pi1 * oracle::hinge_sq(rho + eta) + m.pi0 * oracle::hinge_sq(rho - eta)) / (1.0 - rho * rho);
    };
    const Eigen::Vector3d best = oracle::grid_min_2d(g, 0.0, 0.99, -2.0, 2.0, 200);
    EXPECT_NEAR(separability_threshold(m), 1.0 / best(2), 1e-6);
  }
}

TEST(SeparabilityThreshold, ApproachesTwoWithVanishingSignal) {
  EXPECT_NEAR(separability_threshold(ModelParams::balanced(1e-4, 1.0, 1.0)), 2.0, 1e-3);
}

TEST(DHard, ClosedFormsAndQuadrature) {
  const ModelParams m = ModelParams::balanced(1.0, 1.0, 2.0);
  EXPECT_NEAR(d_hard(1e12, 0.0, 0.0, m), std::sqrt(2.0 / 2.0) - 1.0, 1e-10);
  const double c = (0.5 * 1.0 - 1.0) / 1.0;
  const double want = std::sqrt(2.0 * (0.5 * oracle::hinge_sq(c) + 0.5 * oracle::hinge_sq(c))) - std::sqrt(0.75);
  EXPECT_NEAR(d_hard(1.0, 0.5, 0.0, m), want, 1e-9);
  EXPECT_THROW(d_hard(0.0, 0.5, 0.0, m), Error);
  EXPECT_THROW(d_hard(-1.0, 0.5, 0.0, m), Error);
}

TEST(DHard, DecreasingInQ0) {
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> r(0.0, 1.0), e(-2.0, 2.0);
  const ModelParams m = ModelParams::with_pi1(1.3, 0.8, 1.5, 0.4);
  for (int k = 0; k < 200; ++k) {
    const double rho = r(gen), eta = e(gen);
    EXPECT_GT(d_hard(1.0, rho, eta, m), d_hard(2.0, rho, eta, m));
  }
}

TEST(Beta, MatchesGridOracle) {
  const ModelParams m = ModelParams::balanced(1.0, 1.0, 2.0);
  auto f = [&](double rho, double eta) { return d_hard(1.0, rho, eta, m); };
  const Eigen::Vector3d best = oracle::grid_min_2d(f, 0.0, 1.0, -2.0, 2.0, 400);
  const BetaResult b = beta_full(1.0, m);
  EXPECT_NEAR(b.value, best(2), 1e-6);
  EXPECT_NEAR(b.rho, best(0), 1e-4);
}

TEST(Beta, DivergesNearZeroAndChangesSignBelowThreshold) {
  const ModelParams m = ModelParams::balanced(1.0, 1.0, 2.0);
  EXPECT_GT(beta(1e-3, m), 100.0);
  EXPECT_LT(beta(100.0, m), 0.0);
  EXPECT_THROW(beta(0.0, m), Error);
}

TEST(Beta, SectionIsMidpointConvex) {
  std::mt19937_64 gen(22);
  std::uniform_real_distribution<double> r(0.0, 1.0), e(-2.0, 2.0);
  const ModelParams m = ModelParams::with_pi1(1.2, 1.0, 2.0, 0.6);
  for (int k = 0; k < 100; ++k) {
    const double r1 = r(gen), e1 = e(gen), r2 = r(gen), e2 = e(gen);
    const double mid = d_hard(1.0, 0.5 * (r1 + r2), 0.5 * (e1 + e2), m);
    EXPECT_LE(mid, 0.5 * (d_hard(1.0, r1, e1, m) + d_hard(1.0, r2, e2, m)) + 1e-12);
  }
}

TEST(PredictHardMargin, FigureCoordinates) {
  const HardMarginPrediction a = predict_hard_margin(ModelParams::balanced(2.1, 1.0, 2.0));
  ASSERT_TRUE(a.separable);
  EXPECT_LT(rel(a.rho_star, 0.781418), 1e-2);
  EXPECT_LT(rel(a.q0_star, 0.907416), 1e-2);
  EXPECT_LT(rel(a.err_total, 0.050401), 1e-2);
  const HardMarginPrediction b = predict_hard_margin(ModelParams::balanced(1.0, 1.0, 1.0));
  ASSERT_TRUE(b.separable);
  EXPECT_LT(rel(b.rho_star, 0.529173), 1e-2);
  EXPECT_LT(rel(b.q0_star, 1.303535), 1e-2);
  EXPECT_LT(rel(b.err_total, 0.298343), 1e-2);
}

TEST(PredictHardMargin, NotSeparableAboveThreshold) {
  const HardMarginPrediction p = predict_hard_margin(ModelParams::balanced(1.0, 1.0, 4.0));
  EXPECT_FALSE(p.separable);
  EXPECT_TRUE(std::isnan(p.q0_star));
  EXPECT_TRUE(std::isnan(p.err_total));
  EXPECT_NEAR(p.delta_critical, 3.700023, 1e-2);
  ModelParams at = ModelParams::balanced(1.0, 1.0, 1.0);
  at.delta = separability_threshold(at);
  EXPECT_FALSE(predict_hard_margin(at).separable);
}

TEST(PredictHardMargin, OptimalityConditionsAtTheLimit) {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> mu(0.5, 2.5), d(0.5, 2.5), pi(0.3, 0.7);
  for (int k = 0; k < 10; ++k) {
    const ModelParams m = ModelParams::with_pi1(mu(gen), 1.0, d(gen), pi(gen));
    const HardMarginPrediction p = predict_hard_margin(m);
    if (!p.separable) continue;
    EXPECT_NEAR(beta(p.q0_star, m), 0.0, 1e-8);
    EXPECT_LE(std::abs(foc(p.eta_star, p.rho_star, 1.0 / (p.q0_star * m.sigma), m)), 1e-8);
    EXPECT_NEAR(p.err_total, m.pi0 * p.err0 + m.pi1 * p.err1, 1e-12);
    EXPECT_NEAR(p.bias_limit, p.eta_star * p.q0_star * m.sigma, 1e-12);
    EXPECT_TRUE(p.separable == (m.delta < p.delta_critical));
  }
}

TEST(PredictHardMargin, BalancedPriorsGiveZeroBias) {
  for (double mu : {0.5, 1.0, 2.0}) {
    const HardMarginPrediction p = predict_hard_margin(ModelParams::balanced(mu, 1.0, 1.0));
    ASSERT_TRUE(p.separable);
    EXPECT_LE(std::abs(p.eta_star), 1e-8);
  }
}

TEST(PredictHardMargin, NormGrowsTowardsThreshold) {
  std::mt19937_64 gen(24);
  std::uniform_real_distribution<double> mu(0.3, 2.0), pi(0.35, 0.65);
  for (int k = 0; k < 20; ++k) {
    ModelParams m = ModelParams::with_pi1(mu(gen), 1.0, 1.0, pi(gen));
    const double crit = separability_threshold(m);
    m.delta = 0.9 * crit;
    const double far = predict_hard_margin(m).q0_star;
    m.delta = 0.99 * crit;
    const double near = predict_hard_margin(m).q0_star;
    EXPECT_GT(near, far);
  }
}

TEST(PredictHardMargin, LargeNormLimitTracksThresholdSide) {
  for (double delta : {2.0, 5.0}) {
    const ModelParams m = ModelParams::balanced(1.0, 1.0, delta);
    auto lim = [&](double rho) {
      const double e = eta_star_margin(rho, 0.0, m);
      return std::sqrt(m.delta * (m.pi1 * gauss::hinge_sq_moment(rho * m.snr() + e) +
                                  m.pi0 * gauss::hinge_sq_moment(rho * m.snr() - e))) -
             std::sqrt(1.0 - rho * rho);
    };
    double best = lim(0.0);
    for (int i = 1; i < 2000; ++i) best = std::min(best, lim(0.999 * i / 1999.0));
    const double crit = separability_threshold(m);
    EXPECT_EQ(best < 0.0, delta < crit);
  }
}

TEST(PredictHardMargin, LargerClassHasLowerError) {
  const HardMarginPrediction p = predict_hard_margin(ModelParams::with_pi1(1.0, 1.0, 1.0, 0.7));
  ASSERT_TRUE(p.separable);
  EXPECT_GT(p.eta_star, 0.0);
  EXPECT_GT(p.bias_limit, 0.0);
  EXPECT_LT(p.err1, p.err0);
  EXPECT_NEAR(p.err1, gauss::q_function(p.rho_star * 1.0 + p.eta_star), 1e-15);
}
