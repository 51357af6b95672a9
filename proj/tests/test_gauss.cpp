#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "svmasym/gauss_kernels.hpp"

using namespace svmasym::gauss;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> random_points(int count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  std::vector<double> v(static_cast<std::size_t>(count));
  for (double& x : v) x = u(gen);
  return v;
}

}  // namespace

TEST(GaussPdf, KnownValues) {
  EXPECT_NEAR(pdf(0.0), 0.3989422804014327, 1e-16);
  EXPECT_NEAR(pdf(1.0), 0.24197072451914337, 1e-16);
  for (double x : random_points(100, 1)) EXPECT_EQ(pdf(x), pdf(-x));
}

TEST(QFunction, KnownValuesAndLimits) {
  EXPECT_DOUBLE_EQ(q_function(0.0), 0.5);
  EXPECT_EQ(q_function(kInf), 0.0);
  EXPECT_EQ(q_function(-kInf), 1.0);
  EXPECT_NEAR(q_function(1.0), oracle::q(1.0), 1e-13);
  EXPECT_NEAR(q_function(1.0), 0.15865525393145707, 1e-15);
}

TEST(QFunction, Reflection) {
  for (double x : random_points(1000, 2)) EXPECT_NEAR(q_function(x) + q_function(-x), 1.0, 1e-14);
}

TEST(PartialMoment, KnownValues) {
  EXPECT_NEAR(partial_moment(1, 0.0), 0.3989422804014327, 1e-16);
  EXPECT_EQ(partial_moment(2, -kInf), 1.0);
  EXPECT_NEAR(partial_moment(2, 1.0), oracle::moment(2, 1.0), 1e-13);
  EXPECT_NEAR(partial_moment(2, 1.0), 0.40062597845060040, 1e-15);
  EXPECT_THROW(partial_moment(3, 0.0), svmasym::Error);
  EXPECT_THROW(partial_moment(-1, 0.0), svmasym::Error);
}

TEST(HingeMoments, KnownValues) {
  EXPECT_NEAR(hinge_moment(0.0), 0.3989422804014327, 1e-15);
  EXPECT_NEAR(hinge_moment(5.0), oracle::hinge(5.0), 1e-15);
  EXPECT_NEAR(hinge_moment(5.0), 5.3461655338328150e-8, 1e-20);
  EXPECT_NEAR(hinge_moment(-10.0), 10.0, 1e-8);
  EXPECT_NEAR(hinge_sq_moment(0.0), 0.5, 1e-15);
  EXPECT_NEAR(hinge_sq_moment(1.0), oracle::hinge_sq(1.0), 1e-13);
  EXPECT_NEAR(hinge_sq_moment(1.0), 0.075339783343770753, 1e-15);
  EXPECT_NEAR(hinge_sq_moment(-20.0), 401.0, 1e-8);
}

TEST(IntervalShiftedSq, KnownValuesAndErrors) {
  EXPECT_EQ(interval_shifted_sq(0.7, 0.7), 0.0);
  EXPECT_NEAR(interval_shifted_sq(0.0, kInf), 0.5, 1e-15);
  EXPECT_NEAR(interval_shifted_sq(0.0, 1.0), oracle::shifted_sq(0.0, 1.0), 1e-14);
  EXPECT_NEAR(interval_shifted_sq(0.0, 1.0), 0.099374021549399599, 1e-15);
  EXPECT_THROW(interval_shifted_sq(1.0, 0.0), svmasym::Error);
}

TEST(GaussKernels, QuadratureAgreementOnRandomPoints) {
  const auto pts = random_points(10000, 3);
  const auto widths = random_points(10000, 4);
  double worst = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double a = pts[i];
    const double b = a + std::abs(widths[i]);
    const double errs[] = {
        std::abs(q_function(a) - oracle::q(a)),
        std::abs(partial_moment(0, a) - oracle::moment(0, a)),
        std::abs(partial_moment(1, a) - oracle::moment(1, a)),
        std::abs(partial_moment(2, a) - oracle::moment(2, a)),
        std::abs(hinge_moment(a) - oracle::hinge(a)),
        std::abs(hinge_sq_moment(a) - oracle::hinge_sq(a)),
        std::abs(interval_shifted_sq(a, b) - oracle::shifted_sq(a, b)),
        std::abs(pdf(a) - oracle::density(a)),
    };
    worst = std::max(worst, *std::max_element(std::begin(errs), std::end(errs)));
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(GaussKernels, StrictlyDecreasingOnSortedGrid) {
  auto pts = random_points(5000, 5);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (std::size_t i = 1; i < pts.size(); ++i) {
    EXPECT_GT(hinge_moment(pts[i - 1]), hinge_moment(pts[i]));
    EXPECT_GT(hinge_sq_moment(pts[i - 1]), hinge_sq_moment(pts[i]));
  }
}

TEST(GaussKernels, SquaredHingeFromMoments) {
  for (double a : random_points(2000, 6)) {
    const double via = partial_moment(2, a) - 2.0 * a * partial_moment(1, a) + a * a * partial_moment(0, a);
    EXPECT_NEAR(hinge_sq_moment(a), via, 1e-12);
  }
}

TEST(GaussKernels, FarTailsShortCircuit) {
  EXPECT_EQ(hinge_moment(41.0), 0.0);
  EXPECT_EQ(hinge_moment(-41.0), 41.0);
  EXPECT_EQ(hinge_sq_moment(-41.0), 1.0 + 41.0 * 41.0);
  EXPECT_EQ(q_function(41.0), 0.0);
}
