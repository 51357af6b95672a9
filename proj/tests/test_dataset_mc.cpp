#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include "svmasym/dataset.hpp"
#include "svmasym/monte_carlo.hpp"

using namespace svmasym;

TEST(Dataset, ExactCountsAndLabels) {
  const Dataset d = generate_dataset(ModelParams::balanced(1.0, 1.0, 2.0), 200, 1);
  EXPECT_EQ(d.n(), 400);
  EXPECT_EQ(d.p(), 200);
  EXPECT_EQ((d.labels.array() > 0.0).count(), 200);
  const Dataset u = generate_dataset(ModelParams::with_pi1(1.0, 1.0, 1.5, 0.3), 100, 1);
  EXPECT_EQ(u.n(), 150);
  EXPECT_EQ((u.labels.array() > 0.0).count(), 45);
  EXPECT_EQ(u.mu_direction, Eigen::VectorXd::Unit(100, 0));
}

TEST(Dataset, ClassMeansConcentrate) {
  const ModelParams m = ModelParams::balanced(1.3, 0.8, 2.0);
  const Dataset d = generate_dataset(m, 300, 2);
  const long n1 = (d.labels.array() > 0.0).count();
  const Eigen::VectorXd mean1 = d.features.topRows(n1).colwise().mean();
  const Eigen::VectorXd mean0 = d.features.bottomRows(d.n() - n1).colwise().mean();
  EXPECT_NEAR(mean1(0), m.mu, 4.0 * m.sigma / std::sqrt(double(n1)));
  EXPECT_NEAR(mean0(0), -m.mu, 4.0 * m.sigma / std::sqrt(double(d.n() - n1)));
  EXPECT_NEAR(mean1.tail(d.p() - 1).mean(), 0.0, 4.0 * m.sigma / std::sqrt(double(n1 * (d.p() - 1))));
  const Eigen::MatrixXd noise = d.features.rightCols(d.p() - 1);
  EXPECT_NEAR(noise.squaredNorm() / double(noise.size()), m.sigma * m.sigma, 0.02);
}

TEST(Dataset, DeterministicPerSeed) {
  const ModelParams m = ModelParams::balanced(1.0, 1.0, 1.0);
  const Dataset a = generate_dataset(m, 50, 99), b = generate_dataset(m, 50, 99), c = generate_dataset(m, 50, 100);
  EXPECT_EQ(a.features, b.features);
  EXPECT_EQ(a.labels, b.labels);
  EXPECT_NE(a.features, c.features);
}

TEST(Dataset, Errors) {
  try {
    generate_dataset(ModelParams::with_pi1(1.0, 1.0, 1.0, 0.01), 10, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateSplit);
  }
  EXPECT_THROW(generate_dataset(ModelParams{}, 1, 1), Error);
  EXPECT_THROW(generate_dataset(ModelParams{1.0, 0.0, 1.0, 0.5, 0.5}, 10, 1), Error);
}

TEST(Dataset, ExportRoundTrip) {
  const Dataset d = generate_dataset(ModelParams::with_pi1(0.7, 1.2, 1.5, 0.4), 20, 123456789012345ULL);
  const auto path = std::filesystem::temp_directory_path() / "svmasym_roundtrip.bin";
  export_dataset(d, path.string());
  EXPECT_EQ(std::filesystem::file_size(path), 24u + 8u * d.n() * d.p() + d.n());
  const Dataset r = import_dataset(path.string());
  std::filesystem::remove(path);
  EXPECT_EQ(r.features, d.features);
  EXPECT_EQ(r.labels, d.labels);
  EXPECT_EQ(r.seed, d.seed);
  try {
    import_dataset((std::filesystem::temp_directory_path() / "svmasym_missing.bin").string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Io);
  }
}

TEST(Rng, SplitSeedsAreDistinctAndStable) {
  EXPECT_EQ(rng::split_seed(7, 3), rng::split_seed(7, 3));
  EXPECT_NE(rng::split_seed(7, 3), rng::split_seed(7, 4));
  EXPECT_NE(rng::split_seed(7, 3), rng::split_seed(8, 3));
  rng::Xoshiro256pp g(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = g.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

namespace {

void expect_identical(const ExperimentSummary& a, const ExperimentSummary& b) {
  EXPECT_EQ(a.optimal_count, b.optimal_count);
  EXPECT_EQ(a.infeasible_count, b.infeasible_count);
  EXPECT_EQ(a.cos_mean, b.cos_mean);
  EXPECT_EQ(a.cos_std, b.cos_std);
  EXPECT_EQ(a.norm_mean, b.norm_mean);
  EXPECT_EQ(a.norm_std, b.norm_std);
  EXPECT_EQ(a.bias_mean, b.bias_mean);
  EXPECT_EQ(a.bias_std, b.bias_std);
  EXPECT_EQ(a.err_mean, b.err_mean);
  EXPECT_EQ(a.err_std, b.err_std);
}

}  // namespace

TEST(MonteCarlo, IndependentOfWorkerCount) {
  const ModelParams m = ModelParams::balanced(2.1, 1.0, 2.0);
  expect_identical(run_monte_carlo(m, std::nullopt, 30, 2, 77, 1), run_monte_carlo(m, std::nullopt, 30, 2, 77, 8));
  expect_identical(run_monte_carlo(m, 2.0, 30, 9, 78, 1), run_monte_carlo(m, 2.0, 30, 9, 78, 8));
}

TEST(MonteCarlo, SummaryInvariants) {
  const ExperimentSummary s = run_monte_carlo(ModelParams::balanced(1.0, 1.0, 1.0), 1.0, 40, 6, 5);
  EXPECT_EQ(s.reps, 6);
  EXPECT_EQ(s.optimal_count, 6);
  EXPECT_GE(s.cos_std, 0.0);
  EXPECT_GE(s.norm_std, 0.0);
  EXPECT_GE(s.err_std, 0.0);
  EXPECT_GT(s.cos_mean, 0.0);
  EXPECT_LE(s.cos_mean, 1.0);
}

TEST(MonteCarlo, Errors) {
  EXPECT_THROW(run_monte_carlo(ModelParams{}, std::nullopt, 20, 1, 1), Error);
  try {
    run_monte_carlo(ModelParams::balanced(0.0, 1.0, 4.0), std::nullopt, 20, 2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AllInfeasible);
  }
}

TEST(MonteCarlo, EnvironmentOverridesWorkerCount) {
  ::setenv(kThreadsEnvVar, "3", 1);
  EXPECT_EQ(resolve_worker_count(8), 3);
  ::setenv(kThreadsEnvVar, "junk", 1);
  EXPECT_EQ(resolve_worker_count(8), 8);
  ::unsetenv(kThreadsEnvVar);
  EXPECT_EQ(resolve_worker_count(5), 5);
}
