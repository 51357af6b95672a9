#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "svmasym/dataset.hpp"
#include "svmasym/errors.hpp"
#include "svmasym/model.hpp"
#include "svmasym/rng.hpp"
#include "svmasym/svm_solver.hpp"

namespace svmasym {

inline constexpr const char* kThreadsEnvVar = "SVMASYM_THREADS";

struct ExperimentSummary {
  int reps = 0;
  int p = 0;
  int optimal_count = 0;
  int infeasible_count = 0;
  int failed_count = 0;  // soft-margin solves that hit the iteration budget
  double cos_mean = 0.0, cos_std = 0.0;
  double norm_mean = 0.0, norm_std = 0.0;
  double bias_mean = 0.0, bias_std = 0.0;
  double err_mean = 0.0, err_std = 0.0;
};

struct ReplicateOutcome {
  SolveStatus status = SolveStatus::MaxIter;
  double cos = 0.0, norm = 0.0, bias = 0.0, err = 0.0;
};

/// Worker count: the environment variable wins, then `requested`, then the hardware.
inline int resolve_worker_count(int requested = 0) {
  if (const char* env = std::getenv(kThreadsEnvVar); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, 1024));
  }
  if (requested > 0) return requested;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

inline ReplicateOutcome run_replicate(const ModelParams& params, std::optional<double> tau, int p,
                                      std::uint64_t seed) {
  const Dataset data = generate_dataset(params, p, seed);
  const SvmFit fit = tau ? solve_soft_margin_svm(data, *tau) : solve_hard_margin_svm(data);
  ReplicateOutcome out;
  out.status = fit.status;
  if (fit.status != SolveStatus::Optimal) return out;
  out.norm = fit.w.norm();
  out.cos = out.norm > 0.0 ? fit.w.dot(data.mu_direction) / out.norm : 0.0;
  out.bias = fit.b;
  out.err = exact_error(fit, data).total;
  return out;
}

namespace detail {

inline void mean_std(const std::vector<double>& v, double& mean, double& sd) {
  mean = 0.0;
  sd = 0.0;
  if (v.empty()) return;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  if (v.size() < 2) return;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  sd = std::sqrt(ss / static_cast<double>(v.size() - 1));
}

}  // namespace detail

/// Replicate r uses seed split_seed(master_seed, r). Outcomes are reduced in replicate
/// order, so the summary does not depend on the number of workers.
inline ExperimentSummary run_monte_carlo(const ModelParams& params, std::optional<double> tau, int p, int reps,
                                         std::uint64_t master_seed, int threads = 0) {
  params.validate();
  if (reps < 2) throw Error(ErrorCode::InvalidArgument, "run_monte_carlo: reps must be >= 2");
  if (tau && !(*tau > 0.0)) throw Error(ErrorCode::InvalidArgument, "run_monte_carlo: tau must be > 0");
  // Surface configuration errors before spawning workers.
  (void)generate_dataset(params, p, rng::split_seed(master_seed, 0)).n();

  std::vector<ReplicateOutcome> outcomes(static_cast<std::size_t>(reps));
  const int workers = std::min(resolve_worker_count(threads), reps);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (int r = next++; r < reps; r = next++) {
      try {
        outcomes[static_cast<std::size_t>(r)] = run_replicate(params, tau, p, rng::split_seed(master_seed, r));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  ExperimentSummary s;
  s.reps = reps;
  s.p = p;
  std::vector<double> cos, norm, bias, err;
  for (const auto& o : outcomes) {
    if (o.status == SolveStatus::Infeasible) {
      ++s.infeasible_count;
    } else if (o.status == SolveStatus::MaxIter) {
      ++s.failed_count;
    } else {
      ++s.optimal_count;
      cos.push_back(o.cos);
      norm.push_back(o.norm);
      bias.push_back(o.bias);
      err.push_back(o.err);
    }
  }
  if (s.optimal_count == 0) throw Error(ErrorCode::AllInfeasible, "run_monte_carlo: no replicate was solved to optimality");
  detail::mean_std(cos, s.cos_mean, s.cos_std);
  detail::mean_std(norm, s.norm_mean, s.norm_std);
  detail::mean_std(bias, s.bias_mean, s.bias_std);
  detail::mean_std(err, s.err_mean, s.err_std);
  return s;
}

}  // namespace svmasym
