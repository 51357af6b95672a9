#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "svmasym/errors.hpp"
#include "svmasym/figures.hpp"
#include "svmasym/hard_margin_theory.hpp"
#include "svmasym/model.hpp"
#include "svmasym/monte_carlo.hpp"
#include "svmasym/rng.hpp"
#include "svmasym/soft_margin_theory.hpp"
#include "svmasym/version.hpp"

namespace svmasym::cli {

enum class Command { PhaseBoundary, TheoryHard, TheorySoft, Simulate, ReproduceFigure };

inline const char* to_string(Command c) {
  switch (c) {
    case Command::PhaseBoundary: return "phase-boundary";
    case Command::TheoryHard: return "theory-hard";
    case Command::TheorySoft: return "theory-soft";
    case Command::Simulate: return "simulate";
    case Command::ReproduceFigure: return "reproduce-figure";
  }
  return "unknown";
}

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitIo = 4;

struct Profile {
  const char* name;
  int p;
  int reps;
  double band;  // tolerance in standard errors of the simulated mean
};

inline constexpr Profile kFullProfile{"full", 200, 100, 3.0};
inline constexpr Profile kCiProfile{"ci", 60, 20, 4.0};

inline const Profile& profile_by_name(const std::string& name) {
  if (name == kFullProfile.name) return kFullProfile;
  if (name == kCiProfile.name) return kCiProfile;
  throw Error(ErrorCode::InvalidArgument, "unknown profile '" + name + "' (expected full or ci)");
}

inline constexpr std::uint64_t kDefaultSeed = 2024;

struct RunConfig {
  Command command = Command::TheoryHard;
  std::string sweep_var = "mu";  // mu, delta or tau
  std::vector<double> grid;      // empty: the single fixed value of sweep_var
  ModelParams params;
  double tau = std::numeric_limits<double>::quiet_NaN();
  bool hard = false;  // simulate: hard margin instead of soft
  int p = kFullProfile.p;
  int reps = kFullProfile.reps;
  std::uint64_t seed = kDefaultSeed;
  int figure = 0;
  std::string profile = kFullProfile.name;
  double band = kFullProfile.band;
  std::string out_path = "-";
  std::string plot_path;
  int threads = 0;  // 0: environment or hardware
};

inline bool uses_randomness(const RunConfig& c) {
  return c.command == Command::Simulate || (c.command == Command::ReproduceFigure && c.figure >= 2);
}

inline bool is_soft(const RunConfig& c) {
  return c.command == Command::TheorySoft || (c.command == Command::Simulate && !c.hard);
}

inline void validate(const RunConfig& c) {
  auto fail = [](const std::string& m) { throw Error(ErrorCode::InvalidArgument, m); };
  if (c.command == Command::ReproduceFigure) {
    if (c.figure < 1 || c.figure > 6) fail("reproduce-figure expects N in 1..6");
  } else {
    if (c.sweep_var != "mu" && c.sweep_var != "delta" && c.sweep_var != "tau")
      fail("sweep variable must be mu, delta or tau");
    if (c.command == Command::PhaseBoundary && c.sweep_var != "mu") fail("phase-boundary sweeps mu only");
    if (c.sweep_var == "tau" && !is_soft(c)) fail("a tau sweep needs a soft-margin command");
    for (std::size_t i = 1; i < c.grid.size(); ++i)
      if (!(c.grid[i] > c.grid[i - 1])) fail("grid must be strictly increasing");
    for (double g : c.grid)
      if (!std::isfinite(g) || !(g > 0.0 || (c.sweep_var == "mu" && g == 0.0))) fail("grid values must be positive");
    c.params.validate();
    if (is_soft(c) && (c.sweep_var != "tau" || c.grid.empty()) && !(c.tau > 0.0)) fail("soft margin needs --tau > 0");
  }
  if (uses_randomness(c)) {
    if (c.p < 2) fail("p must be >= 2");
    if (c.reps < 2) fail("reps must be >= 2");
  }
  if (!(c.band > 0.0)) fail("band must be > 0");
}

namespace detail {

inline std::string num(double v) {
  if (!std::isfinite(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

/// Shortest decimal form that parses back to the same double.
inline std::string exact(double v) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

inline double nan() { return std::numeric_limits<double>::quiet_NaN(); }

struct Row {
  std::string sweep_var;
  double value = 0.0;
  double rho_th = nan(), q0_th = nan(), eta_th = nan(), err_th = nan();
  double rho_mean = nan(), rho_std = nan(), norm_mean = nan(), norm_std = nan(), err_mean = nan(), err_std = nan();
  std::optional<int> infeasible_count;
  int optimal_count = 0;
};

inline const char* kSchema =
    "sweep_var,value,rho_th,q0_th,eta_th,err_th,rho_mean,rho_std,norm_mean,norm_std,err_mean,err_std,"
    "infeasible_count";

inline std::string row_csv(const Row& r) {
  std::ostringstream o;
  o << r.sweep_var << ',' << num(r.value) << ',' << num(r.rho_th) << ',' << num(r.q0_th) << ',' << num(r.eta_th)
    << ',' << num(r.err_th) << ',' << num(r.rho_mean) << ',' << num(r.rho_std) << ',' << num(r.norm_mean) << ','
    << num(r.norm_std) << ',' << num(r.err_mean) << ',' << num(r.err_std) << ','
    << (r.infeasible_count ? std::to_string(*r.infeasible_count) : std::string());
  return o.str();
}

/// Equivalent command line for the resolved configuration.
inline std::string rerun_args(const RunConfig& c) {
  std::ostringstream o;
  o << to_string(c.command);
  if (c.command == Command::ReproduceFigure) {
    o << ' ' << c.figure << " --profile " << c.profile;
    if (c.figure >= 2) o << " --p " << c.p << " --reps " << c.reps << " --seed " << c.seed;
    return o.str();
  }
  if (c.command == Command::Simulate && c.hard) o << " --hard";
  o << " --sweep " << c.sweep_var;
  if (!c.grid.empty()) {
    o << " --grid ";
    for (std::size_t i = 0; i < c.grid.size(); ++i) o << (i ? "," : "") << exact(c.grid[i]);
  }
  o << " --mu " << exact(c.params.mu) << " --sigma " << exact(c.params.sigma) << " --delta " << exact(c.params.delta)
    << " --pi1 " << exact(c.params.pi1);
  if (is_soft(c) && std::isfinite(c.tau)) o << " --tau " << exact(c.tau);
  if (uses_randomness(c)) o << " --p " << c.p << " --reps " << c.reps << " --seed " << c.seed;
  return o.str();
}

inline std::string header(const RunConfig& c, const std::string& schema) {
  std::ostringstream o;
  o << "# svmasym " << kVersion << '\n';
  o << "# command: " << to_string(c.command) << '\n';
  o << "# args: " << rerun_args(c) << '\n';
  if (uses_randomness(c)) o << "# seed: " << c.seed << '\n';
  else o << "# seed: unused\n";
  o << schema << '\n';
  return o.str();
}

inline void apply(const std::string& var, double x, ModelParams& m, double& tau) {
  if (var == "mu") m.mu = x;
  else if (var == "delta") m.delta = x;
  else if (var == "tau") tau = x;
}

inline void fill_hard_theory(Row& r, const ModelParams& m) {
  const hard::HardMarginPrediction h = hard::predict_hard_margin(m);
  if (!h.separable) return;
  r.rho_th = h.rho_star;
  r.q0_th = h.q0_star;
  r.eta_th = h.eta_star;
  r.err_th = h.err_total;
}

inline void fill_soft_theory(Row& r, const ModelParams& m, double tau) {
  const soft::SoftMarginPrediction s = soft::solve_soft_margin_saddle(tau, m);
  r.rho_th = s.rho_star;
  r.q0_th = s.q0_star;
  r.eta_th = s.eta_star;
  r.err_th = s.err_total;
}

inline void fill_simulation(Row& r, const ModelParams& m, std::optional<double> tau, const RunConfig& c,
                            std::uint64_t master) {
  try {
    const ExperimentSummary s = run_monte_carlo(m, tau, c.p, c.reps, master, c.threads);
    r.rho_mean = s.cos_mean;
    r.rho_std = s.cos_std;
    r.norm_mean = s.norm_mean;
    r.norm_std = s.norm_std;
    r.err_mean = s.err_mean;
    r.err_std = s.err_std;
    r.infeasible_count = s.infeasible_count;
    r.optimal_count = s.optimal_count;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::AllInfeasible) throw;
    r.infeasible_count = c.reps;
  }
}

/// |a - b| within 1% of b, plus half a unit in the last published digit.
inline bool close_to_paper(double a, double b) {
  return std::isfinite(a) && std::abs(a - b) <= 1e-2 * std::abs(b) + 5e-7;
}

inline bool within_band(double mean, double sd, int count, double target, double band) {
  if (!std::isfinite(mean) || !std::isfinite(target) || count < 2) return false;
  const double se = sd / std::sqrt(static_cast<double>(count));
  return std::abs(mean - target) <= band * se;
}

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (path_ != "-") {
      file_.open(path_, std::ios::binary);
      if (!file_) throw Error(ErrorCode::Io, "cannot open " + path_ + " for writing");
    }
  }
  std::ostream& stream() { return path_ == "-" ? std::cout : file_; }
  void close() {
    stream().flush();
    if (!stream()) throw Error(ErrorCode::Io, "write failed for " + path_);
    if (file_.is_open()) file_.close();
  }

 private:
  std::string path_;
  std::ofstream file_;
};

inline void write_plot_script(const RunConfig& c, const std::string& xlabel, bool phase) {
  if (c.plot_path.empty()) return;
  std::ofstream o(c.plot_path, std::ios::binary);
  if (!o) throw Error(ErrorCode::Io, "cannot open " + c.plot_path + " for writing");
  const std::string data = c.out_path == "-" ? "data.csv" : c.out_path;
  o << "# gnuplot script generated by svmasym " << kVersion << "\n";
  o << "set datafile separator ','\n";
  o << "set terminal pngcairo size 1500,450\n";
  o << "set output '" << data << ".png'\n";
  o << "set xlabel '" << xlabel << "'\n";
  o << "set key left top\n";
  if (phase) {
    o << "set logscale y\nset ylabel 'delta critical'\n";
    o << "plot '" << data << "' every ::1 using 1:2 with lines title 'theory'";
    if (c.command == Command::ReproduceFigure) o << ", '' every ::1 using 1:3 with points title 'published'";
    o << "\n";
  } else {
    o << "set multiplot layout 1,3\n";
    o << "set ylabel 'cos angle(w, mu)'\n";
    o << "plot '" << data << "' every ::1 using 2:3 with lines title 'theory', "
      << "'' every ::1 using 2:7:8 with yerrorbars title 'simulation'\n";
    o << "set ylabel '||w||'\n";
    o << "plot '" << data << "' every ::1 using 2:4 with lines title 'theory', "
      << "'' every ::1 using 2:9:10 with yerrorbars title 'simulation'\n";
    o << "set ylabel 'total error'\n";
    o << "plot '" << data << "' every ::1 using 2:6 with lines title 'theory', "
      << "'' every ::1 using 2:11:12 with yerrorbars title 'simulation'\n";
    o << "unset multiplot\n";
  }
  if (!o) throw Error(ErrorCode::Io, "write failed for " + c.plot_path);
}

inline void run_phase_boundary(const RunConfig& c, Output& out) {
  const bool figure = c.command == Command::ReproduceFigure;
  std::vector<double> grid = c.grid;
  if (figure) {
    grid.clear();
    for (const auto& pt : figures::phase_boundary()) grid.push_back(pt.x);
  } else if (grid.empty()) {
    grid.push_back(c.params.mu / c.params.sigma);
  }
  std::ostream& os = out.stream();
  os << header(c, figure ? "mu_over_sigma,delta_critical,paper_delta_critical,pass" : "mu_over_sigma,delta_critical");
  ModelParams m = figure ? ModelParams{} : c.params;
  for (double x : grid) {
    m.mu = x * m.sigma;
    const double d = hard::separability_threshold(m);
    os << num(x) << ',' << num(d);
    if (figure) {
      const double paper = *figures::lookup(figures::phase_boundary(), x);
      os << ',' << num(paper) << ',' << (close_to_paper(d, paper) ? "pass" : "fail");
    }
    os << '\n';
  }
  write_plot_script(c, "mu / sigma", true);
}

inline void run_sweep(const RunConfig& c, Output& out) {
  std::ostream& os = out.stream();
  os << header(c, kSchema);
  std::vector<double> grid = c.grid;
  if (grid.empty()) grid.push_back(c.sweep_var == "mu" ? c.params.mu : c.sweep_var == "delta" ? c.params.delta : c.tau);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    ModelParams m = c.params;
    double tau = c.tau;
    apply(c.sweep_var, grid[k], m, tau);
    Row r;
    r.sweep_var = c.sweep_var;
    r.value = grid[k];
    const bool soft = is_soft(c);
    if (soft) fill_soft_theory(r, m, tau);
    else fill_hard_theory(r, m);
    if (c.command == Command::Simulate)
      fill_simulation(r, m, soft ? std::optional<double>(tau) : std::nullopt, c, rng::split_seed(c.seed, k));
    os << row_csv(r) << '\n';
  }
  write_plot_script(c, c.sweep_var, false);
}

inline void run_figure(const RunConfig& c, Output& out, std::ostream& diag) {
  const figures::FigureSpec& f = figures::figure(c.figure);
  std::ostream& os = out.stream();
  os << "# preset: figure " << f.number << (f.hard ? " hard margin" : " soft margin") << ", sweep "
     << figures::to_string(f.sweep) << ", mu " << num(f.base.mu) << ", delta " << num(f.base.delta) << ", sigma "
     << num(f.base.sigma) << ", pi1 " << num(f.base.pi1);
  if (!f.hard && f.sweep != figures::SweepVar::Tau) os << ", tau " << num(f.tau);
  os << ", band " << num(c.band) << " standard errors\n";
  os << header(c, std::string(kSchema) +
                      ",paper_rho,paper_q0,paper_err,paper_cos_mean,paper_cos_std,paper_norm_mean,paper_norm_std,"
                      "paper_err_mean,paper_err_std,pass");
  const std::vector<double> sims = f.sim_grid();
  int passed = 0, total = 0;
  for (double x : f.theory_grid()) {
    const ModelParams m = f.params_at(x);
    const double tau = f.tau_at(x);
    Row r;
    r.sweep_var = figures::to_string(f.sweep);
    r.value = x;
    if (f.hard) fill_hard_theory(r, m);
    else fill_soft_theory(r, m, tau);

    bool ok = true;
    const auto p_rho = figures::lookup(f.rho, x);
    const auto p_q0 = figures::lookup(f.q0, x);
    const auto p_err = figures::lookup(f.err, x);
    if (p_rho) ok = ok && close_to_paper(r.rho_th, *p_rho);
    if (p_q0) ok = ok && close_to_paper(r.q0_th, *p_q0);
    if (p_err) ok = ok && close_to_paper(r.err_th, *p_err);

    const auto s_cos = figures::lookup(f.sim_cos, x);
    const auto s_norm = figures::lookup(f.sim_norm, x);
    const auto s_err = figures::lookup(f.sim_err, x);
    std::size_t sim_index = sims.size();
    for (std::size_t i = 0; i < sims.size(); ++i)
      if (std::abs(sims[i] - x) <= 1e-9 * std::max(1.0, std::abs(x))) sim_index = i;
    if (sim_index < sims.size()) {
      fill_simulation(r, m, f.hard ? std::nullopt : std::optional<double>(tau), c, rng::split_seed(c.seed, sim_index));
      if (s_cos) ok = ok && within_band(r.rho_mean, r.rho_std, r.optimal_count, r.rho_th, c.band);
      if (s_norm) ok = ok && within_band(r.norm_mean, r.norm_std, r.optimal_count, r.q0_th, c.band);
      if (s_err) ok = ok && within_band(r.err_mean, r.err_std, r.optimal_count, r.err_th, c.band);
    }
    ++total;
    passed += ok ? 1 : 0;
    auto opt = [](const std::optional<double>& v) { return v ? num(*v) : std::string(); };
    auto sim_mean = [](const std::optional<figures::SimPoint>& v) { return v ? num(v->mean) : std::string(); };
    auto sim_sd = [](const std::optional<figures::SimPoint>& v) { return v ? num(v->sd) : std::string(); };
    os << row_csv(r) << ',' << opt(p_rho) << ',' << opt(p_q0) << ',' << opt(p_err) << ',' << sim_mean(s_cos) << ','
       << sim_sd(s_cos) << ',' << sim_mean(s_norm) << ',' << sim_sd(s_norm) << ',' << sim_mean(s_err) << ','
       << sim_sd(s_err) << ',' << (ok ? "pass" : "fail") << '\n';
  }
  diag << "figure " << f.number << ": " << passed << "/" << total << " rows pass\n";
  write_plot_script(c, figures::to_string(f.sweep), false);
}

}  // namespace detail

/// Executes one configured run. Returns the process exit status; diagnostics go to `diag`.
inline int run(const RunConfig& config, std::ostream& diag = std::cerr) {
  try {
    validate(config);
    detail::Output out(config.out_path);
    if (config.command == Command::PhaseBoundary ||
        (config.command == Command::ReproduceFigure && config.figure == 1)) {
      detail::run_phase_boundary(config, out);
    } else if (config.command == Command::ReproduceFigure) {
      detail::run_figure(config, out, diag);
    } else {
      detail::run_sweep(config, out);
    }
    out.close();
    return kExitOk;
  } catch (const Error& e) {
    diag << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::InvalidArgument:
      case ErrorCode::DegenerateSplit: return kExitConfig;
      case ErrorCode::Io: return kExitIo;
      default: return kExitSolver;
    }
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return kExitSolver;
  }
}

}  // namespace svmasym::cli
