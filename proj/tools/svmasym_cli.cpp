#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "svmasym/cli.hpp"

namespace {

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument(item);
    out.push_back(v);
  }
  return out;
}

struct Flags {
  std::string sweep = "mu";
  std::string grid;
  double mu = 1.0, sigma = 1.0, delta = 1.0, pi1 = 0.5;
  double tau = std::numeric_limits<double>::quiet_NaN();
  bool hard = false;
  int p = 0, reps = 0;
  std::uint64_t seed = svmasym::cli::kDefaultSeed;
  std::string out = "-";
  std::string plot;
  std::string profile = "full";
  int threads = 0;
  int figure = 0;
};

void add_model_flags(CLI::App* sub, Flags& f, bool with_tau, bool with_sweep) {
  if (with_sweep) {
    sub->add_option("--sweep", f.sweep, "Swept variable: mu, delta or tau")->capture_default_str();
    sub->add_option("--grid", f.grid, "Comma-separated, strictly increasing sweep values");
  } else {
    sub->add_option("--grid", f.grid, "Comma-separated, strictly increasing mu/sigma values");
  }
  sub->add_option("--mu", f.mu, "Class-mean norm")->capture_default_str();
  sub->add_option("--sigma", f.sigma, "Noise standard deviation")->capture_default_str();
  sub->add_option("--delta", f.delta, "Sample-to-dimension ratio n/p")->capture_default_str();
  sub->add_option("--pi1", f.pi1, "Prior of class +1")->capture_default_str();
  if (with_tau) sub->add_option("--tau", f.tau, "Soft-margin penalty (per-sample weight tau/p)");
}

void add_output_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--out,-o", f.out, "CSV output path, '-' for stdout")->capture_default_str();
  sub->add_option("--plot", f.plot, "Also write a gnuplot script to this path");
}

void add_sim_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--p", f.p, "Dimension of simulated data");
  sub->add_option("--reps", f.reps, "Number of replicates per grid point");
  sub->add_option("--seed", f.seed, "Master seed")->capture_default_str();
  sub->add_option("--threads", f.threads, std::string("Worker threads (overridden by ") + svmasym::kThreadsEnvVar + ")");
}

}  // namespace

int main(int argc, char** argv) {
  using svmasym::cli::Command;
  CLI::App app{"Asymptotic performance of hard- and soft-margin linear SVM on Gaussian mixtures"};
  app.set_version_flag("--version", svmasym::kVersion);
  app.require_subcommand(1);
  Flags f;

  auto* pb = app.add_subcommand("phase-boundary", "Critical ratio delta* across mu/sigma");
  add_model_flags(pb, f, false, false);
  add_output_flags(pb, f);

  auto* th = app.add_subcommand("theory-hard", "Hard-margin asymptotic limits");
  add_model_flags(th, f, false, true);
  add_output_flags(th, f);

  auto* ts = app.add_subcommand("theory-soft", "Soft-margin asymptotic limits");
  add_model_flags(ts, f, true, true);
  add_output_flags(ts, f);

  auto* sim = app.add_subcommand("simulate", "Monte Carlo SVM fits side by side with theory");
  add_model_flags(sim, f, true, true);
  sim->add_flag("--hard", f.hard, "Hard margin instead of soft margin");
  add_sim_flags(sim, f);
  add_output_flags(sim, f);

  auto* rf = app.add_subcommand("reproduce-figure", "Rebuild a published figure with a pass/fail column");
  rf->add_option("N", f.figure, "Figure number 1..6")->required();
  rf->add_option("--profile", f.profile, "full (p=200, reps=100, 3 SE) or ci (p=60, reps=20, 4 SE)")
      ->capture_default_str();
  add_sim_flags(rf, f);
  add_output_flags(rf, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : svmasym::cli::kExitConfig;
  }

  svmasym::cli::RunConfig c;
  try {
    if (pb->parsed()) c.command = Command::PhaseBoundary;
    else if (th->parsed()) c.command = Command::TheoryHard;
    else if (ts->parsed()) c.command = Command::TheorySoft;
    else if (sim->parsed()) c.command = Command::Simulate;
    else c.command = Command::ReproduceFigure;

    c.sweep_var = f.sweep;
    if (!f.grid.empty()) c.grid = parse_grid(f.grid);
    c.params = svmasym::ModelParams::with_pi1(f.mu, f.sigma, f.delta, f.pi1);
    c.tau = f.tau;
    c.hard = f.hard;
    c.seed = f.seed;
    c.figure = f.figure;
    c.out_path = f.out;
    c.plot_path = f.plot;
    c.threads = f.threads;
    const auto& prof = svmasym::cli::profile_by_name(f.profile);
    c.profile = prof.name;
    c.band = prof.band;
    c.p = f.p > 0 ? f.p : prof.p;
    c.reps = f.reps > 0 ? f.reps : prof.reps;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return svmasym::cli::kExitConfig;
  }
  return svmasym::cli::run(c);
}
