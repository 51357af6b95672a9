#pragma once

// Asymptotic limits of the soft-margin SVM with per-sample penalty tau/p: the saddle
// point of q0^2 + q0 R_tau(1/q0, rho, eta, xi), minimised over (q0, rho, eta) and
// maximised over xi.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "svmasym/errors.hpp"
#include "svmasym/gauss_kernels.hpp"
#include "svmasym/model.hpp"
#include "svmasym/scalar_opt.hpp"

namespace svmasym::soft {

inline constexpr double kXiCap = 1e6;

struct SoftMarginPrediction {
  double tau = 0.0;
  double q0_star = 0.0;
  double rho_star = 0.0;
  double eta_star = 0.0;
  double xi_star = 0.0;
  bool xi_at_cap = false;  // sup over xi reached the 1e6 cap (rho* -> 1 regime)
  double err0 = 0.0;
  double err1 = 0.0;
  double err_total = 0.0;
  double saddle_value = 0.0;
  double restart_spread = 0.0;  // max coordinate disagreement between restarts
  int cycles = 0;               // coordinate-descent cycles of the reported restart
};

/// R_tau and its partial derivatives in every argument.
struct RTauPartials {
  double value = 0.0;
  double d_x = 0.0;
  double d_rho = 0.0;
  double d_eta = 0.0;
  double d_xi = 0.0;
};

struct XiSup {
  double value = 0.0;  // sup over xi of R_tau
  double xi = 0.0;     // maximiser; 0 when the sup is the xi -> 0 limit
  bool at_cap = false;
  RTauPartials partials;  // partials at the maximiser (envelope derivatives)
};

namespace detail {

inline void check_positive(double v, const char* what) {
  if (!(v > 0.0)) throw Error(ErrorCode::InvalidArgument, what);
}

// Per-class contribution T(a) = \int psi(t - a) Dt with the Huber-type profile
// psi(u) = tau (u - k/2) for u >= k, xi u^2 / 2 on [0, k), 0 below; k = tau/xi.
inline double class_term(double a, double k, double tau, double xi) {
  const double s = a + k;
  return tau * (gauss::hinge_moment(s) + 0.5 * k * gauss::q_function(s)) +
         0.5 * xi * gauss::interval_shifted_sq(a, s);
}

// dT/da = -xi (E(G-a)_+ - E(G-a-k)_+).
inline double class_term_da(double a, double k, double xi) {
  return -xi * (gauss::hinge_moment(a) - gauss::hinge_moment(a + k));
}

// dT/dxi = (1/2) E[min((G - a)_+, k)^2].
inline double class_term_dxi(double a, double k) {
  const double s = a + k;
  return 0.5 * (gauss::interval_shifted_sq(a, s) + k * k * gauss::q_function(s));
}

}  // namespace detail

inline RTauPartials r_tau_partials(double x, double rho, double eta, double xi, double tau,
                                   const ModelParams& params) {
  detail::check_positive(x, "r_tau: x must be > 0");
  detail::check_positive(xi, "r_tau: xi must be > 0");
  detail::check_positive(tau, "r_tau: tau must be > 0");
  const double base = (rho * params.mu - x) / params.sigma;
  const double a1 = base + eta;
  const double a0 = base - eta;
  const double k = tau / xi;
  const double w1 = params.delta * params.pi1;
  const double w0 = params.delta * params.pi0;
  const double t1 = detail::class_term_da(a1, k, xi);
  const double t0 = detail::class_term_da(a0, k, xi);
  RTauPartials p;
  p.value = w1 * detail::class_term(a1, k, tau, xi) + w0 * detail::class_term(a0, k, tau, xi) -
            0.5 * xi * (1.0 - rho * rho);
  p.d_x = -(w1 * t1 + w0 * t0) / params.sigma;
  p.d_rho = params.snr() * (w1 * t1 + w0 * t0) + xi * rho;
  p.d_eta = w1 * t1 - w0 * t0;
  p.d_xi = w1 * detail::class_term_dxi(a1, k) + w0 * detail::class_term_dxi(a0, k) - 0.5 * (1.0 - rho * rho);
  return p;
}

/// R_tau(x, rho, eta, xi) in closed form.
inline double r_tau(double x, double rho, double eta, double xi, double tau, const ModelParams& params) {
  return r_tau_partials(x, rho, eta, xi, tau, params).value;
}

/// The rho = 1, xi -> infinity limit: tau delta [pi1 E(G - a1)_+ + pi0 E(G - a0)_+].
inline double r_tau_aligned_limit(double x, double eta, double tau, const ModelParams& params) {
  const double base = (params.mu - x) / params.sigma;
  return tau * params.delta *
         (params.pi1 * gauss::hinge_moment(base + eta) + params.pi0 * gauss::hinge_moment(base - eta));
}

/// D_S(q0, rho, eta, xi) = q0^2 + q0 R_tau(1/q0, rho, eta, xi).
inline double d_soft(double q0, double rho, double eta, double xi, double tau, const ModelParams& params) {
  detail::check_positive(q0, "d_soft: q0 must be > 0");
  return q0 * q0 + q0 * r_tau(1.0 / q0, rho, eta, xi, tau, params);
}

/// sup over xi in (0, kXiCap] of R_tau(x, rho, eta, .), which is concave in xi for rho < 1.
inline XiSup sup_r_tau_over_xi(double x, double rho, double eta, double tau, const ModelParams& params) {
  detail::check_positive(x, "sup_r_tau_over_xi: x must be > 0");
  detail::check_positive(tau, "sup_r_tau_over_xi: tau must be > 0");
  XiSup out;
  if (rho >= 1.0) {
    const double base = (params.mu - x) / params.sigma;
    const double w1 = tau * params.delta * params.pi1 * gauss::q_function(base + eta);
    const double w0 = tau * params.delta * params.pi0 * gauss::q_function(base - eta);
    out.value = r_tau_aligned_limit(x, eta, tau, params);
    out.xi = std::numeric_limits<double>::infinity();
    out.at_cap = true;
    out.partials.value = out.value;
    out.partials.d_x = (w1 + w0) / params.sigma;
    out.partials.d_eta = w0 - w1;
    out.partials.d_rho = std::numeric_limits<double>::infinity();
    return out;
  }
  // dR/dxi as xi -> 0; R -> 0 there. A nonpositive slope means the sup is that limit.
  const double base = (rho * params.mu - x) / params.sigma;
  const double slope0 = 0.5 * params.delta *
                            (params.pi1 * gauss::hinge_sq_moment(base + eta) +
                             params.pi0 * gauss::hinge_sq_moment(base - eta)) -
                        0.5 * (1.0 - rho * rho);
  if (slope0 <= 0.0) return out;

  auto value = [&](double xi) { return r_tau(x, rho, eta, xi, tau, params); };
  auto slope = [&](double xi) { return r_tau_partials(x, rho, eta, xi, tau, params).d_xi; };
  const opt::MaxBracket br = opt::expand_bracket_for_max(value, {0.25, 4.0}, 4.0, kXiCap);
  double xi = 0.0;
  if (br.at_cap && slope(kXiCap) >= 0.0) {
    xi = kXiCap;
    out.at_cap = true;
  } else {
    const double lo = br.bracket.lo;
    const double hi = br.bracket.hi;
    const double slo = slope(lo);
    const double shi = slope(hi);
    if (slo <= 0.0) {
      xi = lo;
    } else if (shi >= 0.0) {
      xi = hi;
    } else {
      xi = opt::bisect_root(slope, {lo, hi}, {1e-13 * hi, 1e-300, 400});
    }
  }
  out.xi = xi;
  out.partials = r_tau_partials(x, rho, eta, xi, tau, params);
  out.value = out.partials.value;
  return out;
}

/// sup over xi of D_S together with its envelope gradient in (q0, rho, eta).
struct SupD {
  double value;
  double d_q0;
  double d_rho;
  double d_eta;
  XiSup inner;
};

inline SupD sup_d_soft(double q0, double rho, double eta, double tau, const ModelParams& params) {
  detail::check_positive(q0, "sup_d_soft: q0 must be > 0");
  const XiSup s = sup_r_tau_over_xi(1.0 / q0, rho, eta, tau, params);
  SupD d;
  d.inner = s;
  d.value = q0 * q0 + q0 * s.value;
  d.d_q0 = 2.0 * q0 + s.value - s.partials.d_x / q0;
  d.d_rho = q0 * s.partials.d_rho;
  d.d_eta = q0 * s.partials.d_eta;
  return d;
}

struct SoftSolverOptions {
  double move_tol = 1e-10;       // stop when a full cycle moves every coordinate less than this
  int max_cycles = 2000;
  double agree_tol = 1e-6;       // expected agreement between restarts
  double fail_tol = 1e-4;        // disagreement treated as a solver failure
};

namespace detail {

// One-dimensional minimisation of a convex function through its nondecreasing
// derivative g. Each helper starts from the current coordinate x and keeps it when
// g(x) == 0 (flat sections stay put).
template <class G>
double monotone_root_positive(G&& g, double x, double lo_limit, double hi_limit) {
  const double gx = g(x);
  if (gx == 0.0) return x;
  double lo = x;
  double hi = x;
  if (gx > 0.0) {
    do {
      hi = lo;
      if (lo <= lo_limit) return lo_limit;
      lo = std::max(lo / 4.0, lo_limit);
    } while (g(lo) > 0.0);
  } else {
    do {
      lo = hi;
      if (hi >= hi_limit) return hi_limit;
      hi = std::min(hi * 4.0, hi_limit);
    } while (g(hi) < 0.0);
  }
  return opt::bisect_root(g, {lo, hi}, {1e-14 * hi, 1e-300, 400});
}

// Derivative magnitudes below this are rounding noise of an exactly flat section.
inline constexpr double kFlatSlope = 1e-14;

// Midpoint of the set {|g| <= kFlatSlope} around x, for a nondecreasing g flat at x.
template <class G>
double plateau_center(G&& g, double x) {
  auto flat = [&](double t) { return std::abs(g(t)) <= kFlatSlope; };
  double step = 1.0;
  double lo = x - step;
  while (flat(lo)) {
    step *= 2.0;
    if (step > 1e8) return x;
    lo = x - step;
  }
  step = 1.0;
  double hi = x + step;
  while (flat(hi)) {
    step *= 2.0;
    if (step > 1e8) return x;
    hi = x + step;
  }
  const opt::SolverConfig cfg{1e-13, 1e-300, 400};
  auto left = [&](double t) { return g(t) < -kFlatSlope ? -1.0 : 1.0; };
  auto right = [&](double t) { return g(t) > kFlatSlope ? 1.0 : -1.0; };
  const double l = left(lo) < 0.0 ? opt::bisect_root(left, {lo, x}, cfg) : lo;
  const double u = right(hi) > 0.0 ? opt::bisect_root(right, {x, hi}, cfg) : hi;
  return 0.5 * (l + u);
}

template <class G>
double monotone_root_real(G&& g, double x) {
  const double gx = g(x);
  if (std::abs(gx) <= kFlatSlope) return plateau_center(g, x);
  double step = 1.0;
  double lo = x;
  double hi = x;
  if (gx > 0.0) {
    do {
      hi = lo;
      lo = x - step;
      step *= 2.0;
      if (step > 1e8) throw Error(ErrorCode::NoConvergence, "soft-margin: eta coordinate unbounded");
    } while (g(lo) > 0.0);
  } else {
    do {
      lo = hi;
      hi = x + step;
      step *= 2.0;
      if (step > 1e8) throw Error(ErrorCode::NoConvergence, "soft-margin: eta coordinate unbounded");
    } while (g(hi) < 0.0);
  }
  return opt::bisect_root(g, {lo, hi}, {1e-14, 1e-300, 400});
}

template <class G>
double monotone_root_unit(G&& g, double x) {
  constexpr double kRhoTop = 1.0 - 1e-12;
  x = std::clamp(x, 0.0, kRhoTop);
  const double gx = g(x);
  if (gx == 0.0) return x;
  if (gx > 0.0) {
    if (x == 0.0 || g(0.0) >= 0.0) return 0.0;
    return opt::bisect_root(g, {0.0, x}, {1e-14, 1e-300, 400});
  }
  if (x == kRhoTop || g(kRhoTop) <= 0.0) return 1.0;
  return opt::bisect_root(g, {x, kRhoTop}, {1e-14, 1e-300, 400});
}

struct Point {
  double q0;
  double rho;
  double eta;
};

inline Point coordinate_descent(Point p, double tau, const ModelParams& params, const SoftSolverOptions& opts,
                                int& cycles) {
  for (cycles = 1; cycles <= opts.max_cycles; ++cycles) {
    const Point prev = p;
    p.q0 = monotone_root_positive(
        [&](double q) { return sup_d_soft(q, p.rho, p.eta, tau, params).d_q0; }, p.q0, 1e-12, 1e9);
    p.rho = monotone_root_unit([&](double r) { return sup_d_soft(p.q0, r, p.eta, tau, params).d_rho; }, p.rho);
    p.eta = monotone_root_real([&](double e) { return sup_d_soft(p.q0, p.rho, e, tau, params).d_eta; }, p.eta);
    const double move =
        std::max({std::abs(p.q0 - prev.q0), std::abs(p.rho - prev.rho), std::abs(p.eta - prev.eta)});
    if (move < opts.move_tol) return p;
  }
  throw Error(ErrorCode::NoConvergence, "soft-margin coordinate descent did not settle");
}

}  // namespace detail

/// Saddle point of the soft-margin scalar problem for penalty tau.
inline SoftMarginPrediction solve_soft_margin_saddle(double tau, const ModelParams& params,
                                                     const SoftSolverOptions& opts = {}) {
  detail::check_positive(tau, "solve_soft_margin_saddle: tau must be > 0");
  params.validate();

  constexpr std::array<detail::Point, 3> kSeeds{{{1.0, 0.5, 0.0}, {0.1, 0.05, 1.0}, {10.0, 0.95, -1.0}}};
  std::array<detail::Point, 3> sols{};
  int cycles0 = 0;
  for (std::size_t i = 0; i < kSeeds.size(); ++i) {
    int cycles = 0;
    sols[i] = detail::coordinate_descent(kSeeds[i], tau, params, opts, cycles);
    if (i == 0) cycles0 = cycles;
  }
  double spread = 0.0;
  for (std::size_t i = 1; i < sols.size(); ++i) {
    spread = std::max({spread, std::abs(sols[i].q0 - sols[0].q0), std::abs(sols[i].rho - sols[0].rho),
                       std::abs(sols[i].eta - sols[0].eta)});
  }
  if (spread > opts.fail_tol) {
    throw Error(ErrorCode::NoConvergence, "soft-margin restarts disagree beyond tolerance");
  }

  const detail::Point& s = sols[0];
  const SupD at = sup_d_soft(s.q0, s.rho, s.eta, tau, params);
  SoftMarginPrediction out;
  out.tau = tau;
  out.q0_star = s.q0;
  out.rho_star = s.rho;
  out.eta_star = s.eta;
  out.xi_star = at.inner.xi;
  out.xi_at_cap = at.inner.at_cap;
  out.saddle_value = at.value;
  out.restart_spread = spread;
  out.cycles = cycles0;
  const double snr = s.rho * params.snr();
  out.err0 = gauss::q_function(snr - s.eta);
  out.err1 = gauss::q_function(snr + s.eta);
  out.err_total = params.pi0 * out.err0 + params.pi1 * out.err1;
  return out;
}

}  // namespace svmasym::soft
