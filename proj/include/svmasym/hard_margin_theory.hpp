#pragma once

// Asymptotic limits of the hard-margin SVM: the separability threshold delta*,
// and, below it, the limiting weight norm q0*, alignment rho* and scaled bias eta*.

#include <algorithm>
#include <cmath>
#include <limits>

#include "svmasym/errors.hpp"
#include "svmasym/gauss_kernels.hpp"
#include "svmasym/model.hpp"
#include "svmasym/scalar_opt.hpp"

namespace svmasym::hard {

struct HardMarginPrediction {
  double q0_star = std::numeric_limits<double>::quiet_NaN();
  double rho_star = std::numeric_limits<double>::quiet_NaN();
  double eta_star = std::numeric_limits<double>::quiet_NaN();
  double bias_limit = std::numeric_limits<double>::quiet_NaN();  // eta* q0* sigma
  double err0 = std::numeric_limits<double>::quiet_NaN();
  double err1 = std::numeric_limits<double>::quiet_NaN();
  double err_total = std::numeric_limits<double>::quiet_NaN();
  double delta_critical = std::numeric_limits<double>::quiet_NaN();
  bool separable = false;  // false => every limit above is NaN
};

/// Value and minimiser of the (rho, eta) section of D_H at fixed q0.
struct BetaResult {
  double value;
  double rho;
  double eta;
};

/// Unique eta with pi1 E(G - a - eta)_+ = pi0 E(G - a + eta)_+, a = rho mu/sigma - shift.
/// shift = 0 gives the bias of the threshold condition; shift = 1/(q0 sigma) gives the
/// minimiser of D_H(q0, rho, .).
inline double eta_star_margin(double rho, double shift, const ModelParams& params) {
  params.validate();
  const double a = rho * params.snr() - shift;
  auto foc = [&](double eta) {
    return params.pi1 * gauss::hinge_moment(a + eta) - params.pi0 * gauss::hinge_moment(a - eta);
  };
  // foc is strictly decreasing, with f(-inf) = +inf and f(+inf) = -inf.
  double half = 1.0;
  while (!(foc(-half) > 0.0 && foc(half) < 0.0)) {
    half *= 2.0;
    if (half > 1e12) throw Error(ErrorCode::MaxIter, "eta_star_margin: bracket expansion exhausted");
  }
  return opt::bisect_root(foc, {-half, half}, {1e-13, 1e-15, 400});
}

namespace detail {

/// Minimum of a one-dimensional function on [lo, hi]: coarse scan, then golden refinement
/// around the best scan point.
template <class F>
opt::MinResult scan_then_golden(F&& f, double lo, double hi, int points) {
  double best_x = lo;
  double best_f = std::numeric_limits<double>::infinity();
  int best_i = 0;
  const double step = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) {
    const double x = (i == points - 1) ? hi : lo + i * step;
    const double v = f(x);
    if (v < best_f) {
      best_f = v;
      best_x = x;
      best_i = i;
    }
  }
  const double a = std::max(lo, lo + (best_i - 1) * step);
  const double b = std::min(hi, lo + (best_i + 1) * step);
  opt::MinResult r = opt::golden_min(f, {a, b}, {1e-12, 1e-15, 300});
  if (best_f < r.value) return {best_x, best_f};
  return r;
}

}  // namespace detail

/// Critical sample ratio: hard-margin SVM separates the data iff delta < delta*.
/// Ignores params.delta.
inline double separability_threshold(const ModelParams& params) {
  params.validate();
  const double s = params.snr();
  constexpr double kRhoMax = 1.0 - 1e-12;
  auto g = [&](double rho) {
    const double eta = eta_star_margin(rho, 0.0, params);
    const double num = params.pi1 * gauss::hinge_sq_moment(rho * s + eta) +
                       params.pi0 * gauss::hinge_sq_moment(rho * s - eta);
    return num / (1.0 - rho * rho);
  };
  const opt::MinResult m = detail::scan_then_golden(g, 0.0, kRhoMax, 65);
  return 1.0 / m.value;
}

/// D_H(q0, rho, eta) = sqrt(delta pi1 J(c1) + delta pi0 J(c0)) - sqrt(1 - rho^2),
/// c1 = (rho mu - 1/q0)/sigma + eta, c0 = (rho mu - 1/q0)/sigma - eta.
inline double d_hard(double q0, double rho, double eta, const ModelParams& params) {
  if (!(q0 > 0.0)) throw Error(ErrorCode::InvalidArgument, "d_hard: q0 must be > 0");
  const double base = (rho * params.mu - 1.0 / q0) / params.sigma;
  const double inside = params.delta * (params.pi1 * gauss::hinge_sq_moment(base + eta) +
                                        params.pi0 * gauss::hinge_sq_moment(base - eta));
  return std::sqrt(inside) - std::sqrt(std::max(0.0, 1.0 - rho * rho));
}

/// beta(q0) = min over rho in [0, 1], eta in R of D_H(q0, rho, eta), with its minimiser.
inline BetaResult beta_full(double q0, const ModelParams& params) {
  if (!(q0 > 0.0)) throw Error(ErrorCode::InvalidArgument, "beta: q0 must be > 0");
  params.validate();
  const double shift = 1.0 / (q0 * params.sigma);
  auto section = [&](double rho) { return d_hard(q0, rho, eta_star_margin(rho, shift, params), params); };
  const opt::MinResult m = detail::scan_then_golden(section, 0.0, 1.0, 33);
  return {m.value, m.argmin, eta_star_margin(m.argmin, shift, params)};
}

inline double beta(double q0, const ModelParams& params) { return beta_full(q0, params).value; }

/// Full hard-margin prediction. When delta >= delta* the data are asymptotically not
/// separable: `separable` is false and the limits are NaN.
inline HardMarginPrediction predict_hard_margin(const ModelParams& params) {
  params.validate();
  HardMarginPrediction out;
  out.delta_critical = separability_threshold(params);
  out.separable = params.delta < out.delta_critical;
  if (!out.separable) return out;

  auto b = [&](double q0) { return beta(q0, params); };
  double lo = 1e-3;
  while (b(lo) <= 0.0) {
    lo /= 4.0;
    if (lo < 1e-12) throw Error(ErrorCode::NoConvergence, "predict_hard_margin: beta nonpositive near 0");
  }
  double hi = 1.0;
  while (b(hi) >= 0.0) {
    hi *= 4.0;
    if (hi > 1e9) throw Error(ErrorCode::NoConvergence, "predict_hard_margin: q0* diverges (delta too close to delta*)");
  }
  if (hi / 4.0 > lo && b(hi / 4.0) > 0.0) lo = hi / 4.0;
  const double q0 = opt::bisect_root(b, {lo, hi}, {1e-12 * hi, 1e-14, 400});
  const BetaResult at = beta_full(q0, params);

  out.q0_star = q0;
  out.rho_star = at.rho;
  out.eta_star = at.eta;
  out.bias_limit = at.eta * q0 * params.sigma;
  const double s = at.rho * params.snr();
  // A positive bias enlarges the half-space assigned to label +1 (prior pi1).
  out.err0 = gauss::q_function(s - at.eta);
  out.err1 = gauss::q_function(s + at.eta);
  out.err_total = params.pi0 * out.err0 + params.pi1 * out.err1;
  return out;
}

}  // namespace svmasym::hard
