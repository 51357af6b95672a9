#pragma once

// Deterministic one-dimensional solvers shared by the theory engines.

#include <cmath>
#include <utility>

#include "svmasym/errors.hpp"

namespace svmasym::opt {

struct Bracket {
  double lo;
  double hi;
};

struct SolverConfig {
  double tol_x = 1e-10;
  double tol_f = 1e-12;
  int max_iter = 200;
};

struct MinResult {
  double argmin;
  double value;
};

struct MaxBracket {
  Bracket bracket;
  bool at_cap = false;    // maximum sits at (or beyond) the upper cap
  bool at_floor = false;  // maximum sits at (or below) the lower floor
};

namespace detail {

inline void check(const Bracket& b) {
  if (!(std::isfinite(b.lo) && std::isfinite(b.hi) && b.lo < b.hi)) {
    throw Error(ErrorCode::InvalidArgument, "bracket must satisfy lo < hi, both finite");
  }
}

inline void check(const SolverConfig& cfg) {
  if (!(cfg.tol_x > 0.0 && cfg.tol_f > 0.0 && cfg.max_iter >= 1)) {
    throw Error(ErrorCode::InvalidArgument, "solver tolerances must be positive");
  }
}

}  // namespace detail

/// Root of a function with a sign change on the bracket. Never evaluates f outside [lo, hi].
template <class F>
double bisect_root(F&& f, Bracket bracket, const SolverConfig& cfg = {}) {
  detail::check(bracket);
  detail::check(cfg);
  double lo = bracket.lo;
  double hi = bracket.hi;
  double flo = f(lo);
  if (flo == 0.0) return lo;
  const double fhi = f(hi);
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw Error(ErrorCode::NoSignChange, "bisect_root: f has the same sign at both ends");
  }
  for (int it = 0; it < cfg.max_iter; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) return mid;  // bracket exhausted in floating point
    const double fmid = f(mid);
    if (std::abs(fmid) <= cfg.tol_f) return mid;
    if (std::signbit(fmid) == std::signbit(flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
    if (hi - lo <= cfg.tol_x) return lo + 0.5 * (hi - lo);
  }
  throw Error(ErrorCode::MaxIter, "bisect_root: iteration budget exhausted");
}

/// Golden-section search for the minimum of a unimodal function.
template <class F>
MinResult golden_min(F&& f, Bracket bracket, const SolverConfig& cfg = {}) {
  detail::check(bracket);
  detail::check(cfg);
  constexpr double kInvPhi = 0.61803398874989484820;
  double a = bracket.lo;
  double b = bracket.hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < cfg.max_iter; ++it) {
    if (b - a <= cfg.tol_x) {
      const double x = a + 0.5 * (b - a);
      const double fx = f(x);
      // plateau or noise floor: midpoint of the final bracket unless an interior probe is strictly lower
      if (fc < fx && fc <= fd) return {c, fc};
      if (fd < fx && fd < fc) return {d, fd};
      return {x, fx};
    }
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  throw Error(ErrorCode::MaxIter, "golden_min: iteration budget exhausted");
}

/// Golden-section search for the maximum of a unimodal function.
template <class F>
MinResult golden_max(F&& f, Bracket bracket, const SolverConfig& cfg = {}) {
  MinResult r = golden_min([&](double x) { return -f(x); }, bracket, cfg);
  r.value = -r.value;
  return r;
}

/// Grows a positive seed bracket geometrically until it encloses the maximiser of a
/// concave function on (floor, cap]. Returns the three-point enclosure [lo, hi].
template <class F>
MaxBracket expand_bracket_for_max(F&& f, Bracket seed, double growth, double cap, double floor = 1e-12) {
  detail::check(seed);
  if (!(growth > 1.0) || !(seed.lo > 0.0) || !(seed.hi < cap) || !(floor > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "expand_bracket_for_max: need growth > 1 and seed in (0, cap)");
  }
  double a = seed.lo;
  double c = seed.hi;
  double b = std::sqrt(a * c);
  double fa = f(a);
  double fb = f(b);
  double fc = f(c);
  MaxBracket out;
  while (fc > fb) {
    if (c >= cap) {
      out.at_cap = true;
      out.bracket = {b, cap};
      return out;
    }
    a = b;
    fa = fb;
    b = c;
    fb = fc;
    c = std::min(c * growth, cap);
    fc = f(c);
  }
  while (fa > fb) {
    if (a <= floor) {
      out.at_floor = true;
      out.bracket = {floor, b};
      return out;
    }
    c = b;
    b = a;
    fb = fa;
    a = std::max(a / growth, floor);
    fa = f(a);
  }
  out.bracket = {a, c};
  return out;
}

}  // namespace svmasym::opt
