#pragma once

// Truncated moments of the standard Gaussian measure Dx = exp(-x^2/2) dx / sqrt(2 pi).
// Every integral appearing in the hard- and soft-margin limits reduces to these.

#include <cmath>
#include <limits>
#include <numbers>

#include "svmasym/errors.hpp"

namespace svmasym::gauss {

inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;  // 1/sqrt(2 pi)

// Beyond this magnitude every kernel is replaced by its limiting value.
inline constexpr double kTailCutoff = 40.0;

inline double pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

/// Upper-tail probability Q(x) = P(G > x).
inline double q_function(double x) {
  if (std::isnan(x)) return x;
  if (x >= kTailCutoff) return 0.0;
  if (x <= -kTailCutoff) return 1.0;
  return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

/// M_k(a) = \int_a^\infty x^k Dx for k in {0, 1, 2}.
inline double partial_moment(int k, double a) {
  switch (k) {
    case 0:
      return q_function(a);
    case 1:
      return std::isinf(a) ? 0.0 : pdf(a);
    case 2:
      if (a == -std::numeric_limits<double>::infinity()) return 1.0;
      if (a == std::numeric_limits<double>::infinity()) return 0.0;
      return a * pdf(a) + q_function(a);
    default:
      throw Error(ErrorCode::InvalidArgument, "partial_moment: order must be 0, 1 or 2");
  }
}

namespace detail {

// Mills ratio Q(a)/pdf(a) for a >= kTailSwitch, by backward evaluation of
// 1/(a + 1/(a + 2/(a + 3/(a + ...)))).
inline constexpr double kTailSwitch = 5.0;

inline double mills_ratio(double a) {
  double t = 0.0;
  for (int k = 160; k >= 1; --k) t = k / (a + t);
  return 1.0 / (a + t);
}

}  // namespace detail

/// E(G - a)_+ = pdf(a) - a Q(a).
inline double hinge_moment(double a) {
  if (a >= kTailCutoff) return 0.0;
  if (a <= -kTailCutoff) return -a;
  if (a > detail::kTailSwitch) return pdf(a) * (1.0 - a * detail::mills_ratio(a));
  return pdf(a) - a * q_function(a);
}

/// J(a) = E[(G - a)_+^2] = (1 + a^2) Q(a) - a pdf(a).
inline double hinge_sq_moment(double a) {
  if (a >= kTailCutoff) return 0.0;
  if (a <= -kTailCutoff) return 1.0 + a * a;
  if (a > detail::kTailSwitch) return pdf(a) * ((1.0 + a * a) * detail::mills_ratio(a) - a);
  return (1.0 + a * a) * q_function(a) - a * pdf(a);
}

/// \int_a^b (t - a)^2 Dt for a <= b (b may be +inf).
inline double interval_shifted_sq(double a, double b) {
  if (a > b) throw Error(ErrorCode::InvalidArgument, "interval_shifted_sq: requires a <= b");
  if (a == b) return 0.0;
  if (std::isinf(b)) return hinge_sq_moment(a);
  const double w = b - a;
  const double v = hinge_sq_moment(a) - hinge_sq_moment(b) - w * w * q_function(b) - 2.0 * w * hinge_moment(b);
  return v > 0.0 ? v : 0.0;
}

}  // namespace svmasym::gauss
