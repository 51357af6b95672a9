#pragma once

// Independent reference computations for the test suites: adaptive quadrature of the
// defining integrals, brute-force grid searches and a dense first-order QP solver.

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "svmasym/model.hpp"

namespace oracle {

inline double density(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

/// \int_a^b f(t) Dt on a finite interval.
template <class F>
double gauss_integral(F&& f, double a, double b) {
  if (a >= b) return 0.0;
  auto g = [&](double t) { return f(t) * density(t); };
  double err = 0.0;
  // Split at the mode so the adaptive rule never straddles the peak blindly.
  if (a < 0.0 && b > 0.0) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, a, 0.0, 15, 1e-13, &err) +
           boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, 0.0, b, 15, 1e-13, &err);
  }
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, a, b, 15, 1e-13, &err);
}

/// \int_a^\infty f(t) Dt: Gauss-Kronrod up to a finite knot, exp-sinh on the tail.
template <class F>
double gauss_tail_integral(F&& f, double a) {
  const double knot = std::max(a, 0.0) + 4.0;
  auto g = [&](double t) { return f(t) * density(t); };
  boost::math::quadrature::exp_sinh<double> tail;
  double err = 0.0, l1 = 0.0;
  return gauss_integral(f, a, knot) + tail.integrate(g, knot, std::numeric_limits<double>::infinity(), 1e-13, &err, &l1);
}

inline double q(double x) {
  return gauss_tail_integral([](double) { return 1.0; }, x);
}
inline double moment(int k, double a) {
  return gauss_tail_integral([k](double t) { return std::pow(t, k); }, a);
}
inline double hinge(double a) {
  return gauss_tail_integral([a](double t) { return t - a; }, a);
}
inline double hinge_sq(double a) {
  return gauss_tail_integral([a](double t) { return (t - a) * (t - a); }, a);
}
inline double shifted_sq(double a, double b) {
  return gauss_integral([a](double t) { return (t - a) * (t - a); }, a, b);
}

/// The soft-margin map as four literal integrals against Dt.
inline double r_tau(double x, double rho, double eta, double xi, double tau, const svmasym::ModelParams& m) {
  const double s = x / m.sigma, r = rho * m.mu / m.sigma, k = tau / xi;
  const double i1 = gauss_tail_integral([&](double t) { return t + s - r - eta - tau / (2.0 * xi); }, k + eta + r - s);
  const double i0 = gauss_tail_integral([&](double t) { return t + s - r + eta - tau / (2.0 * xi); }, k - eta + r - s);
  const double j1 = gauss_integral([&](double t) { return (t + s - r - eta) * (t + s - r - eta); }, -s + r + eta,
                                   -s + r + eta + k);
  const double j0 = gauss_integral([&](double t) { return (t + s - r + eta) * (t + s - r + eta); }, -s + r - eta,
                                   -s + r - eta + k);
  return tau * m.pi1 * m.delta * i1 + tau * m.pi0 * m.delta * i0 + 0.5 * xi * m.pi1 * m.delta * j1 +
         0.5 * xi * m.pi0 * m.delta * j0 - 0.5 * xi * (1.0 - rho * rho);
}

/// Minimum of f over a rectangle: uniform grid, then compass search from the best node.
template <class F>
Eigen::Vector3d grid_min_2d(F&& f, double x0, double x1, double y0, double y1, int nodes) {
  double bx = x0, by = y0, bf = std::numeric_limits<double>::infinity();
  for (int i = 0; i < nodes; ++i) {
    for (int j = 0; j < nodes; ++j) {
      const double x = x0 + (x1 - x0) * i / (nodes - 1);
      const double y = y0 + (y1 - y0) * j / (nodes - 1);
      const double v = f(x, y);
      if (v < bf) bf = v, bx = x, by = y;
    }
  }
  double hx = (x1 - x0) / (nodes - 1), hy = (y1 - y0) / (nodes - 1);
  while (hx > 1e-12 || hy > 1e-12) {
    bool moved = false;
    const double cand[4][2] = {{bx + hx, by}, {bx - hx, by}, {bx, by + hy}, {bx, by - hy}};
    for (const auto& c : cand) {
      if (c[0] < x0 || c[0] > x1 || c[1] < y0 || c[1] > y1) continue;
      const double v = f(c[0], c[1]);
      if (v < bf) bf = v, bx = c[0], by = c[1], moved = true;
    }
    if (!moved) hx *= 0.5, hy *= 0.5;
  }
  return {bx, by, bf};
}

/// Euclidean projection onto {0 <= l <= C, y'l = 0}: clip(v - nu y) with nu found by bisection.
inline Eigen::VectorXd project_box_hyperplane(const Eigen::VectorXd& v, const Eigen::VectorXd& y, double C) {
  auto at = [&](double nu) { return Eigen::VectorXd((v - nu * y).cwiseMax(0.0).cwiseMin(C)); };
  double lo = -1.0, hi = 1.0;
  while (y.dot(at(lo)) < 0.0) lo *= 2.0;
  while (y.dot(at(hi)) > 0.0) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (y.dot(at(mid)) > 0.0 ? lo : hi) = mid;
  }
  return at(0.5 * (lo + hi));
}

/// Optimal value of  max sum(l) - 1/4 ||sum l_i y_i x_i||^2  over the box-hyperplane set,
/// by accelerated projected gradient with adaptive restart.
inline double svm_dual_value(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double C, int iters) {
  const Eigen::MatrixXd Z = y.asDiagonal() * X;
  const Eigen::MatrixXd H = 0.5 * Z * Z.transpose();
  const double L = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(H).eigenvalues().maxCoeff();
  const Eigen::Index n = y.size();
  auto value = [&](const Eigen::VectorXd& l) { return l.sum() - 0.5 * l.dot(H * l); };
  Eigen::VectorXd l = Eigen::VectorXd::Zero(n), v = l;
  double t = 1.0, best = value(l);
  for (int k = 0; k < iters; ++k) {
    const Eigen::VectorXd grad = Eigen::VectorXd::Ones(n) - H * v;
    Eigen::VectorXd next = project_box_hyperplane(v + grad / L, y, C);
    if (value(next) < value(l)) {  // restart momentum
      t = 1.0;
      next = project_box_hyperplane(l + (Eigen::VectorXd::Ones(n) - H * l) / L, y, C);
    }
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    v = next + ((t - 1.0) / t_next) * (next - l);
    l = next;
    t = t_next;
    best = std::max(best, value(l));
  }
  return best;
}

/// max a'u over {u >= 0, ||u|| = theta} by projected gradient ascent from a few starts.
inline double sphere_ascent(const Eigen::VectorXd& a, double theta, int iters) {
  auto project = [&](const Eigen::VectorXd& v) {
    const Eigen::VectorXd pos = v.cwiseMax(0.0);
    const double nrm = pos.norm();
    if (nrm > 0.0) return Eigen::VectorXd(theta * pos / nrm);
    Eigen::Index i = 0;
    v.maxCoeff(&i);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(v.size());
    e(i) = theta;
    return e;
  };
  double best = -std::numeric_limits<double>::infinity();
  const Eigen::Index n = a.size();
  for (Eigen::Index s = 0; s <= n; ++s) {
    Eigen::VectorXd u = s < n ? Eigen::VectorXd(Eigen::VectorXd::Unit(n, s) * theta)
                              : project(Eigen::VectorXd::Ones(n));
    for (int k = 0; k < iters; ++k) u = project(u + 0.5 * a / std::max(1.0, a.norm()));
    best = std::max(best, a.dot(u));
  }
  return best;
}

}  // namespace oracle
