#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "svmasym/dataset.hpp"
#include "svmasym/errors.hpp"
#include "svmasym/gauss_kernels.hpp"
#include "svmasym/model.hpp"

namespace svmasym {

enum class SolveStatus { Optimal, Infeasible, MaxIter };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Infeasible: return "Infeasible";
    case SolveStatus::MaxIter: return "MaxIter";
  }
  return "Unknown";
}

/// Solution of  min ||w||^2 + C sum_i max(0, 1 - y_i (w'x_i + b))  with C = tau / p.
struct SvmFit {
  Eigen::VectorXd w;
  double b = 0.0;
  Eigen::VectorXd dual_vars;
  SolveStatus status = SolveStatus::MaxIter;
  double objective = 0.0;       // primal value
  double dual_objective = 0.0;  // sum(lambda) - ||w||^2
  double hinge_total = 0.0;
  double kkt_residual = 0.0;    // maximal violating pair gap
  double box = 0.0;             // upper bound C on the duals
  long iterations = 0;
};

struct SmoOptions {
  double kkt_tol = 1e-7;
  long max_epochs = 100000;
};

namespace detail {

struct IpmResult {
  Eigen::VectorXd lambda;  // snapped to {0, C} where the active set is clear
  bool converged = false;
};

/// Mehrotra predictor-corrector on the primal  min ||w||^2 + C 1'xi  subject to
/// y_i (w'x_i + b) + xi_i - 1 - s_i = 0,  s, xi >= 0.  Newton steps reduce to a
/// (p+1) x (p+1) symmetric system.
inline IpmResult interior_point(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double C,
                                int max_iter = 60, double tol = 1e-9) {
  const Eigen::Index n = X.rows(), p = X.cols();
  Eigen::VectorXd w = Eigen::VectorXd::Zero(p);
  double b = 0.0;
  Eigen::VectorXd xi = Eigen::VectorXd::Ones(n), s = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd lam = Eigen::VectorXd::Constant(n, 0.5 * C), z = Eigen::VectorXd::Constant(n, 0.5 * C);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  const double scale = std::max(1.0, C);

  auto step_to_boundary = [](const Eigen::VectorXd& v, const Eigen::VectorXd& dv) {
    double a = 1.0;
    for (Eigen::Index t = 0; t < v.size(); ++t)
      if (dv(t) < 0.0) a = std::min(a, -v(t) / dv(t));
    return a;
  };

  IpmResult out;
  double best_merit = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_lam = lam, best_s = s, best_z = z, best_xi = xi;
  for (int it = 0; it < max_iter; ++it) {
    const Eigen::VectorXd Xw = X * w;
    const Eigen::VectorXd r_w = 2.0 * w - X.transpose() * y.cwiseProduct(lam);
    const double r_b = y.dot(lam);
    const Eigen::VectorXd r_xi = Eigen::VectorXd::Constant(n, C) - lam - z;
    const Eigen::VectorXd r_p = y.cwiseProduct(Xw.array().matrix() + Eigen::VectorXd::Constant(n, b)) + xi - ones - s;
    const double mu = (lam.dot(s) + z.dot(xi)) / (2.0 * static_cast<double>(n));

    const double dual_res = std::max({r_w.lpNorm<Eigen::Infinity>(), std::abs(r_b), r_xi.lpNorm<Eigen::Infinity>()}) / scale;
    const double merit = std::max({dual_res, r_p.lpNorm<Eigen::Infinity>(), mu / scale});
    if (merit < best_merit) {
      best_merit = merit;
      best_lam = lam;
      best_s = s;
      best_z = z;
      best_xi = xi;
    }
    if (merit <= tol) {
      out.converged = true;
      break;
    }

    const Eigen::VectorXd omega_inv = (xi.cwiseQuotient(z) + s.cwiseQuotient(lam)).cwiseInverse();
    Eigen::MatrixXd A(p + 1, p + 1);
    A.topLeftCorner(p, p).noalias() = X.transpose() * omega_inv.asDiagonal() * X;
    A.topLeftCorner(p, p).diagonal().array() += 2.0;
    const Eigen::VectorXd xo = X.transpose() * omega_inv;
    A.topRightCorner(p, 1) = xo;
    A.bottomLeftCorner(1, p) = xo.transpose();
    A(p, p) = omega_inv.sum();
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(A);

    struct Dir { Eigen::VectorXd dw, dl, ds, dxi, dz; double db; };
    auto solve_dir = [&](const Eigen::VectorXd& c_s, const Eigen::VectorXd& c_xi) {
      Dir d;
      const Eigen::VectorXd g = -r_p - (c_xi - xi.cwiseProduct(r_xi)).cwiseQuotient(z) + c_s.cwiseQuotient(lam);
      const Eigen::VectorXd og = omega_inv.cwiseProduct(g);
      Eigen::VectorXd rhs(p + 1);
      rhs.head(p) = -r_w + X.transpose() * y.cwiseProduct(og);
      rhs(p) = y.dot(og) + r_b;
      const Eigen::VectorXd sol = ldlt.solve(rhs);
      d.dw = sol.head(p);
      d.db = sol(p);
      d.dl = omega_inv.cwiseProduct(g - y.cwiseProduct(X * d.dw) - y * d.db);
      d.ds = (c_s - s.cwiseProduct(d.dl)).cwiseQuotient(lam);
      d.dz = r_xi - d.dl;
      d.dxi = (c_xi - xi.cwiseProduct(d.dz)).cwiseQuotient(z);
      return d;
    };
    auto max_step = [&](const Dir& d) {
      return std::min({step_to_boundary(lam, d.dl), step_to_boundary(s, d.ds), step_to_boundary(z, d.dz),
                       step_to_boundary(xi, d.dxi)});
    };

    const Dir aff = solve_dir(-lam.cwiseProduct(s), -z.cwiseProduct(xi));
    const double a_aff = max_step(aff);
    const double mu_aff = ((lam + a_aff * aff.dl).dot(s + a_aff * aff.ds) + (z + a_aff * aff.dz).dot(xi + a_aff * aff.dxi)) /
                          (2.0 * static_cast<double>(n));
    const double sigma = std::pow(std::clamp(mu_aff / mu, 0.0, 1.0), 3);
    const Eigen::VectorXd c_s = (Eigen::VectorXd::Constant(n, sigma * mu) - lam.cwiseProduct(s) - aff.dl.cwiseProduct(aff.ds));
    const Eigen::VectorXd c_xi = (Eigen::VectorXd::Constant(n, sigma * mu) - z.cwiseProduct(xi) - aff.dz.cwiseProduct(aff.dxi));
    const Dir d = solve_dir(c_s, c_xi);
    const double a = std::min(1.0, 0.995 * max_step(d));
    w += a * d.dw;
    b += a * d.db;
    lam += a * d.dl;
    s += a * d.ds;
    z += a * d.dz;
    xi += a * d.dxi;
  }

  lam = best_lam;
  s = best_s;
  z = best_z;
  xi = best_xi;
  out.lambda = lam;
  for (Eigen::Index t = 0; t < n; ++t) {
    if (lam(t) < s(t)) out.lambda(t) = 0.0;
    else if (z(t) < xi(t)) out.lambda(t) = C;
    else out.lambda(t) = std::clamp(lam(t), 0.0, C);
  }
  return out;
}

/// Dense SMO on  min_l  l'Ql/2 - 1'l  with  Q = diag(y) K diag(y) / 2,  0 <= l <= C,  y'l = 0.
/// The gradient entry G_i equals y_i w'x_i - 1.
/// Pair selection: maximal violation for i, second-order gain for j.
class SmoSolver {
 public:
  SmoSolver(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) : X_(X), y_(y) {
    const Eigen::MatrixXd K = X * X.transpose();
    Q_ = 0.5 * (y.asDiagonal() * K * y.asDiagonal());
    qd_ = Q_.diagonal();
  }

  Eigen::Index size() const { return y_.size(); }

  SvmFit solve(double C, const SmoOptions& user_opts, const Eigen::VectorXd* warm) {
    const Eigen::Index n = size();
    // Gradient entries carry rounding error proportional to C times the kernel scale.
    SmoOptions opts = user_opts;
    opts.kkt_tol = std::max(opts.kkt_tol, 1e-14 * C * 2.0 * qd_.maxCoeff());
    Eigen::VectorXd lam = Eigen::VectorXd::Zero(n);
    if (warm != nullptr) lam = warm->cwiseMax(0.0).cwiseMin(C);
    Eigen::VectorXd G = Q_ * lam - Eigen::VectorXd::Ones(n);
    // A warm start usually carries the right free set, in which case one linear solve finishes.
    if (warm != nullptr && polish(lam, G, C, opts.kkt_tol)) return finish(lam, G, C, 0, opts, true);

    const long max_iter = std::max<long>(1, opts.max_epochs) * std::max<long>(n, 1);
    const long ipm_after = std::min<long>(max_iter, kSmoFirstEpochs * n);
    long iter = 0;
    long next_refresh = 10 * n;
    double polish_at = std::max(1e-2, opts.kkt_tol);
    bool converged = false;
    bool ipm_done = false;
    while (iter < max_iter) {
      if (!ipm_done && iter >= ipm_after) {
        ipm_done = true;
        const IpmResult ipm = interior_point(X_, y_, C);
        Eigen::VectorXd cand = ipm.lambda;
        Eigen::VectorXd cand_g = Q_ * cand - Eigen::VectorXd::Ones(n);
        if (polish(cand, cand_g, C, opts.kkt_tol) || gap_of(cand, cand_g, C) <= opts.kkt_tol) {
          lam = cand;
          converged = true;
          break;
        }
        if (ipm.converged && std::abs(y_.dot(cand)) <= 1e-10 * std::max(1.0, C) &&
            gap_of(cand, cand_g, C) < gap_of(lam, G, C)) {
          lam = cand;
          G = cand_g;
        }
      }
      Eigen::Index i = -1, j = -1;
      const double gap = select(lam, G, C, i, j);
      if (gap <= polish_at || i < 0 || j < 0 || iter >= next_refresh) {
        G.noalias() = Q_ * lam - Eigen::VectorXd::Ones(n);
        next_refresh = iter + 10 * n;
        if (select(lam, G, C, i, j) <= opts.kkt_tol || i < 0 || j < 0) {
          converged = true;
          break;
        }
        if (polish(lam, G, C, opts.kkt_tol)) {
          converged = true;
          break;
        }
        if (gap <= polish_at) polish_at = std::max(0.1 * polish_at, opts.kkt_tol);
        continue;
      }
      update(lam, G, C, i, j);
      ++iter;
    }
    G.noalias() = Q_ * lam - Eigen::VectorXd::Ones(n);
    return finish(lam, G, C, iter, opts, converged);
  }

 private:
  static constexpr long kSmoFirstEpochs = 5;

  double gap_of(const Eigen::VectorXd& lam, const Eigen::VectorXd& G, double C) const {
    Eigen::Index i = -1, j = -1;
    return select(lam, G, C, i, j);
  }

  bool in_up(const Eigen::VectorXd& lam, Eigen::Index t, double C) const {
    return y_(t) > 0 ? lam(t) < C : lam(t) > 0.0;
  }
  bool in_low(const Eigen::VectorXd& lam, Eigen::Index t, double C) const {
    return y_(t) > 0 ? lam(t) > 0.0 : lam(t) < C;
  }

  double select(const Eigen::VectorXd& lam, const Eigen::VectorXd& G, double C, Eigen::Index& i,
                Eigen::Index& j) const {
    const Eigen::Index n = size();
    double gmax = -std::numeric_limits<double>::infinity();
    double gmax2 = -std::numeric_limits<double>::infinity();
    i = -1;
    for (Eigen::Index t = 0; t < n; ++t) {
      if (in_up(lam, t, C) && -y_(t) * G(t) >= gmax) {
        gmax = -y_(t) * G(t);
        i = t;
      }
    }
    j = -1;
    double best = std::numeric_limits<double>::infinity();
    const double* qi = i >= 0 ? Q_.col(i).data() : nullptr;
    for (Eigen::Index t = 0; t < n; ++t) {
      if (!in_low(lam, t, C)) continue;
      const double yg = y_(t) * G(t);
      gmax2 = std::max(gmax2, yg);
      if (i < 0) continue;
      const double diff = gmax + yg;
      if (diff > 0.0) {
        double quad = qd_(i) + qd_(t) - 2.0 * y_(i) * y_(t) * qi[t];
        if (quad <= 0.0) quad = 1e-12;
        const double gain = -(diff * diff) / quad;
        if (gain <= best) {
          best = gain;
          j = t;
        }
      }
    }
    if (i < 0 || !std::isfinite(gmax2)) return 0.0;
    return gmax + gmax2;
  }

  void update(Eigen::VectorXd& lam, Eigen::VectorXd& G, double C, Eigen::Index i, Eigen::Index j) {
    const double old_i = lam(i), old_j = lam(j);
    const double qij = Q_(i, j);
    if (y_(i) != y_(j)) {
      double quad = qd_(i) + qd_(j) + 2.0 * qij;
      if (quad <= 0.0) quad = 1e-12;
      const double delta = (-G(i) - G(j)) / quad;
      const double diff = lam(i) - lam(j);
      lam(i) += delta;
      lam(j) += delta;
      if (diff > 0.0) {
        if (lam(j) < 0.0) { lam(j) = 0.0; lam(i) = diff; }
      } else {
        if (lam(i) < 0.0) { lam(i) = 0.0; lam(j) = -diff; }
      }
      if (diff > 0.0) {
        if (lam(i) > C) { lam(i) = C; lam(j) = C - diff; }
      } else {
        if (lam(j) > C) { lam(j) = C; lam(i) = C + diff; }
      }
    } else {
      double quad = qd_(i) + qd_(j) - 2.0 * qij;
      if (quad <= 0.0) quad = 1e-12;
      const double delta = (G(i) - G(j)) / quad;
      const double sum = lam(i) + lam(j);
      lam(i) -= delta;
      lam(j) += delta;
      if (sum > C) {
        if (lam(i) > C) { lam(i) = C; lam(j) = sum - C; }
      } else {
        if (lam(j) < 0.0) { lam(j) = 0.0; lam(i) = sum; }
      }
      if (sum > C) {
        if (lam(j) > C) { lam(j) = C; lam(i) = sum - C; }
      } else {
        if (lam(i) < 0.0) { lam(i) = 0.0; lam(j) = sum; }
      }
    }
    const double di = lam(i) - old_i, dj = lam(j) - old_j;
    G.noalias() += Q_.col(i) * di + Q_.col(j) * dj;
  }

  // Solve the equality part of the KKT system with the current free set held fixed and
  // bound variables frozen. Accepts the result only if it is feasible and optimal.
  bool polish(Eigen::VectorXd& lam, Eigen::VectorXd& G, double C, double tol) const {
    std::vector<Eigen::Index> free;
    for (Eigen::Index t = 0; t < size(); ++t)
      if (lam(t) > 0.0 && lam(t) < C) free.push_back(t);
    if (free.empty()) return false;
    const auto m = static_cast<Eigen::Index>(free.size());
    Eigen::VectorXd fixed = lam;
    for (Eigen::Index t : free) fixed(t) = 0.0;
    const Eigen::VectorXd rhs_g = Eigen::VectorXd::Ones(size()) - Q_ * fixed;
    Eigen::MatrixXd A(m + 1, m + 1);
    Eigen::VectorXd rhs(m + 1);
    for (Eigen::Index a = 0; a < m; ++a) {
      for (Eigen::Index c = 0; c < m; ++c) A(a, c) = Q_(free[a], free[c]);
      A(a, m) = -y_(free[a]);
      A(m, a) = y_(free[a]);
      rhs(a) = rhs_g(free[a]);
    }
    A(m, m) = 0.0;
    rhs(m) = -y_.dot(fixed);
    const Eigen::VectorXd sol = A.colPivHouseholderQr().solve(rhs);
    Eigen::VectorXd cand = fixed;
    for (Eigen::Index a = 0; a < m; ++a) {
      const double v = sol(a);
      if (!(v >= 0.0 && v <= C)) return false;
      cand(free[a]) = v;
    }
    Eigen::VectorXd cand_g = Q_ * cand - Eigen::VectorXd::Ones(size());
    Eigen::Index i = -1, j = -1;
    if (std::abs(y_.dot(cand)) > 1e-10 * std::max(1.0, C)) return false;
    if (select(cand, cand_g, C, i, j) > tol) return false;
    lam = cand;
    G = cand_g;
    return true;
  }

  double bias(const Eigen::VectorXd& lam, const Eigen::VectorXd& G, double C) const {
    double ub = std::numeric_limits<double>::infinity();
    double lb = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    long nfree = 0;
    for (Eigen::Index t = 0; t < size(); ++t) {
      const double yg = y_(t) * G(t);
      if (lam(t) >= C) {
        if (y_(t) < 0) ub = std::min(ub, yg); else lb = std::max(lb, yg);
      } else if (lam(t) <= 0.0) {
        if (y_(t) > 0) ub = std::min(ub, yg); else lb = std::max(lb, yg);
      } else {
        sum += yg;
        ++nfree;
      }
    }
    double r;
    if (nfree > 0) r = sum / static_cast<double>(nfree);
    else if (std::isfinite(ub) && std::isfinite(lb)) r = 0.5 * (ub + lb);
    else if (std::isfinite(ub)) r = ub;
    else if (std::isfinite(lb)) r = lb;
    else r = 0.0;
    return -r;
  }

  SvmFit finish(const Eigen::VectorXd& lam, const Eigen::VectorXd& G, double C, long iter,
                const SmoOptions& opts, bool converged) const {
    SvmFit fit;
    fit.dual_vars = lam;
    fit.box = C;
    fit.iterations = iter;
    fit.w = 0.5 * (X_.transpose() * lam.cwiseProduct(y_));
    fit.b = bias(lam, G, C);
    Eigen::Index i = -1, j = -1;
    fit.kkt_residual = std::max(0.0, select(lam, G, C, i, j));
    const Eigen::VectorXd margins = (X_ * fit.w).array() + fit.b;
    const double hinge = (1.0 - y_.cwiseProduct(margins).array()).max(0.0).sum();
    const double w2 = fit.w.squaredNorm();
    fit.hinge_total = hinge;
    fit.objective = w2 + C * hinge;
    fit.dual_objective = lam.sum() - w2;
    fit.status = (converged && fit.kkt_residual <= opts.kkt_tol) ? SolveStatus::Optimal : SolveStatus::MaxIter;
    return fit;
  }

  const Eigen::MatrixXd& X_;
  const Eigen::VectorXd& y_;
  Eigen::MatrixXd Q_;
  Eigen::VectorXd qd_;
};

inline void check_problem(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  if (X.rows() != y.size() || X.rows() < 2)
    throw Error(ErrorCode::InvalidArgument, "svm: features and labels disagree in size or n < 2");
  bool pos = false, neg = false;
  for (Eigen::Index t = 0; t < y.size(); ++t) {
    if (y(t) == 1.0) pos = true;
    else if (y(t) == -1.0) neg = true;
    else throw Error(ErrorCode::InvalidArgument, "svm: labels must be +1 or -1");
  }
  if (!pos || !neg) throw Error(ErrorCode::DegenerateSplit, "svm: both classes must be present");
}

}  // namespace detail

/// Soft-margin SVM with penalty tau / p per sample, where p = X.cols().
inline SvmFit solve_soft_margin_svm(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double tau,
                                    const SmoOptions& opts = {}) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw Error(ErrorCode::InvalidArgument, "svm: tau must be > 0");
  detail::check_problem(X, y);
  detail::SmoSolver smo(X, y);
  return smo.solve(tau / static_cast<double>(X.cols()), opts, nullptr);
}

inline SvmFit solve_soft_margin_svm(const Dataset& data, double tau, const SmoOptions& opts = {}) {
  return solve_soft_margin_svm(data.features, data.labels, tau, opts);
}

struct HardMarginOptions {
  int max_level = 8;            // penalties tau_k = 10^k p, k = 0..max_level
  double hinge_tol = 1e-6;
  double bound_tol = 1e-9;
  double kkt_tol = 1e-10;
  long epochs_per_level = 50;
};

/// Hard-margin SVM by penalty escalation. Status Infeasible when every level keeps a
/// dual variable at its box bound or leaves positive hinge loss.
inline SvmFit solve_hard_margin_svm(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                                    const HardMarginOptions& opts = {}) {
  detail::check_problem(X, y);
  detail::SmoSolver smo(X, y);
  SmoOptions level_opts{opts.kkt_tol, opts.epochs_per_level};
  SvmFit fit;
  Eigen::VectorXd warm;
  long total_iter = 0;
  for (int k = 0; k <= opts.max_level; ++k) {
    const double C = std::pow(10.0, k);
    fit = smo.solve(C, level_opts, warm.size() > 0 ? &warm : nullptr);
    total_iter += fit.iterations;
    const bool at_bound = (fit.dual_vars.array() >= C - opts.bound_tol).any();
    if (!at_bound && fit.hinge_total <= opts.hinge_tol && fit.status == SolveStatus::Optimal) {
      fit.iterations = total_iter;
      return fit;
    }
    // Bounded duals grow with the penalty when the data are not separable.
    warm = at_bound ? Eigen::VectorXd(fit.dual_vars * 10.0) : fit.dual_vars;
  }
  fit.iterations = total_iter;
  fit.status = SolveStatus::Infeasible;
  return fit;
}

inline SvmFit solve_hard_margin_svm(const Dataset& data, const HardMarginOptions& opts = {}) {
  return solve_hard_margin_svm(data.features, data.labels, opts);
}

/// Population error of the classifier sign(w'x + b) under the data's mixture.
inline ErrorRates exact_error(const Eigen::VectorXd& w, double b, const Eigen::VectorXd& mu_direction,
                              const ModelParams& params) {
  const double wn = w.norm();
  if (!(wn > 1e-12)) throw Error(ErrorCode::ZeroWeight, "exact_error: ||w|| <= 1e-12");
  const double proj = w.dot(mu_direction) / wn;  // rho_hat * ||mu|| / mu, with unit direction
  const double signal = proj * params.mu / params.sigma;
  const double eta = b / (params.sigma * wn);
  ErrorRates e;
  e.err0 = gauss::q_function(signal - eta);
  e.err1 = gauss::q_function(signal + eta);
  e.total = params.pi0 * e.err0 + params.pi1 * e.err1;
  return e;
}

inline ErrorRates exact_error(const SvmFit& fit, const Dataset& data) {
  return exact_error(fit.w, fit.b, data.mu_direction, data.params);
}

/// max { a'u : u >= 0, ||u|| = theta }.
inline double max_on_nonnegative_sphere(const Eigen::VectorXd& a, double theta) {
  if (!(theta > 0.0) || a.size() == 0) throw Error(ErrorCode::InvalidArgument, "max_on_nonnegative_sphere: need theta > 0");
  const double pos = a.cwiseMax(0.0).norm();
  if (pos > 0.0) return theta * pos;
  return theta * a.maxCoeff();
}

}  // namespace svmasym
