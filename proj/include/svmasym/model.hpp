#pragma once

#include <cmath>

#include "svmasym/errors.hpp"

namespace svmasym {

/// Population statistics of the two-class isotropic Gaussian mixture.
/// Class k has mean (2k - 1) mu * e and covariance sigma^2 I; n/p -> delta.
struct ModelParams {
  double mu = 1.0;     // limit of the mean norm
  double sigma = 1.0;  // noise standard deviation
  double delta = 1.0;  // samples per dimension
  double pi0 = 0.5;
  double pi1 = 0.5;

  static ModelParams balanced(double mu, double sigma, double delta) { return {mu, sigma, delta, 0.5, 0.5}; }

  static ModelParams with_pi1(double mu, double sigma, double delta, double pi1) {
    return {mu, sigma, delta, 1.0 - pi1, pi1};
  }

  void validate() const {
    const bool finite = std::isfinite(mu) && std::isfinite(sigma) && std::isfinite(delta) && std::isfinite(pi0) &&
                        std::isfinite(pi1);
    if (!finite) throw Error(ErrorCode::InvalidArgument, "model parameters must be finite");
    if (mu < 0.0) throw Error(ErrorCode::InvalidArgument, "mu must be >= 0");
    if (sigma <= 0.0) throw Error(ErrorCode::InvalidArgument, "sigma must be > 0");
    if (delta <= 0.0) throw Error(ErrorCode::InvalidArgument, "delta must be > 0");
    if (!(pi0 > 0.0 && pi0 < 1.0 && pi1 > 0.0 && pi1 < 1.0)) {
      throw Error(ErrorCode::InvalidArgument, "class priors must lie in (0, 1)");
    }
    if (std::abs(pi0 + pi1 - 1.0) > 1e-12) throw Error(ErrorCode::InvalidArgument, "pi0 + pi1 must equal 1");
  }

  double snr() const { return mu / sigma; }
};

/// Per-class and total misclassification rates.
struct ErrorRates {
  double err0 = 0.0;
  double err1 = 0.0;
  double total = 0.0;
};

}  // namespace svmasym
