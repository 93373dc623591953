#pragma once

#include "rbmq/model.hpp"

namespace rbmq {

/// Reference formulas for diagonal covariance, where the stationary law is a
/// product of exponentials with rates r_i = -2 mu_i / sigma_ii.
class DiagonalClosedForms {
 public:
  /// Throws NotDiagonal when sigma12 != 0; requires the identity reflection.
  explicit DiagonalClosedForms(const ModelParams& p);

  double rate1() const { return r1_; }
  double rate2() const { return r2_; }

  double pi(double x1, double x2) const;
  /// Density of nu1 over x2 and of nu2 over x1.
  double nu1(double x2) const;
  double nu2(double x1) const;

  cplx phi(cplx theta1, cplx theta2) const;
  cplx phi1(cplx theta2) const;
  cplx phi2(cplx theta1) const;

 private:
  ModelParams params_;
  double r1_;
  double r2_;
};

/// Transform of the one-dimensional reflected Brownian motion with drift
/// mu < 0 and variance sigma: (2 mu / sigma) / (theta + 2 mu / sigma).
cplx phi_one_dimensional(double mu, double sigma, cplx theta);

}  // namespace rbmq
