#include "rbmq/closed_form.hpp"

#include <cmath>

namespace rbmq {

namespace {

const ModelParams& diagonal(const ModelParams& p) {
  p.require_orthogonal_reflection("diagonal closed forms");
  if (!p.diagonal_covariance()) throw Error(ErrorCode::NotDiagonal, "closed forms need sigma12 = 0");
  return p;
}

}  // namespace

DiagonalClosedForms::DiagonalClosedForms(const ModelParams& p)
    : params_(diagonal(p)), r1_(-2.0 * p.m1() / p.s11()), r2_(-2.0 * p.m2() / p.s22()) {}

double DiagonalClosedForms::pi(double x1, double x2) const {
  return r1_ * r2_ * std::exp(-r1_ * x1 - r2_ * x2);
}

double DiagonalClosedForms::nu1(double x2) const {
  return 2.0 * params_.m1() * params_.m2() / params_.s22() * std::exp(-r2_ * x2);
}

double DiagonalClosedForms::nu2(double x1) const {
  return 2.0 * params_.m1() * params_.m2() / params_.s11() * std::exp(-r1_ * x1);
}

cplx DiagonalClosedForms::phi(cplx theta1, cplx theta2) const {
  return phi_one_dimensional(params_.m1(), params_.s11(), theta1) *
         phi_one_dimensional(params_.m2(), params_.s22(), theta2);
}

cplx DiagonalClosedForms::phi1(cplx theta2) const {
  return -(2.0 * params_.m1() * params_.m2() / params_.s22()) / (theta2 - r2_);
}

cplx DiagonalClosedForms::phi2(cplx theta1) const {
  return -(2.0 * params_.m1() * params_.m2() / params_.s11()) / (theta1 - r1_);
}

cplx phi_one_dimensional(double mu, double sigma, cplx theta) {
  const double c = 2.0 * mu / sigma;
  return c / (theta + c);
}

}  // namespace rbmq
