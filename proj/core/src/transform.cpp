#include "rbmq/transform.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace rbmq {

namespace {

constexpr double kRemovableRadius = 1e-8;
constexpr double kPoleTolerance = 1e-12;
constexpr double kPoleMinRadius = 1e-6;

const ModelParams& checked(const ModelParams& p) {
  p.require_orthogonal_reflection("explicit Laplace transforms");
  return p;
}

}  // namespace

BoundaryTransform::BoundaryTransform(const ModelParams& p)
    : params_(checked(p)),
      scalars_(derived_scalars(p)),
      order_(ChebyshevOrder::real(std::numbers::pi / scalars_.beta)),
      centre_(0.5 * (scalars_.theta2_plus + scalars_.theta2_minus)),
      half_width_(0.5 * (scalars_.theta2_plus - scalars_.theta2_minus)) {
  // x(0) lies strictly inside (-1, 1) because theta2^- < 0 < theta2^+.
  const double x0 = centre_ / half_width_;
  const double dx = -1.0 / half_width_;
  w0_ = cheb_T(order_, x0);
  const double t1 = cheb_T_deriv(order_, cplx{x0, 0.0}).real();
  w_prime0_ = dx * t1;
  // Chebyshev equation: (1 - x^2) T'' = x T' - a^2 T.
  const double a = order_.value();
  w_second0_ = dx * dx * (x0 * t1 - a * a * w0_) / (1.0 - x0 * x0);
}

cplx BoundaryTransform::argument(cplx theta2) const { return (centre_ - theta2) / half_width_; }

double BoundaryTransform::w_at_branch_point() const {
  return std::cos(order_.value() * std::numbers::pi);
}

cplx BoundaryTransform::w(cplx theta2) const {
  if (theta2 == cplx{scalars_.theta2_plus, 0.0}) return w_at_branch_point();
  if (theta2.imag() == 0.0 && theta2.real() > scalars_.theta2_plus && !order_.is_integer())
    throw Error(ErrorCode::OnCut, "w evaluated on its cut (theta2^+, inf)");
  return cheb_T(order_, argument(theta2));
}

cplx BoundaryTransform::w_prime(cplx theta2) const {
  return -cheb_T_deriv(order_, argument(theta2)) / half_width_;
}

cplx BoundaryTransform::phi(cplx theta2) const {
  if (std::abs(theta2) < kRemovableRadius) return mass();
  const cplx denom = w(theta2) - w0_;
  if (std::abs(theta2) > kPoleMinRadius &&
      std::abs(denom) < kPoleTolerance * std::abs(w_prime0_ * theta2)) {
    throw PoleError(theta2, 1, "phi has a simple pole where w(theta2) = w(0)");
  }
  return -params_.m1() * w_prime0_ * theta2 / denom;
}

cplx BoundaryTransform::phi_prime(cplx theta2) const {
  if (std::abs(theta2) < kRemovableRadius) {
    // phi = -mu1 / (1 + (w''(0) / 2w'(0)) theta2 + ...)
    return params_.m1() * w_second0_ / (2.0 * w_prime0_);
  }
  const cplx denom = w(theta2) - w0_;
  return -params_.m1() * w_prime0_ * (denom - theta2 * w_prime(theta2)) / (denom * denom);
}

cplx BoundaryTransform::psi(cplx theta2) const {
  if (theta2 == cplx{0.0, 0.0}) throw Error(ErrorCode::AtZero, "psi has its simple pole at 0");
  return phi(theta2) / theta2;
}

TransformBundle::TransformBundle(const ModelParams& p) : side1_(p), side2_(p.swapped()) {}

cplx TransformBundle::phi_eval(cplx theta1, cplx theta2) const {
  if (std::abs(theta1) < kRemovableRadius && std::abs(theta2) < kRemovableRadius) return 1.0;
  const ModelParams& p = params();
  const cplx g = kernel::gamma(p, theta1, theta2);
  if (std::abs(g) <= 1e-13 * kernel::gamma_scale(p, theta1, theta2)) {
    throw Error(ErrorCode::OnKernelCurve, "phi is a 0/0 limit on the kernel zero set");
  }
  return -(theta1 * phi1_eval(theta2) + theta2 * phi2_eval(theta1)) / g;
}

cplx TransformBundle::phi_eval_limit(cplx theta1, cplx theta2, cplx dir1, cplx dir2) const {
  if (std::abs(theta1) < kRemovableRadius && std::abs(theta2) < kRemovableRadius) return 1.0;
  const ModelParams& p = params();
  const cplx dgamma = (p.s11() * theta1 + p.s12() * theta2 + p.m1()) * dir1 +
                      (p.s22() * theta2 + p.s12() * theta1 + p.m2()) * dir2;
  if (std::abs(dgamma) == 0.0)
    throw Error(ErrorCode::OnKernelCurve, "direction is tangent to the kernel zero set");
  const cplx dnum = dir1 * side1_.phi(theta2) + theta1 * dir2 * side1_.phi_prime(theta2) +
                    dir2 * side2_.phi(theta1) + theta2 * dir1 * side2_.phi_prime(theta1);
  return -dnum / dgamma;
}

TransformBundle::ContinuationResidual TransformBundle::continuation_check(cplx theta2) const {
  const ModelParams& p = params();
  ContinuationResidual r{};
  r.direct = phi1_eval(theta2);
  if (std::abs(theta2) < kRemovableRadius) {
    // theta2 / Theta1^-(theta2) -> -mu1 / mu2 and phi2(0) = -mu2.
    r.theta1 = 0.0;
    r.continued = -(-p.m1() / p.m2()) * phi2_at_0();
  } else {
    const double dscale = std::abs(p.m1() * p.m1()) + p.det_sigma() * std::norm(theta2);
    if (std::abs(kernel::discriminant_d_tilde(p, theta2)) < 1e-12 * dscale)
      throw Error(ErrorCode::BranchAmbiguity, "theta2 is at a branch point of Theta1");
    r.theta1 = kernel::theta1_branch(p, theta2, kernel::Branch::minus);
    if (theta2.real() > 0.0 && r.theta1.real() >= 0.0)
      throw Error(ErrorCode::OutsideDomain, "theta2 is outside the continuation domain");
    r.continued = -(theta2 / r.theta1) * phi2_eval(r.theta1);
  }
  r.absolute = std::abs(r.direct - r.continued);
  r.relative = r.absolute / std::max(std::abs(r.direct), std::numeric_limits<double>::min());
  return r;
}

}  // namespace rbmq
