#include "rbmq/uniformization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rbmq {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite_nonzero(const SpherePoint& s) {
  if (s.infinite || s.s == cplx{0.0, 0.0})
    throw Error(ErrorCode::AtZeroOrInfinity, "s = 0 and s = infinity map to the point at infinity");
}

}  // namespace

ThetaPair theta_of_s(const ModelParams& p, SpherePoint sp) {
  require_finite_nonzero(sp);
  const DerivedScalars d = derived_scalars(p);
  const cplx s = sp.s;
  const cplx e = std::polar(1.0, d.beta);
  const double m1 = 0.5 * (d.theta1_plus + d.theta1_minus);
  const double m2 = 0.5 * (d.theta2_plus + d.theta2_minus);
  const double q1 = 0.25 * (d.theta1_plus - d.theta1_minus);
  const double q2 = 0.25 * (d.theta2_plus - d.theta2_minus);
  return {m1 + q1 * (s + 1.0 / s), m2 + q2 * (s / e + e / s)};
}

SpherePoint s0(const ModelParams& p) {
  const DerivedScalars d = derived_scalars(p);
  // theta1(s) = 0 on the unit circle: s + 1/s = 2 cos(alpha).
  const double c = -(d.theta1_plus + d.theta1_minus) / (d.theta1_plus - d.theta1_minus);
  const double alpha = std::acos(std::clamp(c, -1.0, 1.0));
  const cplx up = std::polar(1.0, alpha);
  const cplx down = std::polar(1.0, -alpha);
  const double r_up = std::abs(theta_of_s(p, up).theta2);
  const double r_down = std::abs(theta_of_s(p, down).theta2);
  return {r_down <= r_up ? down : up};
}

cplx W_of_s(const ChebyshevOrder& a, cplx s) {
  if (s.imag() == 0.0 && s.real() >= 0.0)
    throw Error(ErrorCode::OnLogCut, "W needs -s off the principal logarithm cut");
  return -std::cosh(a.value() * std::log(-s));
}

cplx W_of_s(const ModelParams& p, cplx s) {
  return W_of_s(ChebyshevOrder::real(kPi / derived_scalars(p).beta), s);
}

bool in_lifted_cone(const ModelParams& p, cplx s) {
  if (s == cplx{0.0, 0.0}) return false;
  double arg = std::arg(s);
  if (arg < 0.0) arg += 2.0 * kPi;
  return arg > kPi && arg < kPi + derived_scalars(p).beta;
}

GroupElements group_elements(const ModelParams& p, cplx s) {
  require_finite_nonzero(SpherePoint{s});
  return {1.0 / s, std::polar(1.0, 2.0 * derived_scalars(p).beta) / s};
}

double group_invariance_residual(const ModelParams& p, cplx s) {
  const GroupElements g = group_elements(p, s);
  const ThetaPair t = theta_of_s(p, s);
  const double r1 = std::abs(theta_of_s(p, g.zeta).theta1 - t.theta1) / (1.0 + std::abs(t.theta1));
  const double r2 = std::abs(theta_of_s(p, g.eta).theta2 - t.theta2) / (1.0 + std::abs(t.theta2));
  return std::max(r1, r2);
}

ChebyshevOrder GroupReport::chebyshev_order(double a) const {
  return finite ? ChebyshevOrder::rational(p, q) : ChebyshevOrder::real(a);
}

GroupReport group_order_of(double a, std::int64_t qmax) {
  GroupReport r{false, std::nullopt, 0, 1, 0.0, qmax};
  // Convergents h_k / k_k of the continued fraction of a.
  std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(a));
  std::int64_t k_prev = 0, k = 1;
  double frac = a - std::floor(a);
  r.p = h;
  r.q = k;
  r.residual = std::abs(a - static_cast<double>(h));
  for (;;) {
    const double qd = static_cast<double>(k);
    const double residual = std::abs(a - static_cast<double>(h) / qd);
    r.p = h;
    r.q = k;
    r.residual = residual;
    if (residual < 1e-12 / (qd * qd)) {
      r.finite = true;
      // zeta eta rotates by 2 beta = 2 pi q / p; its order is p.
      r.order = 2 * h;
      return r;
    }
    if (frac == 0.0) return r;
    const double inv = 1.0 / frac;
    const double digit = std::floor(inv);
    frac = inv - digit;
    if (digit > 1e12) return r;
    const auto ai = static_cast<std::int64_t>(digit);
    const std::int64_t k_next = ai * k + k_prev;
    if (k_next > qmax) return r;
    const std::int64_t h_next = ai * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
}

GroupReport group_order(const ModelParams& p, std::int64_t qmax) {
  return group_order_of(kPi / derived_scalars(p).beta, qmax);
}

Nature classify_solution_nature(const ModelParams& p, const GroupReport& g) {
  return classify_nature(g.chebyshev_order(kPi / derived_scalars(p).beta));
}

}  // namespace rbmq
