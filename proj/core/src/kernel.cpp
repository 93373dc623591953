#include "rbmq/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rbmq::kernel {

cplx gamma(const ModelParams& p, cplx t1, cplx t2) {
  return 0.5 * (p.s11() * t1 * t1 + p.s22() * t2 * t2 + 2.0 * p.s12() * t1 * t2) + p.m1() * t1 +
         p.m2() * t2;
}

cplx gamma1(const ModelParams& p, cplx t1, cplx t2) { return p.r()[0][0] * t1 + p.r()[1][0] * t2; }

cplx gamma2(const ModelParams& p, cplx t1, cplx t2) { return p.r()[0][1] * t1 + p.r()[1][1] * t2; }

double gamma_scale(const ModelParams& p, cplx t1, cplx t2) {
  const double entries = std::max({std::abs(p.s11()), std::abs(p.s12()), std::abs(p.s22()),
                                   std::hypot(p.m1(), p.m2())});
  return (1.0 + std::norm(t1) + std::norm(t2)) * entries;
}

bool is_kernel_point(const ModelParams& p, const KernelPoint& pt, double rel_tol) {
  return std::abs(gamma(p, pt.theta1, pt.theta2)) <= rel_tol * gamma_scale(p, pt.theta1, pt.theta2);
}

KernelCoeffs coeffs_in_theta2(const ModelParams& p, cplx t1) {
  return {0.5 * p.s22(), p.s12() * t1 + p.m2(), 0.5 * p.s11() * t1 * t1 + p.m1() * t1};
}

KernelCoeffs coeffs_in_theta1(const ModelParams& p, cplx t2) {
  return {0.5 * p.s11(), p.s12() * t2 + p.m1(), 0.5 * p.s22() * t2 * t2 + p.m2() * t2};
}

cplx discriminant_d(const ModelParams& p, cplx t1) {
  const double q = p.s12() * p.s12() - p.s11() * p.s22();
  return t1 * t1 * q + 2.0 * t1 * (p.m2() * p.s12() - p.m1() * p.s22()) + p.m2() * p.m2();
}

cplx discriminant_d_tilde(const ModelParams& p, cplx t2) {
  const double q = p.s12() * p.s12() - p.s11() * p.s22();
  return t2 * t2 * q + 2.0 * t2 * (p.m1() * p.s12() - p.m2() * p.s11()) + p.m1() * p.m1();
}

Discriminants discriminants(const ModelParams& p, cplx t1, cplx t2) {
  return {discriminant_d(p, t1), discriminant_d_tilde(p, t2)};
}

namespace {

double sign_of(Branch b) { return b == Branch::minus ? -1.0 : 1.0; }

}  // namespace

cplx theta2_branch(const ModelParams& p, cplx t1, Branch sign) {
  const KernelCoeffs k = coeffs_in_theta2(p, t1);
  return (-k.b + sign_of(sign) * std::sqrt(discriminant_d(p, t1))) / (2.0 * k.a);
}

cplx theta1_branch(const ModelParams& p, cplx t2, Branch sign) {
  const KernelCoeffs k = coeffs_in_theta1(p, t2);
  return (-k.b + sign_of(sign) * std::sqrt(discriminant_d_tilde(p, t2))) / (2.0 * k.a);
}

std::vector<cplx> track_theta2_branch(const ModelParams& p, std::span<const cplx> path,
                                      Branch start) {
  std::vector<cplx> out;
  out.reserve(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i == 0) {
      out.push_back(theta2_branch(p, path[0], start));
      continue;
    }
    const cplx r1 = theta2_branch(p, path[i], Branch::plus);
    const cplx r2 = theta2_branch(p, path[i], Branch::minus);
    out.push_back(std::abs(r1 - out.back()) <= std::abs(r2 - out.back()) ? r1 : r2);
  }
  return out;
}

double theta1_at_branch_point(const ModelParams& p) {
  return -(p.s12() * derived_scalars(p).theta2_plus + p.m1()) / p.s11();
}

double HyperbolaR::residual(double x, double y) const {
  return cxx * x * x + cyy * y * y + cx * x - rhs;
}

double HyperbolaR::scale(double x, double y) const {
  return std::abs(cxx) * x * x + std::abs(cyy) * y * y + std::abs(cx * x) + std::abs(rhs) +
         std::numeric_limits<double>::min();
}

cplx HyperbolaR::point(double theta1) const {
  const double x = -(s12_ * theta1 + m2_) / s22_;
  const double d = d_a_ * theta1 * theta1 + d_b_ * theta1 + d_c_;
  return {x, std::sqrt(std::max(0.0, -d)) / s22_};
}

HyperbolaR hyperbola(const ModelParams& p) {
  const double s11 = p.s11(), s12 = p.s12(), s22 = p.s22(), m1 = p.m1(), m2 = p.m2();
  const DerivedScalars ds = derived_scalars(p);
  HyperbolaR h{};
  h.cxx = s22 * (s12 * s12 - s11 * s22);
  h.cyy = s12 * s12 * s22;
  h.cx = -2.0 * s22 * (s11 * m2 - s12 * m1);
  h.rhs = m2 * (s11 * m2 - 2.0 * s12 * m1);
  h.theta1_minus = ds.theta1_minus;
  h.apex = -(s12 * ds.theta1_minus + m2) / s22;
  h.degenerate = s12 == 0.0;
  h.vertical_x = -m2 / s22;
  h.s12_ = s12;
  h.s22_ = s22;
  h.m2_ = m2;
  h.d_a_ = s12 * s12 - s11 * s22;
  h.d_b_ = 2.0 * (m2 * s12 - m1 * s22);
  h.d_c_ = m2 * m2;
  return h;
}

namespace {

// Position of theta2 relative to the two branches of the conic. The branch R
// opens away from the focus theta2^+ (to the left when sigma12 < 0, to the
// right when sigma12 > 0); G_R is the side of R containing the focus theta2^-.
struct Side {
  bool inside;
  bool on_curve;
};

Side locate(const ModelParams& p, cplx theta2, double tol) {
  const HyperbolaR h = hyperbola(p);
  const DerivedScalars ds = derived_scalars(p);
  const double x = theta2.real(), y = theta2.imag();
  const double centre = 0.5 * (ds.theta2_plus + ds.theta2_minus);

  if (h.degenerate) {
    const double scale = std::abs(h.vertical_x) + std::abs(ds.theta2_plus - ds.theta2_minus);
    return {x < h.vertical_x && std::abs(x - h.vertical_x) > tol * scale,
            std::abs(x - h.vertical_x) <= tol * scale};
  }

  const double q = h.residual(x, y) / h.scale(x, y);
  const double q_focus = h.residual(ds.theta2_minus, 0.0);  // sign of the conic inside G_R
  const bool same_as_focus = (q > 0.0) == (q_focus > 0.0);
  const bool near = std::abs(q) <= tol;
  if (p.s12() < 0.0) {
    // cos(beta) > 0: R is the left branch, G_R lies between R and the left focus.
    const bool left = x < centre;
    return {left && same_as_focus && !near, left && near};
  }
  // cos(beta) < 0: R is the right branch; G_R is everything left of it.
  const bool right = x > centre;
  return {!right || (!same_as_focus && !near), right && near};
}

}  // namespace

bool contains_G_R(const ModelParams& p, cplx theta2) { return locate(p, theta2, 1e-11).inside; }

bool on_curve(const ModelParams& p, cplx theta2, double tol) { return locate(p, theta2, tol).on_curve; }

GRatio g_ratio(const ModelParams& p, cplx theta2) {
  if (!on_curve(p, theta2)) throw Error(ErrorCode::NotOnCurve, "theta2 is not on the curve R");
  const cplx r_minus = theta1_branch(p, theta2, Branch::minus);
  const cplx r_plus = theta1_branch(p, theta2, Branch::plus);
  const double t =
      (std::abs(r_minus.imag()) <= std::abs(r_plus.imag()) ? r_minus : r_plus).real();
  const cplx conj2 = std::conj(theta2);

  const cplx g1a = gamma1(p, t, theta2), g2a = gamma2(p, t, theta2);
  const cplx g1b = gamma1(p, t, conj2), g2b = gamma2(p, t, conj2);
  const double tiny = 1e-14 * (std::abs(t) + std::abs(theta2));
  if (std::abs(g2a) <= tiny || std::abs(g1b) <= tiny)
    throw Error(ErrorCode::ZeroDenominator, "a reflection factor vanishes on R");

  GRatio g{};
  g.first = g1a / g2a;
  g.second = g2b / g1b;
  g.value = g.first * g.second;
  return g;
}

}  // namespace rbmq::kernel
