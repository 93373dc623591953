#include "rbmq/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace rbmq {

const char* to_string(Regime r) {
  switch (r) {
    case Regime::saddle_neg: return "saddle_neg";
    case Regime::boundary_zero: return "boundary_zero";
    case Regime::pole_dominant: return "pole_dominant";
  }
  return "?";
}

namespace {

Regime regime_of(const ModelParams& p, double t1) {
  const double tol = 1e-10 * (1.0 + std::abs(p.m1()) / p.s11());
  if (std::abs(t1) < tol) return Regime::boundary_zero;
  return t1 < 0.0 ? Regime::saddle_neg : Regime::pole_dominant;
}

}  // namespace

double pole_residue(const ModelParams& p) {
  return (2.0 * p.m1() * p.m2() - 4.0 * p.s12() * p.m2() * p.m2() / p.s22()) / p.s22();
}

BoundaryConstants constants_C1_C2(const BoundaryTransform& side) {
  const ModelParams& p = side.params();
  const ChebyshevOrder& order = side.order();
  if (order.is_integer())
    throw Error(ErrorCode::IntegerExponent,
                "pi/beta is an integer; sin(pi^2/beta) vanishes and C1, C2 are undefined");
  const double t1 = kernel::theta1_at_branch_point(p);
  const Regime regime = regime_of(p, t1);
  if (regime == Regime::pole_dominant)
    throw Error(ErrorCode::WrongRegime, "C1 and C2 describe the branch-point regimes only");

  const DerivedScalars& s = side.scalars();
  const double a = order.value();
  const double sin_term = 2.0 * a * std::sin(a * std::numbers::pi);
  const double root_delta = std::sqrt(s.theta2_plus - s.theta2_minus);
  BoundaryConstants c{};
  c.applicable = regime;
  c.C2 = -p.m1() * side.w_prime0() * s.theta2_plus * root_delta / sin_term;
  if (regime == Regime::saddle_neg) {
    const double phi_plus = side.phi(s.theta2_plus).real();
    c.C1 = -phi_plus * sin_term / ((side.w_at_branch_point() - side.w0()) * root_delta);
  } else {
    c.C1 = std::numeric_limits<double>::quiet_NaN();
  }
  return c;
}

AsymptoticReport classify_regime(const BoundaryTransform& side) {
  const ModelParams& p = side.params();
  AsymptoticReport r{};
  r.theta1_at_branch = kernel::theta1_at_branch_point(p);
  r.regime = regime_of(p, r.theta1_at_branch);
  const double theta2_plus = side.scalars().theta2_plus;
  switch (r.regime) {
    case Regime::pole_dominant: {
      const double pole = -2.0 * p.m2() / p.s22();
      r.decay_rate = pole;
      r.power = 0.0;
      r.constant = pole_residue(p);
      r.pole_location = pole;
      break;
    }
    case Regime::saddle_neg: {
      const BoundaryConstants c = constants_C1_C2(side);
      r.decay_rate = theta2_plus;
      r.power = -1.5;
      r.constant = -c.C1 / (2.0 * std::sqrt(std::numbers::pi));
      break;
    }
    case Regime::boundary_zero: {
      const BoundaryConstants c = constants_C1_C2(side);
      r.decay_rate = theta2_plus;
      r.power = -0.5;
      r.constant = c.C2 / std::sqrt(std::numbers::pi);
      r.pole_location = theta2_plus;
      r.notes.push_back("Theta1(theta2^+) within tolerance of 0: classified as boundary_zero");
      break;
    }
  }
  return r;
}

double dominant_singularity(const BoundaryTransform& side) {
  const ModelParams& p = side.params();
  if (regime_of(p, kernel::theta1_at_branch_point(p)) == Regime::pole_dominant)
    return -2.0 * p.m2() / p.s22();
  return side.scalars().theta2_plus;
}

double nu1_tail(const AsymptoticReport& report, double x2) {
  if (!(x2 > 0.0)) throw Error(ErrorCode::OutsideDomain, "nu1_tail needs x2 > 0");
  return report.constant * std::pow(x2, report.power) * std::exp(-report.decay_rate * x2);
}

}  // namespace rbmq
