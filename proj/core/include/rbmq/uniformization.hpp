#pragma once

#include <cstdint>
#include <optional>

#include "rbmq/chebyshev.hpp"
#include "rbmq/model.hpp"

namespace rbmq {

/// Point of the Riemann sphere; `infinite` stands for s = infinity.
struct SpherePoint {
  cplx s;
  bool infinite = false;
};

struct ThetaPair {
  cplx theta1;
  cplx theta2;
};

/// Rational parametrization of {gamma = 0}:
///   theta1(s) = m1 + (d1/4)(s + 1/s),  theta2(s) = m2 + (d2/4)(s e^{-i beta} + e^{i beta}/s)
/// with m_i, d_i the centre and width of [theta_i^-, theta_i^+].
/// Throws AtZeroOrInfinity for s = 0 or the point at infinity.
ThetaPair theta_of_s(const ModelParams& p, SpherePoint s);
inline ThetaPair theta_of_s(const ModelParams& p, cplx s) { return theta_of_s(p, SpherePoint{s}); }

/// The unit-circle parameter of the kernel point (0, 0).
SpherePoint s0(const ModelParams& p);

/// W(s) = -((-s)^a + (-s)^{-a}) / 2, a = pi/beta, principal logarithm.
/// Throws OnLogCut for s in [0, inf).
cplx W_of_s(const ChebyshevOrder& a, cplx s);
cplx W_of_s(const ModelParams& p, cplx s);

/// Sector arg s in (pi, pi + beta), the lift of G_R on which w(theta2(s)) = W(s).
bool in_lifted_cone(const ModelParams& p, cplx s);

struct GroupElements {
  cplx zeta;  // 1/s
  cplx eta;   // e^{2 i beta}/s
};

GroupElements group_elements(const ModelParams& p, cplx s);

/// max(|theta1(zeta s) - theta1(s)|, |theta2(eta s) - theta2(s)|), relative.
double group_invariance_residual(const ModelParams& p, cplx s);

struct GroupReport {
  bool finite;
  std::optional<std::int64_t> order;  // 2p when pi/beta = p/q
  std::int64_t p;                     // best convergent p/q of pi/beta
  std::int64_t q;
  double residual;                    // |pi/beta - p/q|
  std::int64_t qmax;

  /// Exact rational order when finite, otherwise the floating value.
  ChebyshevOrder chebyshev_order(double a) const;
};

/// Continued-fraction detection of pi/beta = p/q with residual < 1e-12/q^2
/// and q <= qmax; "infinite" means no such convergent within the bound.
GroupReport group_order(const ModelParams& p, std::int64_t qmax = 1'000'000);
GroupReport group_order_of(double a, std::int64_t qmax = 1'000'000);

/// Finite group: algebraic (rational for integer pi/beta). Otherwise D-finite.
Nature classify_solution_nature(const ModelParams& p, const GroupReport& g);

}  // namespace rbmq
