#include "rbmq/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace rbmq {

namespace {

constexpr double kIntegerSnap = 1e-12;

// log of the Joukowski-inverse root zeta = x + sqrt(x-1) sqrt(x+1), |zeta| >= 1.
// T_a(x) = cosh(a L) and the principal log places the only cut on (-inf, -1).
cplx joukowski_log(cplx x) { return std::log(x + std::sqrt(x - 1.0) * std::sqrt(x + 1.0)); }

bool on_cut(cplx x) { return x.imag() == 0.0 && x.real() < -1.0; }

cplx cheb_T_integer(std::int64_t n, cplx x) {
  if (n == 0) return 1.0;
  cplx prev = 1.0, cur = x;
  for (std::int64_t k = 1; k < n; ++k) {
    const cplx next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// n U_{n-1}(x)
cplx cheb_T_integer_deriv(std::int64_t n, cplx x) {
  if (n == 0) return 0.0;
  cplx prev = 1.0, cur = 2.0 * x;  // U_0, U_1
  if (n == 1) return 1.0;
  for (std::int64_t k = 2; k < n; ++k) {
    const cplx next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return static_cast<double>(n) * cur;
}

}  // namespace

ChebyshevOrder ChebyshevOrder::rational(std::int64_t p, std::int64_t q) {
  if (q <= 0 || p < 0) throw Error(ErrorCode::InvalidConfig, "Chebyshev order must be p/q >= 0 with q > 0");
  const std::int64_t g = std::gcd(p, q);
  ChebyshevOrder o;
  o.ratio_ = std::pair{p / g, q / g};
  o.value_ = static_cast<double>(p / g) / static_cast<double>(q / g);
  if (q / g == 1) o.integer_ = p / g;
  return o;
}

ChebyshevOrder ChebyshevOrder::real(double a) {
  if (!(a >= 0.0) || !std::isfinite(a)) throw Error(ErrorCode::InvalidConfig, "Chebyshev order must be finite and >= 0");
  ChebyshevOrder o;
  o.value_ = a;
  const double r = std::round(a);
  if (std::abs(a - r) < kIntegerSnap) {
    o.integer_ = static_cast<std::int64_t>(r);
    o.ratio_ = std::pair{*o.integer_, std::int64_t{1}};
    o.snapped_ = a != r;
    o.value_ = r;
  }
  return o;
}

cplx cheb_T(const ChebyshevOrder& a, cplx x) {
  if (a.is_integer()) return cheb_T_integer(*a.integer(), x);
  if (on_cut(x)) throw Error(ErrorCode::OnCut, "T_a evaluated on its cut (-inf, -1)");
  return std::cosh(a.value() * joukowski_log(x));
}

double cheb_T(const ChebyshevOrder& a, double x) {
  if (!a.is_integer() && x >= -1.0 && x <= 1.0) return std::cos(a.value() * std::acos(x));
  return cheb_T(a, cplx{x, 0.0}).real();
}

cplx cheb_T_on_cut(const ChebyshevOrder& a, double x, CutSide side) {
  if (a.is_integer() || x >= -1.0) return cheb_T(a, cplx{x, 0.0});
  const double u = std::acosh(-x);
  const double ap = a.value() * std::numbers::pi;
  const cplx above{std::cos(ap) * std::cosh(a.value() * u), std::sin(ap) * std::sinh(a.value() * u)};
  return side == CutSide::above ? above : std::conj(above);
}

cplx cheb_T_deriv(const ChebyshevOrder& a, cplx x) {
  if (a.is_integer()) return cheb_T_integer_deriv(*a.integer(), x);
  if (x == cplx{-1.0, 0.0}) throw Error(ErrorCode::AtBranchPoint, "T_a' is singular at x = -1");
  if (on_cut(x)) throw Error(ErrorCode::OnCut, "T_a' evaluated on its cut (-inf, -1)");
  if (x == cplx{1.0, 0.0}) return a.value() * a.value();
  const cplx L = joukowski_log(x);
  return a.value() * std::sinh(a.value() * L) / std::sinh(L);
}

MinusOneExpansion expansion_at_minus_one(const ChebyshevOrder& a) {
  if (a.is_integer()) throw Error(ErrorCode::IntegerOrder, "expansion at -1 degenerates for integer order");
  const double ap = a.value() * std::numbers::pi;
  return {std::cos(ap), a.value() * std::numbers::sqrt2 * std::sin(ap)};
}

const char* to_string(Nature n) {
  switch (n) {
    case Nature::rational_polynomial: return "rational_polynomial";
    case Nature::algebraic_nonpolynomial: return "algebraic_nonpolynomial";
    case Nature::transcendental_D_finite: return "transcendental_D_finite";
  }
  return "unknown";
}

Nature classify_nature(const ChebyshevOrder& a) {
  if (a.is_integer()) return Nature::rational_polynomial;
  if (a.ratio()) return Nature::algebraic_nonpolynomial;
  return Nature::transcendental_D_finite;
}

cplx cheb_T_hypergeometric(double a, cplx x, int max_terms) {
  const cplx t = 0.5 * (1.0 - x);
  cplx term = 1.0, sum = 1.0;
  for (int k = 0; k < max_terms; ++k) {
    const double kk = k;
    term *= (-a + kk) * (a + kk) / ((0.5 + kk) * (kk + 1.0)) * t;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace rbmq
