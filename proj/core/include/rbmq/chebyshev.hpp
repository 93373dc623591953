#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "rbmq/error.hpp"

namespace rbmq {

/// Non-negative order a of the generalized Chebyshev function
/// T_a(x) = cos(a arccos x), together with what is known about its rationality.
class ChebyshevOrder {
 public:
  /// Exact rational order p/q (q > 0, p >= 0), reduced to lowest terms.
  static ChebyshevOrder rational(std::int64_t p, std::int64_t q);
  /// Floating order with no rationality certificate. Values within 1e-12 of
  /// an integer are treated as that integer and flagged by snapped().
  static ChebyshevOrder real(double a);

  double value() const { return value_; }
  bool is_integer() const { return integer_.has_value(); }
  std::optional<std::int64_t> integer() const { return integer_; }
  /// (p, q) when the order is known to be rational.
  std::optional<std::pair<std::int64_t, std::int64_t>> ratio() const { return ratio_; }
  bool snapped() const { return snapped_; }

 private:
  ChebyshevOrder() = default;
  double value_ = 0.0;
  std::optional<std::int64_t> integer_;
  std::optional<std::pair<std::int64_t, std::int64_t>> ratio_;
  bool snapped_ = false;
};

enum class CutSide { above, below };

/// T_a on C \ (-inf, -1]; entire for integer orders. Throws OnCut for real
/// x < -1 and non-integer a.
cplx cheb_T(const ChebyshevOrder& a, cplx x);
double cheb_T(const ChebyshevOrder& a, double x);
/// Boundary value of T_a on the cut: limit from x + i0 (above) or x - i0.
cplx cheb_T_on_cut(const ChebyshevOrder& a, double x, CutSide side);

/// dT_a/dx. Throws AtBranchPoint at x = -1 for non-integer a; at x = 1 the
/// function is analytic and the limit a^2 is returned.
cplx cheb_T_deriv(const ChebyshevOrder& a, cplx x);

/// T_a(x) = c0 + c1 sqrt(x + 1) + O(x + 1) near x = -1.
struct MinusOneExpansion {
  double c0;
  double c1;
};

/// Throws IntegerOrder for integer a (the square-root term vanishes).
MinusOneExpansion expansion_at_minus_one(const ChebyshevOrder& a);

enum class Nature { rational_polynomial, algebraic_nonpolynomial, transcendental_D_finite };

const char* to_string(Nature n);

/// Integer order: polynomial. Certified rational order: algebraic. Otherwise
/// (no certificate) the order is taken as irrational: D-finite, not algebraic.
Nature classify_nature(const ChebyshevOrder& a);

/// Independent evaluation through 2F1(-a, a; 1/2; (1 - x)/2), |1 - x| < 2.
cplx cheb_T_hypergeometric(double a, cplx x, int max_terms = 2000);

}  // namespace rbmq
