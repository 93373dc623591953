#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbmq/transform.hpp"

namespace rbmq {

enum class Regime { saddle_neg, boundary_zero, pole_dominant };

const char* to_string(Regime r);

/// nu1(x) ~ constant * x^power * exp(-decay_rate * x) as x -> infinity.
struct AsymptoticReport {
  Regime regime;
  double theta1_at_branch;  // Theta1(theta2^+), the regime discriminant
  double decay_rate;
  double power;
  double constant;
  std::optional<double> pole_location;
  std::vector<std::string> notes;
};

struct BoundaryConstants {
  double C1;
  double C2;
  Regime applicable;  // saddle_neg uses C1, boundary_zero uses C2
};

/// Tail of the density of nu1 (for nu2 pass bundle.side2()).
AsymptoticReport classify_regime(const BoundaryTransform& side);
inline AsymptoticReport classify_regime(const TransformBundle& b) {
  return classify_regime(b.side1());
}

/// Throws IntegerExponent when pi/beta is an integer and WrongRegime in the
/// pole-dominated regime.
BoundaryConstants constants_C1_C2(const BoundaryTransform& side);
inline BoundaryConstants constants_C1_C2(const TransformBundle& b) {
  return constants_C1_C2(b.side1());
}

/// Residue K of phi1 at its first pole p = -2 mu2 / sigma22:
/// phi1(theta2) ~ K / (p - theta2). Reduces to 2 mu1 mu2 / sigma22 when
/// sigma12 = 0.
double pole_residue(const ModelParams& p);

/// Abscissa of convergence of phi1: the first pole or theta2^+.
double dominant_singularity(const BoundaryTransform& side);

double nu1_tail(const AsymptoticReport& report, double x2);

}  // namespace rbmq
