#pragma once

#include <cmath>
#include <iosfwd>
#include <string>
#include <vector>

#include "rbmq/transform.hpp"

namespace rbmq {

enum class InversionMethod { talbot, gaver_stehfest, closed_form };
enum class BoundarySide { nu1, nu2 };

const char* to_string(InversionMethod m);

struct DensityTable {
  std::vector<double> grid;
  std::vector<double> values;
  InversionMethod method;
  /// The inverter works on e^{tilt x} nu(x); tilted[i] = e^{tilt grid[i]} values[i].
  double tilt = 0.0;
  std::vector<double> tilted;
  /// Largest relative gap to the Gaver-Stehfest cross-check.
  double cross_check_gap = 0.0;
};

struct InversionOptions {
  int talbot_nodes = 64;
  int stehfest_order = 14;
  double max_disagreement = 0.01;
  bool cross_check = true;
};

/// Density of nu1 (over x2) or nu2 (over x1) on a strictly increasing
/// positive grid. Throws ContourCollision when a contour node meets a pole
/// and MethodDisagreement when the two inverters differ by more than the
/// allowed relative gap.
DensityTable invert_transform(const TransformBundle& bundle, BoundarySide side,
                              const std::vector<double>& grid, const InversionOptions& opt = {});

/// Plain inverters of F(z) = int_0^inf e^{-z t} f(t) dt.
template <class F>
cplx talbot(F&& transform, double t, int nodes);
template <class F>
double gaver_stehfest(F&& transform, double t, int order);

/// Stehfest weights V_1..V_order (order even).
std::vector<double> stehfest_weights(int order);

/// CSV with header x,density,tilted.
void write_csv(std::ostream& os, const DensityTable& table);

template <class F>
cplx talbot(F&& transform, double t, int nodes) {
  // Optimized contour z(u) = (N/t)(s + m u cot(a u) + i n u), u in (-pi, pi).
  constexpr double s = -0.6122, m = 0.5017, a = 0.6407, n = 0.2645;
  constexpr double pi = 3.14159265358979323846;
  const double scale = nodes / t;
  cplx sum = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const double u = -pi + (k + 0.5) * 2.0 * pi / nodes;
    const double cot = 1.0 / std::tan(a * u);
    const double sn = std::sin(a * u);
    const cplx z = scale * cplx{s + m * u * cot, n * u};
    const cplx dz = scale * cplx{m * cot - m * a * u / (sn * sn), n};
    sum += std::exp(z * t) * transform(z) * dz;
  }
  return sum / cplx{0.0, static_cast<double>(nodes)};
}

template <class F>
double gaver_stehfest(F&& transform, double t, int order) {
  const std::vector<double> v = stehfest_weights(order);
  const double ln2t = 0.69314718055994530942 / t;
  double sum = 0.0;
  for (int k = 1; k <= order; ++k) sum += v[k - 1] * transform(k * ln2t);
  return ln2t * sum;
}

}  // namespace rbmq
