#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "rbmq/asymptotics.hpp"
#include "rbmq/chebyshev.hpp"
#include "rbmq/cli/cli.hpp"
#include "rbmq/closed_form.hpp"
#include "rbmq/inversion.hpp"
#include "rbmq/io.hpp"
#include "rbmq/kernel.hpp"
#include "rbmq/transform.hpp"
#include "rbmq/uniformization.hpp"

namespace rbmq::cli {

namespace {

using std::numbers::pi;

double rel(cplx got, cplx want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

// Worst value of `residual` over n draws compared with `tol`.
CheckOutcome worst_case(const std::string& name, int n, double tol, const std::function<double(int)>& residual) {
  double worst = 0;
  for (int i = 0; i < n; ++i) worst = std::max(worst, residual(i));
  return {name, worst <= tol, false, "max residual " + format_double(worst) + " (tol " + format_double(tol) + ")"};
}

std::vector<cplx> curve_points(const ModelParams& p, int n) {
  const double t1m = derived_scalars(p).theta1_minus;
  std::vector<cplx> pts;
  for (int k = 0; k < n / 2; ++k) {
    const cplx up = kernel::theta2_branch(p, t1m - std::pow(10.0, -3.0 + 5.0 * k / (n / 2 - 1)), kernel::Branch::plus);
    pts.push_back(up);
    pts.push_back(std::conj(up));
  }
  return pts;
}

}  // namespace

ModelParams random_ergodic_model(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> var(0.5, 2.0), corr(-0.9, 0.9), drift(-2.0, -0.2);
  const double s11 = var(rng), s22 = var(rng);
  const double s12 = corr(rng) * std::sqrt(s11 * s22);
  return ModelParams::validate({{{s11, s12}, {s12, s22}}}, {drift(rng), drift(rng)});
}

std::vector<CheckOutcome> run_checks(const ModelParams& p, std::uint64_t seed) {
  std::vector<CheckOutcome> out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  auto random_s = [&] { return std::polar(std::pow(10.0, 1.5 * u(rng)), pi * u(rng)); };
  const DerivedScalars d = derived_scalars(p);

  out.push_back(worst_case("branch points are discriminant roots", 1, 1e-10, [&](int) {
    const double s = 1 + d.theta2_plus * d.theta2_plus + d.theta1_plus * d.theta1_plus;
    return std::max({std::abs(kernel::discriminant_d_tilde(p, d.theta2_plus)),
                     std::abs(kernel::discriminant_d_tilde(p, d.theta2_minus)),
                     std::abs(kernel::discriminant_d(p, d.theta1_plus)),
                     std::abs(kernel::discriminant_d(p, d.theta1_minus))}) / s;
  }));
  out.push_back(worst_case("kernel branches solve gamma = 0", 1000, 1e-10, [&](int) {
    const cplx t(5 * u(rng), 5 * u(rng));
    const cplx a = kernel::theta2_branch(p, t, kernel::Branch::plus);
    const cplx b = kernel::theta1_branch(p, t, kernel::Branch::minus);
    return std::max(std::abs(kernel::gamma(p, t, a)) / kernel::gamma_scale(p, t, a),
                    std::abs(kernel::gamma(p, b, t)) / kernel::gamma_scale(p, b, t));
  }));
  out.push_back(worst_case("uniformization parametrizes the kernel", 1000, 1e-10, [&](int) {
    const ThetaPair t = theta_of_s(p, random_s());
    return std::abs(kernel::gamma(p, t.theta1, t.theta2)) / kernel::gamma_scale(p, t.theta1, t.theta2);
  }));
  out.push_back(worst_case("zeta and eta preserve theta1 and theta2", 1000, 1e-12,
                           [&](int) { return group_invariance_residual(p, random_s()); }));
  out.push_back(worst_case("Chebyshev composition law", 1000, 1e-12, [&](int) {
    const double x = u(rng), a = 4 + 4 * u(rng);
    const long double t = std::acos(static_cast<long double>(x));
    return std::abs(cheb_T(ChebyshevOrder::real(a), x) - static_cast<double>(std::cos(a * t)));
  }));

  if (!p.orthogonal_reflection()) {
    out.push_back({"explicit transform invariants", false, true, "reflection matrix is not the identity"});
    return out;
  }

  const TransformBundle b(p);
  // Mean value over a circle inside the disc of analyticity.
  out.push_back(worst_case("phi1(0) = -mu1 and phi2(0) = -mu2 as limits", 2, 1e-10, [&](int i) {
    const BoundaryTransform& side = i == 0 ? b.side1() : b.side2();
    const double radius = 0.5 * dominant_singularity(side);
    cplx mean = 0.0;
    for (int k = 0; k < 64; ++k) mean += side.phi(std::polar(radius, pi * (k + 0.5) / 32));
    return rel(mean / 64.0, side.mass());
  }));
  const std::vector<cplx> curve = curve_points(p, 200);
  out.push_back(worst_case("psi1 takes conjugate-equal values on R", 200, 1e-9, [&](int i) {
    return rel(b.psi1_eval(curve[i]), b.psi1_eval(std::conj(curve[i])));
  }));
  out.push_back(worst_case("w glues conjugate points of R", 200, 1e-10, [&](int i) {
    return rel(b.w_eval(curve[i]), b.w_eval(std::conj(curve[i])));
  }));
  out.push_back(worst_case("psi1(Theta2(theta1)) + psi2(theta1) = 0", 200, 1e-9, [&](int k) {
    const double t1 = d.theta1_minus - std::pow(10.0, -3.0 + 5.0 * k / 199.0);
    const cplx psi2 = b.psi2_eval(t1);
    return std::abs(b.psi1_eval(kernel::theta2_branch(p, t1, kernel::Branch::plus)) + psi2) / std::abs(psi2);
  }));
  out.push_back(worst_case("continuation of phi1 through phi2", 100, 1e-9, [&](int) {
    return b.continuation_check(cplx(-10 * std::abs(u(rng)) - 1e-3, 10 * u(rng))).relative;
  }));
  out.push_back(worst_case("w(theta2(s)) = W(s) on the lifted cone", 100, 1e-10, [&](int) {
    const cplx s = std::polar(std::pow(10.0, 1.5 * u(rng)), pi + d.beta * (0.5 + 0.49 * u(rng)));
    return rel(b.w_eval(theta_of_s(p, s).theta2), W_of_s(p, s));
  }));
  out.push_back(worst_case("phi1 real and positive below its first singularity", 100, 0.0, [&](int k) {
    const double top = dominant_singularity(b.side1());
    const cplx v = b.phi1_eval(-50.0 + (top + 50.0) * k / 100.0);
    return v.real() > 0 && std::abs(v.imag()) <= 1e-12 * v.real() ? 0.0 : 1.0;
  }));
  for (const BoundaryTransform* s : {&b.side1(), &b.side2()}) {
    const AsymptoticReport r = classify_regime(*s);
    const bool ok = r.constant > 0 && r.decay_rate > 0 && std::isfinite(r.constant);
    out.push_back({std::string("positive tail constant, boundary ") + (s == &b.side1() ? "1" : "2"), ok, false,
                   std::string(to_string(r.regime)) + ", constant " + format_double(r.constant)});
  }
  {
    // Log-spaced grid; near 0 the density behaves like x^(a - 2), which fixes the head.
    const double top = 30.0 / classify_regime(b).decay_rate, bottom = 1e-8;
    std::vector<double> grid;
    for (int i = 0; i < 2000; ++i) grid.push_back(bottom * std::pow(top / bottom, i / 1999.0));
    const DensityTable t = invert_transform(b, BoundarySide::nu1, grid);
    double mass = grid[0] * t.values[0] / (b.order().value() - 1.0);
    for (std::size_t i = 1; i < grid.size(); ++i)
      mass += 0.5 * std::log(grid[i] / grid[i - 1]) * (grid[i] * t.values[i] + grid[i - 1] * t.values[i - 1]);
    const double r = std::abs(mass / -p.m1() - 1.0);
    out.push_back({"inverted nu1 has total mass -mu1", r < 5e-3, false, "relative gap " + format_double(r)});
  }
  if (p.diagonal_covariance()) {
    const DiagonalClosedForms f(p);
    out.push_back(worst_case("diagonal closed form of phi", 25, 1e-12, [&](int k) {
      const double t1 = -0.5 * (k % 5), t2 = -0.5 * (k / 5);
      return rel(b.phi_eval(t1, t2), f.phi(t1, t2));
    }));
  }
  return out;
}

}  // namespace rbmq::cli
