// One line per acceptance criterion; exit status 1 if any line fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "rbmq/asymptotics.hpp"
#include "rbmq/chebyshev.hpp"
#include "rbmq/closed_form.hpp"
#include "rbmq/inversion.hpp"
#include "rbmq/kernel.hpp"
#include "rbmq/simulation.hpp"
#include "rbmq/transform.hpp"
#include "rbmq/uniformization.hpp"
#include "test_support.hpp"

using namespace rbmq;
using rbmq::testing::model;
using rbmq::testing::random_model;
using rbmq::testing::rel_err;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
  bool passed;
  std::string detail;
};

// Tracks the worst observed value of a residual against its tolerance.
struct Worst {
  double value = 0.0;
  void add(double r) { value = std::isnan(r) ? INFINITY : std::max(value, r); }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::vector<ModelParams> models(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ModelParams> out;
  for (int i = 0; i < n; ++i) out.push_back(random_model(rng));
  return out;
}

Outcome diagonal_exactness() {
  std::mt19937_64 rng(101);
  Worst w;
  const double grid[] = {-4.0, -1.5, -0.7, -0.2, 0.0};
  for (int m = 0; m < 10; ++m) {
    const ModelParams p = random_model(rng, true);
    const TransformBundle b(p);
    const double r1 = -2 * p.m1() / p.s11(), r2 = -2 * p.m2() / p.s22();
    for (double t1 : grid)
      for (double t2 : grid) {
        const double exact = (r1 / (r1 - t1)) * (r2 / (r2 - t2));
        w.add(rel_err(b.phi_eval(t1, t2), exact));
      }
  }
  return {w.value <= 1e-12, "max rel " + fmt(w.value) + " over 10 models x 25 points"};
}

// phi_i(0) recovered as the mean of phi_i over a circle around 0.
Outcome mass_identities() {
  Worst w;
  for (const ModelParams& p : models(100, 102)) {
    const TransformBundle b(p);
    for (const BoundaryTransform* s : {&b.side1(), &b.side2()}) {
      const double radius = 0.5 * dominant_singularity(*s);
      const int n = 64;
      std::complex<double> mean = 0.0;
      for (int k = 0; k < n; ++k) mean += s->phi(std::polar(radius, 2 * pi * (k + 0.5) / n));
      mean /= static_cast<double>(n);
      w.add(rel_err(mean, s->mass()));
      w.add(rel_err(s->phi(1e-9), s->mass()));
    }
  }
  return {w.value <= 1e-10, "max rel " + fmt(w.value) + " over 100 models"};
}

std::vector<double> theta1_samples(const ModelParams& p, int n) {
  const double t1m = derived_scalars(p).theta1_minus;
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(t1m - std::pow(10.0, -3.0 + 5.0 * k / (n - 1)));
  return out;
}

Outcome gluing_identities() {
  Worst w;
  for (const ModelParams& p : models(20, 103)) {
    const TransformBundle b(p);
    const kernel::HyperbolaR h = kernel::hyperbola(p);
    for (double t1 : theta1_samples(p, 200)) {
      const std::complex<double> t = h.point(t1);
      w.add(rel_err(b.psi1_eval(std::conj(t)), b.psi1_eval(t)));
      w.add(rel_err(b.w_eval(std::conj(t)), b.w_eval(t)));
    }
  }
  return {w.value <= 1e-9, "max rel " + fmt(w.value) + " over 20 models x 200 points of R"};
}

Outcome cross_identity() {
  Worst w;
  for (const ModelParams& p : models(20, 104)) {
    const TransformBundle b(p);
    for (double t1 : theta1_samples(p, 200)) {
      const std::complex<double> psi2 = b.psi2_eval(t1);
      for (kernel::Branch br : {kernel::Branch::plus, kernel::Branch::minus})
        w.add(std::abs(b.psi1_eval(kernel::theta2_branch(p, t1, br)) + psi2) / std::abs(psi2));
    }
  }
  return {w.value <= 1e-9, "max rel " + fmt(w.value) + " over 20 models x 200 points"};
}

Outcome uniformization() {
  std::mt19937_64 rng(105);
  std::uniform_real_distribution<double> mod(-3, 3), arg(-pi, pi), u(0.01, 0.99);
  Worst kernel_res, inversion_res, rotation_res, cone_res;
  for (const ModelParams& p : models(20, 106)) {
    const TransformBundle b(p);
    const double beta = b.scalars().beta;
    for (int k = 0; k < 500; ++k) {
      const std::complex<double> s = std::polar(std::pow(10.0, mod(rng)), arg(rng));
      const ThetaPair t = theta_of_s(p, s);
      kernel_res.add(std::abs(kernel::gamma(p, t.theta1, t.theta2)) / kernel::gamma_scale(p, t.theta1, t.theta2));
    }
    for (int k = 0; k < 100; ++k) {
      const double s = -std::pow(10.0, mod(rng));
      inversion_res.add(rel_err(W_of_s(p, s), W_of_s(p, 1.0 / s)));
      const std::complex<double> on_r = std::polar(std::pow(10.0, mod(rng)), pi + beta);
      rotation_res.add(rel_err(W_of_s(p, on_r), W_of_s(p, std::polar(1.0, 2 * beta) / on_r)));
      const std::complex<double> in_cone = std::polar(std::pow(10.0, 0.5 * mod(rng)), pi + beta * u(rng));
      cone_res.add(in_lifted_cone(p, in_cone) ? rel_err(b.w_eval(theta_of_s(p, in_cone).theta2), W_of_s(p, in_cone))
                                              : INFINITY);
    }
  }
  const bool ok = kernel_res.value < 1e-10 && inversion_res.value < 1e-10 && rotation_res.value < 1e-10 &&
                  cone_res.value < 1e-10;
  return {ok, "gamma " + fmt(kernel_res.value) + ", W(1/s) " + fmt(inversion_res.value) + ", W(e^{2ib}/s) " +
                  fmt(rotation_res.value) + ", cone " + fmt(cone_res.value)};
}

Outcome group_nature() {
  const ModelParams diag = model(1.7, 0, 0.6, -1, -0.4);
  const GroupReport g1 = group_order(diag);
  const Nature n1 = classify_solution_nature(diag, g1);
  // beta = pi / 3
  const ModelParams sixty = model(1, -0.5, 1, -1, -1);
  const GroupReport g2 = group_order(sixty);
  const Nature n2 = classify_solution_nature(sixty, g2);
  const ModelParams generic = model(1, 0.3, 2, -1, -1);
  const GroupReport g3 = group_order(generic);
  const Nature n3 = classify_solution_nature(generic, g3);
  const bool ok = g1.finite && g1.order == 4 && n1 == Nature::rational_polynomial && g2.finite && g2.order == 6 &&
                  n2 != Nature::transcendental_D_finite && !g3.finite && g3.qmax == 1'000'000 &&
                  n3 == Nature::transcendental_D_finite;
  auto order = [](const GroupReport& g) { return g.order ? std::to_string(*g.order) : std::string("inf"); };
  return {ok, "orders " + order(g1) + "/" + order(g2) + "/" + order(g3) + ", natures " + to_string(n1) + "/" +
                  to_string(n2) + "/" + to_string(n3)};
}

Outcome monte_carlo() {
  const ModelParams regimes[] = {model(1, 0.8, 1, -0.5, -1), model(1, 0.5, 1, -1, -1), model(1, 0, 1, -1, -1)};
  int inside = 0, cells = 0;
  bool rates_ok = true;
  double worst_rate = 0.0;
  std::string regimes_seen;
  for (const ModelParams& p : regimes) {
    const TransformBundle b(p);
    regimes_seen += std::string(regimes_seen.empty() ? "" : "/") + to_string(classify_regime(b).regime);
    const SimResult r = simulate(p, SimConfig{});
    for (const LaplaceEstimate& e : r.laplace_estimates) {
      const double exact = b.phi_eval(e.theta[0], e.theta[1]).real();
      ++cells;
      if (std::abs(e.value.mean - exact) <= 3 * e.value.std_error) ++inside;
    }
    for (int i = 0; i < 2; ++i) {
      const Estimate& rate = r.local_time_rates[i];
      const double z = std::abs(rate.mean + (i == 0 ? p.m1() : p.m2())) / rate.std_error;
      worst_rate = std::max(worst_rate, z);
      rates_ok = rates_ok && z <= 3;
    }
  }
  return {inside >= 25 && cells == 27 && rates_ok, std::to_string(inside) + "/" + std::to_string(cells) +
                                                       " cells within 3 stderr, worst rate z " + fmt(worst_rate) +
                                                       ", regimes " + regimes_seen};
}

Outcome inversion_closed_form() {
  const TransformBundle b(model(1, 0, 1, -1, -1));
  std::vector<double> grid;
  for (int i = 0; i < 50; ++i) grid.push_back(0.1 + 4.9 * i / 49.0);
  const DensityTable t = invert_transform(b, BoundarySide::nu1, grid);
  Worst w;
  for (std::size_t i = 0; i < grid.size(); ++i) w.add(rel_err(t.values[i], 2 * std::exp(-2 * grid[i])));
  return {w.value <= 1e-6, "max rel " + fmt(w.value) + " on [0.1, 5], method " + to_string(t.method)};
}

Outcome asymptotics() {
  std::mt19937_64 rng(109);
  bool exact = true;
  for (int i = 0; i < 50; ++i) {
    const ModelParams p = random_model(rng, true);
    const AsymptoticReport r = classify_regime(TransformBundle(p));
    exact = exact && r.regime == Regime::pole_dominant && r.constant == 2 * p.m1() * p.m2() / p.s22();
  }

  const TransformBundle b(model(1, 0.8, 1, -0.1, -2));
  const AsymptoticReport r = classify_regime(b);
  const double c1 = constants_C1_C2(b).C1;
  const double predicted = -c1 / (2 * std::sqrt(pi));
  std::vector<double> grid;
  for (int k = 0; k <= 10; ++k) grid.push_back(10 * std::pow(10.0, k / 10.0));
  const DensityTable t = invert_transform(b, BoundarySide::nu1, grid);
  Worst tail;
  for (std::size_t i = 0; i < grid.size(); ++i) tail.add(std::abs(t.tilted[i] * std::pow(grid[i], 1.5) / predicted - 1));

  const double top = b.scalars().theta2_plus;
  const double at_top = b.phi1_eval(top).real();
  std::vector<double> x1, x2, y;
  for (double eps = 1e-6; eps <= 1e-3; eps *= 1.2) {
    x1.push_back(std::sqrt(eps));
    x2.push_back(eps);
    y.push_back(at_top - b.phi1_eval(top - eps).real());
  }
  const double slope_gap = std::abs(rbmq::testing::fit2(x1, x2, y).first / -c1 - 1);
  const bool ok = exact && r.regime == Regime::saddle_neg && tail.value <= 0.10 && slope_gap <= 0.02;
  return {ok, std::string("(a) ") + (exact ? "exact" : "mismatch") + ", (b) max gap " + fmt(tail.value) +
                  " on [10, 100], (c) slope gap " + fmt(slope_gap)};
}

Outcome chebyshev_suite() {
  std::mt19937_64 rng(110);
  std::uniform_real_distribution<double> x(-1, 1), a(0.1, 8), u(-3, 3);
  Worst composition, recurrence, derivative, expansion;
  for (int i = 0; i < 1000; ++i) {
    const double xi = x(rng);
    const ChebyshevOrder ai = ChebyshevOrder::real(a(rng));
    const long double angle = std::acos(static_cast<long double>(xi));
    composition.add(std::abs(cheb_T(ai, xi) - static_cast<double>(std::cos(ai.value() * angle))));
  }
  for (int i = 0; i < 200; ++i) {
    const std::complex<double> x(u(rng), u(rng));
    for (int n = 1; n < 12; ++n) {
      const std::complex<double> lhs = cheb_T(ChebyshevOrder::rational(n + 1, 1), x);
      const std::complex<double> rhs =
          2.0 * x * cheb_T(ChebyshevOrder::rational(n, 1), x) - cheb_T(ChebyshevOrder::rational(n - 1, 1), x);
      recurrence.add(std::abs(lhs - rhs) / (1 + std::abs(lhs)));
    }
  }
  const double h = 1e-6;
  for (int i = 0; i < 200; ++i) {
    const ChebyshevOrder ai = ChebyshevOrder::real(a(rng));
    const std::complex<double> z(u(rng), 0.5 + std::abs(u(rng)));
    const std::complex<double> fd = (cheb_T(ai, z + h) - cheb_T(ai, z - h)) / (2 * h);
    derivative.add(std::abs(cheb_T_deriv(ai, z) - fd) / (1 + std::abs(fd)));
  }
  // cos(a (pi - u)) with u = sqrt(2 eps) gives c0 = cos(a pi), c1 = sqrt(2) a sin(a pi).
  for (int i = 0; i < 200; ++i) {
    const double av = a(rng);
    if (std::abs(av - std::round(av)) < 1e-3) continue;
    const MinusOneExpansion e = expansion_at_minus_one(ChebyshevOrder::real(av));
    expansion.add(std::abs(e.c0 - std::cos(av * pi)) + std::abs(e.c1 - std::sqrt(2.0) * av * std::sin(av * pi)) /
                                                           std::max(1.0, av));
  }
  const bool ok = composition.value <= 1e-12 && recurrence.value <= 1e-12 && derivative.value <= 1e-7 &&
                  expansion.value <= 1e-12;
  return {ok, "composition " + fmt(composition.value) + ", recurrence " + fmt(recurrence.value) + ", derivative " +
                  fmt(derivative.value) + ", expansion " + fmt(expansion.value)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "diagonal exactness", 1, diagonal_exactness},
      {2, "mass identities", 1, mass_identities},
      {3, "boundary and gluing identities", 5, gluing_identities},
      {4, "cross-transform identity", 5, cross_identity},
      {5, "uniformization", 5, uniformization},
      {6, "group order and nature", 1, group_nature},
      {7, "Monte Carlo agreement", 600, monte_carlo},
      {8, "inversion against closed form", 10, inversion_closed_form},
      {9, "tail asymptotics", 60, asymptotics},
      {10, "Chebyshev unit suite", 1, chebyshev_suite},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.passed && seconds <= c.limit_seconds;
    failures += !ok;
    std::printf("%s  %2d  %-32s %s  [%.2f s, limit %g s]\n", ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                seconds, c.limit_seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
