#include <gtest/gtest.h>

#include <cmath>

#include "rbmq/kernel.hpp"
#include "test_support.hpp"

using namespace rbmq;
using namespace rbmq::kernel;
using rbmq::testing::model;
using rbmq::testing::random_model;

namespace {

cplx random_point(std::mt19937_64& rng, double radius = 5.0) {
  std::uniform_real_distribution<double> u(-radius, radius);
  return {u(rng), u(rng)};
}

}  // namespace

TEST(Kernel, ValuesAtSimplePoints) {
  const ModelParams p = model(1, 0, 1, -1, -1);
  EXPECT_EQ(gamma(p, 0.0, 0.0), cplx(0.0));
  EXPECT_EQ(gamma1(p, 0.0, 0.0), cplx(0.0));
  EXPECT_EQ(gamma2(p, 0.0, 0.0), cplx(0.0));
  EXPECT_EQ(gamma(p, 0.0, 2.0), cplx(0.0));
  EXPECT_EQ(gamma(p, 1.0, 1.0), cplx(-1.0));
}

TEST(Kernel, BothQuadraticFormsAgree) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 1000; ++i) {
    const ModelParams p = random_model(rng);
    const cplx t1 = random_point(rng), t2 = random_point(rng);
    const KernelCoeffs a = coeffs_in_theta2(p, t1), b = coeffs_in_theta1(p, t2);
    const cplx g = rbmq::testing::kernel_value(p, t1, t2);
    const double s = gamma_scale(p, t1, t2);
    EXPECT_LT(std::abs(a.a * t2 * t2 + a.b * t2 + a.c - g), 1e-12 * s);
    EXPECT_LT(std::abs(b.a * t1 * t1 + b.b * t1 + b.c - g), 1e-12 * s);
    EXPECT_LT(std::abs(gamma(p, t1, t2) - g), 1e-12 * s);
  }
}

TEST(Kernel, DiscriminantsOfIdentityModel) {
  const ModelParams p = model(1, 0, 1, -1, -1);
  for (double t : {-2.0, 0.0, 0.5, 3.0})
    EXPECT_NEAR(discriminant_d_tilde(p, t).real(), -t * t + 2 * t + 1, 1e-14);
  EXPECT_EQ(discriminant_d(p, 0.0), cplx(1.0));
  const DerivedScalars d = derived_scalars(p);
  EXPECT_NEAR(std::abs(discriminant_d(p, d.theta1_minus)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(discriminant_d(p, d.theta1_plus)), 0.0, 1e-14);
}

TEST(Kernel, DiscriminantPositiveExactlyBetweenBranchPoints) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    const ModelParams p = random_model(rng);
    const DerivedScalars d = derived_scalars(p);
    const double w = d.theta1_plus - d.theta1_minus;
    for (double f : {0.01, 0.3, 0.7, 0.99}) EXPECT_GT(discriminant_d(p, d.theta1_minus + f * w).real(), 0);
    for (double f : {0.01, 1.0, 10.0}) {
      EXPECT_LT(discriminant_d(p, d.theta1_minus - f * w).real(), 0);
      EXPECT_LT(discriminant_d(p, d.theta1_plus + f * w).real(), 0);
    }
  }
}

TEST(Kernel, BranchesOfIdentityModel) {
  const ModelParams p = model(1, 0, 1, -1, -1);
  EXPECT_NEAR(std::abs(theta2_branch(p, 0.0, Branch::plus) - 2.0), 0, 1e-15);
  EXPECT_NEAR(std::abs(theta2_branch(p, 0.0, Branch::minus)), 0, 1e-15);
  EXPECT_NEAR(std::abs(theta2_branch(p, -1.0, Branch::plus) - cplx(1, std::sqrt(2.0))), 0, 1e-14);
  EXPECT_NEAR(std::abs(theta2_branch(p, -1.0, Branch::minus) - cplx(1, -std::sqrt(2.0))), 0, 1e-14);
}

TEST(Kernel, BranchesCoincideAtBranchPoint) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    const ModelParams p = random_model(rng);
    const double t = derived_scalars(p).theta1_plus;
    const cplx want = -(p.s12() * t + p.m2()) / p.s22();
    EXPECT_LT(std::abs(theta2_branch(p, t, Branch::plus) - want), 1e-7 * (1 + std::abs(want)));
    EXPECT_LT(std::abs(theta2_branch(p, t, Branch::minus) - want), 1e-7 * (1 + std::abs(want)));
  }
}

TEST(Kernel, BranchesSolveTheKernel) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 10000; ++i) {
    const ModelParams p = random_model(rng);
    const cplx t = random_point(rng, 20.0);
    for (Branch b : {Branch::plus, Branch::minus}) {
      const cplx t2 = theta2_branch(p, t, b);
      EXPECT_LT(std::abs(gamma(p, t, t2)), 1e-10 * gamma_scale(p, t, t2));
      const cplx t1 = theta1_branch(p, t, b);
      EXPECT_LT(std::abs(gamma(p, t1, t)), 1e-10 * gamma_scale(p, t1, t));
    }
  }
}

TEST(Kernel, BranchesMatchIndependentQuadraticRoots) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 1000; ++i) {
    const ModelParams p = random_model(rng);
    const cplx t = random_point(rng);
    const auto [r1, r2] = rbmq::testing::kernel_roots_theta2(p, t);
    const cplx a = theta2_branch(p, t, Branch::plus), b = theta2_branch(p, t, Branch::minus);
    const double s = 1 + std::abs(r1) + std::abs(r2);
    const double same = std::abs(a - r2) + std::abs(b - r1), swapped = std::abs(a - r1) + std::abs(b - r2);
    EXPECT_LT(std::min(same, swapped), 1e-10 * s);
  }
}

TEST(Kernel, VietaRelations) {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 1000; ++i) {
    const ModelParams p = random_model(rng);
    const cplx t = random_point(rng);
    const KernelCoeffs k = coeffs_in_theta2(p, t);
    const cplx a = theta2_branch(p, t, Branch::plus), b = theta2_branch(p, t, Branch::minus);
    const double s = 1 + std::abs(a) * std::abs(b) + std::abs(a) + std::abs(b);
    EXPECT_LT(std::abs(a + b + k.b / k.a), 1e-12 * s);
    EXPECT_LT(std::abs(a * b - k.c / k.a), 1e-12 * s);
  }
}

TEST(Kernel, ConjugateBranchesOnTheHyperbola) {
  std::mt19937_64 rng(27);
  std::uniform_real_distribution<double> u(-4, 2);
  for (int i = 0; i < 100; ++i) {
    const ModelParams p = random_model(rng);
    const HyperbolaR h = hyperbola(p);
    for (int k = 0; k < 20; ++k) {
      const double t1 = h.theta1_minus - std::pow(10.0, u(rng));
      const cplx up = theta2_branch(p, t1, Branch::plus), lo = theta2_branch(p, t1, Branch::minus);
      EXPECT_LT(std::abs(up - std::conj(lo)), 1e-12 * (1 + std::abs(up)));
      EXPECT_LT(std::abs(h.residual(up.real(), up.imag())), 1e-10 * h.scale(up.real(), up.imag()));
      EXPECT_TRUE(on_curve(p, up));
      EXPECT_TRUE(on_curve(p, lo));
      EXPECT_FALSE(contains_G_R(p, up));
      const cplx pt = h.point(t1);
      EXPECT_LT(std::abs(pt - cplx(up.real(), std::abs(up.imag()))), 1e-9 * (1 + std::abs(up)));
    }
  }
}

TEST(Kernel, TrackingFollowsOneRoot) {
  const ModelParams p = model(1, 0.3, 2, -1, -0.5);
  std::vector<cplx> path;
  for (int k = 0; k <= 400; ++k) path.push_back(std::polar(3.0, 2 * M_PI * k / 400.0) + cplx(0.5, 0));
  const std::vector<cplx> track = track_theta2_branch(p, path, Branch::plus);
  ASSERT_EQ(track.size(), path.size());
  for (std::size_t k = 0; k < path.size(); ++k) {
    EXPECT_LT(std::abs(gamma(p, path[k], track[k])), 1e-10 * gamma_scale(p, path[k], track[k]));
    if (k) EXPECT_LT(std::abs(track[k] - track[k - 1]), 0.2);
  }
}

TEST(Kernel, BranchPointRootSign) {
  EXPECT_DOUBLE_EQ(theta1_at_branch_point(model(1, 0, 1, -1, -1)), 1.0);
  const ModelParams p = model(1, 0.8, 1, -0.1, -2);
  EXPECT_NEAR(derived_scalars(p).theta2_plus, 10.6693, 1e-4);
  EXPECT_LT(theta1_at_branch_point(p), 0.0);
  std::mt19937_64 rng(28);
  for (int i = 0; i < 50; ++i) {
    const ModelParams q = random_model(rng, true);
    EXPECT_DOUBLE_EQ(theta1_at_branch_point(q), -q.m1() / q.s11());
  }
}

TEST(Kernel, DegenerateHyperbolaIsVerticalLine) {
  const ModelParams p = model(1, 0, 1, -1, -1);
  const HyperbolaR h = hyperbola(p);
  EXPECT_TRUE(h.degenerate);
  EXPECT_DOUBLE_EQ(h.vertical_x, 1.0);
  EXPECT_TRUE(contains_G_R(p, 0.0));
  EXPECT_FALSE(contains_G_R(p, 2.0));
  EXPECT_FALSE(contains_G_R(p, cplx(1, 3)));
  EXPECT_TRUE(on_curve(p, cplx(1, 3)));
  EXPECT_TRUE(contains_G_R(p, cplx(0.99, -50)));
}

// G_R is the region Re arccos(x(theta2)) < beta, x the affine map sending
// theta2^- to 1 and theta2^+ to -1.
TEST(Kernel, DomainMatchesArccosCriterion) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-1, 1);
  int inside = 0, total = 0;
  for (int i = 0; i < 50; ++i) {
    const ModelParams p = random_model(rng);
    const DerivedScalars d = derived_scalars(p);
    const double c = 0.5 * (d.theta2_plus + d.theta2_minus), r = 0.5 * (d.theta2_plus - d.theta2_minus);
    for (int k = 0; k < 200; ++k) {
      const cplx t(c + 6 * r * u(rng), 6 * r * u(rng));
      const cplx x = (c - t) / r;
      const double margin = std::acos(x).real() - d.beta;
      if (std::abs(margin) < 1e-6) continue;
      ++total;
      inside += margin < 0;
      EXPECT_EQ(contains_G_R(p, t), margin < 0) << "model " << i << " point " << t;
    }
  }
  EXPECT_GT(inside, total / 10);
}

TEST(GRatio, ApexAndConjugationSymmetry) {
  const ModelParams p = ModelParams::validate({{{1, 0.3}, {0.3, 1.5}}}, {-1, -0.7}, {{{1, 0.4}, {0.2, 1}}});
  const HyperbolaR h = hyperbola(p);
  const GRatio apex = g_ratio(p, h.apex);
  EXPECT_NEAR(std::abs(apex.value - 1.0), 0.0, 1e-12);
  for (double dt : {0.1, 1.0, 5.0}) {
    const cplx t = h.point(h.theta1_minus - dt);
    const GRatio a = g_ratio(p, t), b = g_ratio(p, std::conj(t));
    EXPECT_LT(std::abs(a.value * b.value - 1.0), 1e-10);
    EXPECT_LT(std::abs(a.first * a.second - a.value), 1e-14 * std::abs(a.value));
  }
  EXPECT_THROW(g_ratio(p, cplx(h.apex - 1.0, 0.0)), Error);
}

TEST(GRatio, IdentityReflection) {
  const ModelParams p = model(1, 0, 1, -1, -1);
  const GRatio g = g_ratio(p, cplx(1, 1));
  const GRatio gc = g_ratio(p, cplx(1, -1));
  EXPECT_LT(std::abs(g.value * gc.value - 1.0), 1e-12);
  // With R = I the ratio collapses to conj(theta2) / theta2.
  EXPECT_LT(std::abs(g.value - cplx(0, -1)), 1e-14);
}
