#pragma once

#include <span>
#include <vector>

#include "rbmq/model.hpp"

namespace rbmq::kernel {

enum class Branch { plus, minus, unspecified };

/// gamma(t1, t2) = a t2^2 + b t2 + c with (a, b, c) functions of t1, or the
/// index-swapped (a~, b~, c~) functions of t2.
struct KernelCoeffs {
  cplx a;
  cplx b;
  cplx c;
};

struct KernelPoint {
  cplx theta1;
  cplx theta2;
  Branch branch = Branch::unspecified;
};

struct Discriminants {
  cplx d;        // d(theta1)
  cplx d_tilde;  // d~(theta2)
};

cplx gamma(const ModelParams& p, cplx theta1, cplx theta2);
cplx gamma1(const ModelParams& p, cplx theta1, cplx theta2);
cplx gamma2(const ModelParams& p, cplx theta1, cplx theta2);

/// Residual scale for "gamma = 0" checks at (theta1, theta2).
double gamma_scale(const ModelParams& p, cplx theta1, cplx theta2);
bool is_kernel_point(const ModelParams& p, const KernelPoint& pt, double rel_tol = 1e-10);

KernelCoeffs coeffs_in_theta2(const ModelParams& p, cplx theta1);  // a(t1), b(t1), c(t1)
KernelCoeffs coeffs_in_theta1(const ModelParams& p, cplx theta2);  // a~(t2), b~(t2), c~(t2)

cplx discriminant_d(const ModelParams& p, cplx theta1);
cplx discriminant_d_tilde(const ModelParams& p, cplx theta2);
Discriminants discriminants(const ModelParams& p, cplx theta1, cplx theta2);

/// Theta2^{+-}(theta1) with the principal square root of d(theta1); the
/// "minus" value therefore has the smaller real part.
cplx theta2_branch(const ModelParams& p, cplx theta1, Branch sign);
cplx theta1_branch(const ModelParams& p, cplx theta2, Branch sign);

/// Follows one root of gamma(t1, .) = 0 continuously along `path`, starting
/// from the labelled principal branch at path.front().
std::vector<cplx> track_theta2_branch(const ModelParams& p, std::span<const cplx> path,
                                      Branch start);

/// Double root Theta1(theta2^+) = -(sigma12 theta2^+ + mu1) / sigma11.
double theta1_at_branch_point(const ModelParams& p);

/// The curve R = Theta2^{+-}((-inf, theta1^-)) as a branch of the real conic
///   cxx x^2 + cyy y^2 + cx x = rhs,  theta2 = x + i y.
/// When sigma12 = 0 the conic degenerates to the vertical line x = vertical_x.
struct HyperbolaR {
  double cxx;
  double cyy;
  double cx;
  double rhs;
  double theta1_minus;
  double apex;  // real point Theta2(theta1^-)
  bool degenerate;
  double vertical_x;

  double residual(double x, double y) const;
  double scale(double x, double y) const;
  /// Upper (Im >= 0) curve point over theta1 < theta1_minus.
  cplx point(double theta1) const;

 private:
  friend HyperbolaR hyperbola(const ModelParams& p);
  double s12_ = 0.0, s22_ = 0.0, m2_ = 0.0;
  double d_a_ = 0.0, d_b_ = 0.0, d_c_ = 0.0;  // d(theta1) coefficients
};

HyperbolaR hyperbola(const ModelParams& p);

/// Membership of the open domain bounded by R that contains 0. Points within
/// 1e-11 (normalized conic residual) of R count as outside.
bool contains_G_R(const ModelParams& p, cplx theta2);
/// Whether theta2 lies on R (tolerance 1e-8 on the normalized conic residual).
bool on_curve(const ModelParams& p, cplx theta2, double tol = 1e-8);

/// Boundary ratio of the general-reflection problem, kept as its two factors
///   G = (gamma1/gamma2)(T, theta2) * (gamma2/gamma1)(T, conj theta2),
/// T = Theta1^-(theta2), the common real root shared by theta2 and its conjugate.
struct GRatio {
  cplx first;
  cplx second;
  cplx value;
};

GRatio g_ratio(const ModelParams& p, cplx theta2);

}  // namespace rbmq::kernel
