#pragma once

#include "rbmq/chebyshev.hpp"
#include "rbmq/kernel.hpp"
#include "rbmq/model.hpp"

namespace rbmq {

/// Explicit solution on one axis: the gluing function w and the boundary
/// transform phi_1(theta2) = -mu1 w'(0) theta2 / (w(theta2) - w(0)).
/// The transform of the other boundary measure is this class built on the
/// index-swapped model.
class BoundaryTransform {
 public:
  explicit BoundaryTransform(const ModelParams& p);

  const ModelParams& params() const { return params_; }
  const DerivedScalars& scalars() const { return scalars_; }
  const ChebyshevOrder& order() const { return order_; }

  /// Affine map sending theta2^- to 1 and theta2^+ to -1.
  cplx argument(cplx theta2) const;
  /// w on C \ (theta2^+, inf); throws OnCut on the cut.
  cplx w(cplx theta2) const;
  cplx w_prime(cplx theta2) const;
  double w0() const { return w0_; }
  double w_prime0() const { return w_prime0_; }
  /// w(theta2^+) = cos(pi^2 / beta).
  double w_at_branch_point() const;

  /// Meromorphic on the cut plane; the removable point 0 returns -mu1.
  /// Throws PoleError where w(theta2) = w(0), theta2 != 0.
  cplx phi(cplx theta2) const;
  cplx phi_prime(cplx theta2) const;
  /// phi(theta2) / theta2; throws AtZero at 0.
  cplx psi(cplx theta2) const;
  double mass() const { return -params_.m1(); }

 private:
  ModelParams params_;
  DerivedScalars scalars_;
  ChebyshevOrder order_;
  double centre_;
  double half_width_;
  double w0_;
  double w_prime0_;
  double w_second0_;
};

/// Both boundary transforms and the bivariate transform obtained from the
/// kernel functional equation -gamma phi = gamma1 phi1 + gamma2 phi2.
class TransformBundle {
 public:
  /// Requires the identity reflection matrix.
  explicit TransformBundle(const ModelParams& p);

  const ModelParams& params() const { return side1_.params(); }
  const DerivedScalars& scalars() const { return side1_.scalars(); }
  const ChebyshevOrder& order() const { return side1_.order(); }
  const BoundaryTransform& side1() const { return side1_; }
  const BoundaryTransform& side2() const { return side2_; }

  double w1_prime0() const { return side1_.w_prime0(); }
  double w2_prime0() const { return side2_.w_prime0(); }
  double phi1_at_0() const { return side1_.mass(); }
  double phi2_at_0() const { return side2_.mass(); }

  cplx w_eval(cplx theta2) const { return side1_.w(theta2); }
  cplx phi1_eval(cplx theta2) const { return side1_.phi(theta2); }
  cplx phi2_eval(cplx theta1) const { return side2_.phi(theta1); }
  cplx psi1_eval(cplx theta2) const { return side1_.psi(theta2); }
  cplx psi2_eval(cplx theta1) const { return side2_.psi(theta1); }

  /// phi(theta) off the kernel zero set; throws OnKernelCurve on it.
  cplx phi_eval(cplx theta1, cplx theta2) const;
  /// Limit of phi at a kernel point along the direction (dir1, dir2).
  cplx phi_eval_limit(cplx theta1, cplx theta2, cplx dir1, cplx dir2) const;

  struct ContinuationResidual {
    cplx direct;       // phi1(theta2) from the closed form
    cplx continued;    // -(theta2 / T) phi2(T), T = Theta1^-(theta2)
    cplx theta1;       // T
    double absolute;
    double relative;
  };

  /// Compares phi1 with its continuation through the kernel. Valid for
  /// Re theta2 <= 0 or Re Theta1^-(theta2) < 0 (OutsideDomain otherwise);
  /// BranchAmbiguity when theta2 sits on a zero of d~.
  ContinuationResidual continuation_check(cplx theta2) const;

 private:
  BoundaryTransform side1_;
  BoundaryTransform side2_;
};

}  // namespace rbmq
