#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "rbmq/error.hpp"

namespace rbmq {

using Matrix2 = std::array<std::array<double, 2>, 2>;
using Vector2 = std::array<double, 2>;

inline constexpr Matrix2 kIdentity2{{{1.0, 0.0}, {0.0, 1.0}}};

/// Validated triple (covariance, drift, reflection) of a reflected Brownian
/// motion in the quadrant. Instances only exist for non-singular covariances
/// and ergodic drift/reflection pairs; see validate().
class ModelParams {
 public:
  /// Checks symmetry and positive-definiteness of sigma and the five
  /// ergodicity inequalities. All comparisons are against exact zero.
  /// Throws InvalidModel listing every failed condition. A non-identity
  /// reflection matrix is accepted but recorded in warnings().
  static ModelParams validate(const Matrix2& sigma, const Vector2& mu,
                              const Matrix2& r = kIdentity2);

  double s11() const { return sigma_[0][0]; }
  double s12() const { return sigma_[0][1]; }
  double s22() const { return sigma_[1][1]; }
  double m1() const { return mu_[0]; }
  double m2() const { return mu_[1]; }
  double det_sigma() const { return s11() * s22() - s12() * s12(); }

  const Matrix2& sigma() const { return sigma_; }
  const Vector2& mu() const { return mu_; }
  const Matrix2& r() const { return r_; }

  bool orthogonal_reflection() const;
  bool diagonal_covariance() const { return s12() == 0.0; }
  const std::vector<Violation>& warnings() const { return warnings_; }

  /// Throws NonIdentityReflection unless R = I; `who` names the caller.
  void require_orthogonal_reflection(std::string_view who) const;

  /// Same model with the coordinate labels 1 and 2 exchanged.
  ModelParams swapped() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  ModelParams(const Matrix2& sigma, const Vector2& mu, const Matrix2& r,
              std::vector<Violation> warnings);

  Matrix2 sigma_;
  Vector2 mu_;
  Matrix2 r_;
  std::vector<Violation> warnings_;
};

inline ModelParams validate_parameters(const Matrix2& sigma, const Vector2& mu,
                                       const Matrix2& r = kIdentity2) {
  return ModelParams::validate(sigma, mu, r);
}

/// Correlation angle and the real zeros of the two kernel discriminants.
struct DerivedScalars {
  double beta;          // in (0, pi)
  double theta1_minus;  // zeros of d(theta1), theta1_minus < 0 < theta1_plus
  double theta1_plus;
  double theta2_minus;  // zeros of d~(theta2), theta2_minus < 0 < theta2_plus
  double theta2_plus;
};

DerivedScalars derived_scalars(const ModelParams& p);

}  // namespace rbmq
