#include "rbmq/model.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>

namespace rbmq {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

bool all_finite(const Matrix2& m) {
  for (const auto& row : m)
    for (double v : row)
      if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace

ModelParams::ModelParams(const Matrix2& sigma, const Vector2& mu, const Matrix2& r,
                         std::vector<Violation> warnings)
    : sigma_(sigma), mu_(mu), r_(r), warnings_(std::move(warnings)) {}

ModelParams ModelParams::validate(const Matrix2& sigma, const Vector2& mu, const Matrix2& r) {
  std::vector<Violation> errors;

  if (!all_finite(sigma) || !all_finite(r) || !std::isfinite(mu[0]) || !std::isfinite(mu[1])) {
    errors.push_back({ErrorCode::InvalidConfig, "all entries must be finite"});
    throw InvalidModel(std::move(errors));
  }

  if (sigma[0][1] != sigma[1][0]) {
    errors.push_back({ErrorCode::NonSymmetricCovariance,
                      "sigma12 = " + fmt(sigma[0][1]) + " differs from sigma21 = " + fmt(sigma[1][0])});
  }
  const double det = sigma[0][0] * sigma[1][1] - sigma[0][1] * sigma[1][0];
  if (sigma[0][0] <= 0.0) errors.push_back({ErrorCode::SingularCovariance, "sigma11 <= 0"});
  if (sigma[1][1] <= 0.0) errors.push_back({ErrorCode::SingularCovariance, "sigma22 <= 0"});
  if (det <= 0.0) errors.push_back({ErrorCode::SingularCovariance, "det(sigma) = " + fmt(det) + " <= 0"});

  const double r11 = r[0][0], r12 = r[0][1], r21 = r[1][0], r22 = r[1][1];
  const double m1 = mu[0], m2 = mu[1];
  if (!(r11 > 0.0)) errors.push_back({ErrorCode::NotErgodic, "r11 > 0 fails"});
  if (!(r22 > 0.0)) errors.push_back({ErrorCode::NotErgodic, "r22 > 0 fails"});
  if (!(r11 * r22 - r12 * r21 > 0.0))
    errors.push_back({ErrorCode::NotErgodic, "r11*r22 - r12*r21 > 0 fails"});
  if (!(r22 * m1 - r12 * m2 < 0.0))
    errors.push_back({ErrorCode::NotErgodic,
                      "r22*mu1 - r12*mu2 < 0 fails (value " + fmt(r22 * m1 - r12 * m2) + ")"});
  if (!(r11 * m2 - r21 * m1 < 0.0))
    errors.push_back({ErrorCode::NotErgodic,
                      "r11*mu2 - r21*mu1 < 0 fails (value " + fmt(r11 * m2 - r21 * m1) + ")"});

  if (!errors.empty()) throw InvalidModel(std::move(errors));

  std::vector<Violation> warnings;
  if (r != kIdentity2) {
    warnings.push_back({ErrorCode::NonIdentityReflection,
                        "reflection matrix is not the identity; explicit transforms unavailable"});
  }
  return ModelParams(sigma, mu, r, std::move(warnings));
}

bool ModelParams::orthogonal_reflection() const { return r_ == kIdentity2; }

void ModelParams::require_orthogonal_reflection(std::string_view who) const {
  if (!orthogonal_reflection()) {
    throw Error(ErrorCode::NonIdentityReflection,
                std::string(who) + " requires the identity reflection matrix");
  }
}

ModelParams ModelParams::swapped() const {
  const Matrix2 sigma{{{s22(), s12()}, {s12(), s11()}}};
  const Vector2 mu{m2(), m1()};
  const Matrix2 r{{{r_[1][1], r_[1][0]}, {r_[0][1], r_[0][0]}}};
  return ModelParams(sigma, mu, r, warnings_);
}

DerivedScalars derived_scalars(const ModelParams& p) {
  const double det = p.det_sigma();
  const double b2 = p.m1() * p.s12() - p.m2() * p.s11();
  const double root2 = std::sqrt(b2 * b2 + p.m1() * p.m1() * det);
  const double b1 = p.m2() * p.s12() - p.m1() * p.s22();
  const double root1 = std::sqrt(b1 * b1 + p.m2() * p.m2() * det);

  DerivedScalars d{};
  d.beta = std::acos(-p.s12() / std::sqrt(p.s11() * p.s22()));
  // The "minus" roots are formed as c / (plus root numerator) to avoid the
  // cancellation b - sqrt(b^2 + eps) when b > 0 (and symmetrically for b < 0).
  const auto roots = [det](double b, double root, double m) {
    const double big = b >= 0.0 ? b + root : b - root;  // |big| >= |b|
    const double other = -m * m / big;                  // product of roots = -m^2/det
    return b >= 0.0 ? std::pair{other, big / det} : std::pair{big / det, other};
  };
  std::tie(d.theta2_minus, d.theta2_plus) = roots(b2, root2, p.m1());
  std::tie(d.theta1_minus, d.theta1_plus) = roots(b1, root1, p.m2());
  return d;
}

}  // namespace rbmq
