#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rbmq {

using cplx = std::complex<double>;

enum class ErrorCode {
  // model
  NonSymmetricCovariance,
  SingularCovariance,
  NotErgodic,
  NonIdentityReflection,
  InvalidConfig,
  // kernel
  NotOnCurve,
  ZeroDenominator,
  // chebyshev
  OnCut,
  AtBranchPoint,
  IntegerOrder,
  // transform
  AtPole,
  OnKernelCurve,
  AtZero,
  OutsideDomain,
  BranchAmbiguity,
  // asymptotics
  IntegerExponent,
  WrongRegime,
  // uniformization
  AtZeroOrInfinity,
  OnLogCut,
  // oracle
  NotDiagonal,
  ContourCollision,
  MethodDisagreement,
};

std::string_view to_string(ErrorCode code);

/// Every refusal raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised instead of a value when a meromorphic evaluator hits one of its poles.
class PoleError : public Error {
 public:
  PoleError(cplx location, int order, const std::string& what);
  cplx location() const noexcept { return location_; }
  int order() const noexcept { return order_; }

 private:
  cplx location_;
  int order_;
};

struct Violation {
  ErrorCode code;
  std::string message;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Parameter rejection listing every violated condition, not only the first.
class InvalidModel : public Error {
 public:
  explicit InvalidModel(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace rbmq
