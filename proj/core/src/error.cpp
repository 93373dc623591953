#include "rbmq/error.hpp"

#include <sstream>

namespace rbmq {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSymmetricCovariance: return "NonSymmetricCovariance";
    case ErrorCode::SingularCovariance: return "SingularCovariance";
    case ErrorCode::NotErgodic: return "NotErgodic";
    case ErrorCode::NonIdentityReflection: return "NonIdentityReflection";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::OnCut: return "OnCut";
    case ErrorCode::AtBranchPoint: return "AtBranchPoint";
    case ErrorCode::IntegerOrder: return "IntegerOrder";
    case ErrorCode::AtPole: return "AtPole";
    case ErrorCode::OnKernelCurve: return "OnKernelCurve";
    case ErrorCode::AtZero: return "AtZero";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::BranchAmbiguity: return "BranchAmbiguity";
    case ErrorCode::IntegerExponent: return "IntegerExponent";
    case ErrorCode::WrongRegime: return "WrongRegime";
    case ErrorCode::AtZeroOrInfinity: return "AtZeroOrInfinity";
    case ErrorCode::OnLogCut: return "OnLogCut";
    case ErrorCode::NotDiagonal: return "NotDiagonal";
    case ErrorCode::ContourCollision: return "ContourCollision";
    case ErrorCode::MethodDisagreement: return "MethodDisagreement";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

PoleError::PoleError(cplx location, int order, const std::string& what)
    : Error(ErrorCode::AtPole, what), location_(location), order_(order) {}

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << to_string(violations[i].code) << " (" << violations[i].message << ")";
  }
  return os.str();
}

ErrorCode first_code(const std::vector<Violation>& violations) {
  return violations.empty() ? ErrorCode::InvalidConfig : violations.front().code;
}

}  // namespace

InvalidModel::InvalidModel(std::vector<Violation> violations)
    : Error(first_code(violations), "invalid model: " + join_violations(violations)),
      violations_(std::move(violations)) {}

}  // namespace rbmq
