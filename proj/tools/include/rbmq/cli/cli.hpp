#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rbmq/model.hpp"

namespace rbmq::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInvalidConfig = 2,
  kRefused = 3,
};

/// Entry point of the rbmq tool. Diagnostics go to `err`, results to `out`
/// unless --out names a file.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct CheckOutcome {
  std::string name;
  bool passed;
  bool skipped;
  std::string detail;
};

/// Cross-module invariant suite on one model.
std::vector<CheckOutcome> run_checks(const ModelParams& p, std::uint64_t seed);

/// Ergodic model with identity reflection drawn from `seed`.
ModelParams random_ergodic_model(std::uint64_t seed);

}  // namespace rbmq::cli
