#pragma once

#include <string>
#include <string_view>

#include "rbmq/model.hpp"
#include "rbmq/simulation.hpp"

namespace rbmq {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

/// Model config: {"sigma": [[s11, s12], [s21, s22]], "mu": [m1, m2], "r": [[...], [...]]}
/// with "r" optional (identity). Malformed documents throw Error(InvalidConfig);
/// well-formed but invalid models throw InvalidModel.
ModelParams parse_model_json(std::string_view text);
ModelParams load_model_file(const std::string& path);
std::string model_to_json(const ModelParams& p);

/// Overrides the fields present in the optional "simulation" object.
SimConfig parse_sim_config_json(std::string_view text, SimConfig base = {});

std::string read_file(const std::string& path);

}  // namespace rbmq
