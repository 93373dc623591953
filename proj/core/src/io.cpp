#include "rbmq/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rbmq {

using nlohmann::json;

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

[[noreturn]] void bad_config(const std::string& what) {
  throw Error(ErrorCode::InvalidConfig, "config: " + what);
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad_config(e.what());
  }
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) bad_config(where + " must be a number");
  return j.get<double>();
}

Matrix2 matrix(const json& j, const std::string& name) {
  if (!j.is_array() || j.size() != 2) bad_config(name + " must be a 2x2 array");
  Matrix2 m{};
  for (std::size_t i = 0; i < 2; ++i) {
    if (!j[i].is_array() || j[i].size() != 2) bad_config(name + " must be a 2x2 array");
    for (std::size_t k = 0; k < 2; ++k)
      m[i][k] = number(j[i][k], name + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  return m;
}

Vector2 vector(const json& j, const std::string& name) {
  if (!j.is_array() || j.size() != 2) bad_config(name + " must be a 2-vector");
  return {number(j[0], name + "[0]"), number(j[1], name + "[1]")};
}

}  // namespace

ModelParams parse_model_json(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_object()) bad_config("top level must be an object");
  if (!doc.contains("sigma") || !doc.contains("mu")) bad_config("\"sigma\" and \"mu\" are required");
  const Matrix2 sigma = matrix(doc["sigma"], "sigma");
  const Vector2 mu = vector(doc["mu"], "mu");
  const Matrix2 r = doc.contains("r") ? matrix(doc["r"], "r") : kIdentity2;
  return ModelParams::validate(sigma, mu, r);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad_config("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModelParams load_model_file(const std::string& path) { return parse_model_json(read_file(path)); }

std::string model_to_json(const ModelParams& p) {
  const json j = {{"sigma", p.sigma()}, {"mu", p.mu()}, {"r", p.r()}};
  return j.dump();
}

SimConfig parse_sim_config_json(std::string_view text, SimConfig cfg) {
  const json doc = parse(text);
  if (!doc.is_object() || !doc.contains("simulation")) return cfg;
  const json& s = doc["simulation"];
  if (!s.is_object()) bad_config("\"simulation\" must be an object");
  auto integer = [&](const char* key) {
    if (!s[key].is_number_integer()) bad_config(std::string("simulation.") + key + " must be an integer");
    return s[key].get<long long>();
  };
  if (s.contains("step")) cfg.step = number(s["step"], "simulation.step");
  if (s.contains("horizon")) cfg.horizon = number(s["horizon"], "simulation.horizon");
  if (s.contains("burn_in")) cfg.burn_in = number(s["burn_in"], "simulation.burn_in");
  if (s.contains("seed")) {
    if (!s["seed"].is_number_unsigned()) bad_config("simulation.seed must be a non-negative integer");
    cfg.seed = s["seed"].get<std::uint64_t>();
  }
  if (s.contains("batches")) cfg.batches = static_cast<int>(integer("batches"));
  if (s.contains("streams")) cfg.streams = static_cast<int>(integer("streams"));
  if (s.contains("histogram_bins")) cfg.histogram_bins = static_cast<int>(integer("histogram_bins"));
  if (s.contains("scheme")) {
    const json& v = s["scheme"];
    if (v == "bridge") {
      cfg.scheme = SimScheme::bridge;
    } else if (v == "projection") {
      cfg.scheme = SimScheme::projection;
    } else {
      bad_config("simulation.scheme must be \"bridge\" or \"projection\"");
    }
  }
  if (s.contains("theta_grid")) {
    const json& g = s["theta_grid"];
    if (!g.is_array()) bad_config("simulation.theta_grid must be an array of pairs");
    cfg.theta_grid.clear();
    for (const json& t : g) cfg.theta_grid.push_back(vector(t, "simulation.theta_grid[]"));
  }
  return cfg;
}

}  // namespace rbmq
