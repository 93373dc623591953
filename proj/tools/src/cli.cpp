#include "rbmq/cli/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rbmq/asymptotics.hpp"
#include "rbmq/inversion.hpp"
#include "rbmq/io.hpp"
#include "rbmq/kernel.hpp"
#include "rbmq/simulation.hpp"
#include "rbmq/transform.hpp"
#include "rbmq/uniformization.hpp"

namespace rbmq::cli {

using nlohmann::json;

namespace {

json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json violations_json(const std::vector<Violation>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back({{"code", std::string(to_string(v.code))}, {"message", v.message}});
  return a;
}

json group_json(const GroupReport& g) {
  json j = {{"finite", g.finite}, {"p", g.p}, {"q", g.q}, {"residual", g.residual}, {"qmax", g.qmax}};
  j["order"] = g.order ? json(*g.order) : json(nullptr);
  if (!g.finite) j["status"] = "infinite within bound " + std::to_string(g.qmax);
  return j;
}

const char* sign_word(double x, Regime r) {
  if (r == Regime::boundary_zero) return "zero";
  return x < 0 ? "negative" : "positive";
}

json report_json(const AsymptoticReport& r) {
  json j = {{"regime", to_string(r.regime)},
            {"theta1_at_branch_point", r.theta1_at_branch},
            {"decay_rate", r.decay_rate},
            {"power", r.power},
            {"constant", r.constant},
            {"notes", r.notes}};
  j["pole_location"] = r.pole_location ? json(*r.pole_location) : json(nullptr);
  return j;
}

json analyze(const ModelParams& p) {
  const DerivedScalars d = derived_scalars(p);
  const kernel::HyperbolaR h = kernel::hyperbola(p);
  json j = json::parse(model_to_json(p));
  j["beta"] = d.beta;
  j["theta1_minus"] = d.theta1_minus;
  j["theta1_plus"] = d.theta1_plus;
  j["theta2_minus"] = d.theta2_minus;
  j["theta2_plus"] = d.theta2_plus;
  j["hyperbola"] = {{"cxx", h.cxx},   {"cyy", h.cyy},           {"cx", h.cx},
                    {"rhs", h.rhs},   {"apex", h.apex},         {"degenerate", h.degenerate},
                    {"vertical_x", h.degenerate ? json(h.vertical_x) : json(nullptr)}};
  const double t1 = kernel::theta1_at_branch_point(p);
  j["theta1_at_branch_point"] = t1;
  const GroupReport g = group_order(p);
  j["group"] = group_json(g);
  j["nature"] = to_string(classify_solution_nature(p, g));
  j["warnings"] = violations_json(p.warnings());
  if (p.orthogonal_reflection()) {
    const TransformBundle b(p);
    const AsymptoticReport r = classify_regime(b);
    j["regime"] = to_string(r.regime);
    j["theta1_at_branch_sign"] = sign_word(t1, r.regime);
    j["w1_prime0"] = b.w1_prime0();
    j["w2_prime0"] = b.w2_prime0();
  } else {
    j["regime"] = nullptr;
  }
  return j;
}

struct Options {
  std::string config;
  std::string out_path;
  std::string format;
  // eval
  std::string fn = "phi1";
  double re = 0, im = 0, re1 = 0, im1 = 0, re2 = 0, im2 = 0;
  std::vector<double> direction;
  // asympt / invert
  int side = 1;
  double grid_start = 0.1, grid_stop = 5.0;
  int grid_points = 50;
  bool log_grid = false;
  // simulate
  std::optional<double> step, horizon, burn_in;
  std::optional<std::uint64_t> seed;
  std::optional<int> batches, streams;
  std::string scheme;
  // check
  std::uint64_t check_seed = 1;
};

void emit(const Options& o, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (o.out_path.empty()) {
    body(out);
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw Error(ErrorCode::InvalidConfig, "cannot write " + o.out_path);
  body(f);
}

void emit_json(const Options& o, std::ostream& out, const json& j) {
  emit(o, out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

ModelParams load(const Options& o) {
  if (o.config.empty()) throw Error(ErrorCode::InvalidConfig, "--config is required");
  return load_model_file(o.config);
}

int do_eval(const Options& o, std::ostream& out) {
  const TransformBundle b(load(o));
  const cplx z(o.re, o.im), z1(o.re1, o.im1), z2(o.re2, o.im2);
  cplx v;
  json args;
  if (o.fn == "phi") {
    if (o.direction.empty()) {
      v = b.phi_eval(z1, z2);
    } else {
      v = b.phi_eval_limit(z1, z2, {o.direction[0], o.direction[1]}, {o.direction[2], o.direction[3]});
      args["direction"] = o.direction;
    }
    args["theta1"] = complex_json(z1);
    args["theta2"] = complex_json(z2);
  } else {
    static const std::map<std::string, cplx (TransformBundle::*)(cplx) const> unary{
        {"phi1", &TransformBundle::phi1_eval}, {"phi2", &TransformBundle::phi2_eval},
        {"psi1", &TransformBundle::psi1_eval}, {"psi2", &TransformBundle::psi2_eval},
        {"w", &TransformBundle::w_eval}};
    v = (b.*unary.at(o.fn))(z);
    args["theta"] = complex_json(z);
  }
  emit_json(o, out, {{"fn", o.fn}, {"args", args}, {"value", complex_json(v)}});
  return kOk;
}

int do_asympt(const Options& o, std::ostream& out) {
  const TransformBundle b(load(o));
  const BoundaryTransform& s = o.side == 1 ? b.side1() : b.side2();
  const AsymptoticReport r = classify_regime(s);
  json j = report_json(r);
  j["side"] = o.side;
  if (r.regime != Regime::pole_dominant) {
    const BoundaryConstants c = constants_C1_C2(s);
    if (r.regime == Regime::saddle_neg) j["C1"] = c.C1;
    j["C2"] = c.C2;
  }
  emit_json(o, out, j);
  return kOk;
}

SimConfig sim_config(const Options& o) {
  SimConfig c = parse_sim_config_json(read_file(o.config));
  if (o.step) c.step = *o.step;
  if (o.horizon) c.horizon = *o.horizon;
  if (o.burn_in) c.burn_in = *o.burn_in;
  if (o.seed) c.seed = *o.seed;
  if (o.batches) c.batches = *o.batches;
  if (o.streams) c.streams = *o.streams;
  if (o.scheme == "projection") c.scheme = SimScheme::projection;
  if (o.scheme == "bridge") c.scheme = SimScheme::bridge;
  return c;
}

json estimate_json(const Estimate& e) { return {{"mean", e.mean}, {"stderr", e.std_error}}; }

int do_simulate(const Options& o, std::ostream& out, std::ostream& err) {
  const ModelParams p = load(o);
  const SimResult r = simulate(p, sim_config(o));
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  if (o.format == "json") {
    json j;
    for (const auto& e : r.laplace_estimates)
      j["laplace"].push_back({{"theta1", e.theta[0]}, {"theta2", e.theta[1]}, {"estimate", estimate_json(e.value)}});
    j["local_time_rates"] = {estimate_json(r.local_time_rates[0]), estimate_json(r.local_time_rates[1])};
    j["steps"] = r.steps;
    emit_json(o, out, j);
  } else {
    emit(o, out, [&](std::ostream& os) { write_csv(os, r); });
  }
  return kOk;
}

int do_invert(const Options& o, std::ostream& out) {
  const TransformBundle b(load(o));
  if (o.grid_points < 1 || !(o.grid_start > 0) || !(o.grid_stop >= o.grid_start))
    throw Error(ErrorCode::InvalidConfig, "grid needs 0 < start <= stop and at least one point");
  std::vector<double> grid;
  for (int i = 0; i < o.grid_points; ++i) {
    const double f = o.grid_points == 1 ? 0.0 : static_cast<double>(i) / (o.grid_points - 1);
    grid.push_back(o.log_grid ? o.grid_start * std::pow(o.grid_stop / o.grid_start, f)
                              : o.grid_start + f * (o.grid_stop - o.grid_start));
  }
  const DensityTable t = invert_transform(b, o.side == 1 ? BoundarySide::nu1 : BoundarySide::nu2, grid);
  if (o.format == "json") {
    emit_json(o, out, {{"grid", t.grid}, {"values", t.values}, {"tilted", t.tilted}, {"tilt", t.tilt},
                       {"method", to_string(t.method)}, {"cross_check_gap", t.cross_check_gap}});
  } else {
    emit(o, out, [&](std::ostream& os) { write_csv(os, t); });
  }
  return kOk;
}

int do_check(const Options& o, std::ostream& out) {
  const ModelParams p = o.config.empty() ? random_ergodic_model(o.check_seed) : load(o);
  const std::vector<CheckOutcome> results = run_checks(p, o.check_seed);
  bool ok = true;
  emit(o, out, [&](std::ostream& os) {
    os << "model " << model_to_json(p) << '\n';
    for (const auto& r : results) {
      const char* tag = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
      os << tag << "  " << r.name << "  " << r.detail << '\n';
      ok = ok && (r.passed || r.skipped);
    }
  });
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reflected Brownian motion in the quadrant: transforms, asymptotics and oracles", "rbmq"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-c,--config", o.config, "JSON model config");
    sub->add_option("-o,--out", o.out_path, "output file (default stdout)");
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "derived scalars, curve, group and regime");
  common(analyze_cmd);

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate phi, phi1, phi2, w, psi1 or psi2");
  common(eval_cmd);
  eval_cmd->add_option("--fn", o.fn)->check(CLI::IsMember({"phi", "phi1", "phi2", "w", "psi1", "psi2"}));
  eval_cmd->add_option("--re", o.re);
  eval_cmd->add_option("--im", o.im);
  eval_cmd->add_option("--re1", o.re1);
  eval_cmd->add_option("--im1", o.im1);
  eval_cmd->add_option("--re2", o.re2);
  eval_cmd->add_option("--im2", o.im2);
  eval_cmd->add_option("--direction", o.direction, "re1 im1 re2 im2 of the limit direction for phi")
      ->expected(4);

  CLI::App* asympt_cmd = app.add_subcommand("asympt", "tail asymptotics of a boundary density");
  common(asympt_cmd);
  asympt_cmd->add_option("--side", o.side)->check(CLI::IsMember({1, 2}));

  CLI::App* sim_cmd = app.add_subcommand("simulate", "Monte Carlo oracle");
  common(sim_cmd);
  sim_cmd->add_option("--format", o.format, "csv (default) or json")->check(CLI::IsMember({"json", "csv"}));
  sim_cmd->add_option("--step", o.step);
  sim_cmd->add_option("--horizon", o.horizon);
  sim_cmd->add_option("--burn-in", o.burn_in);
  sim_cmd->add_option("--seed", o.seed);
  sim_cmd->add_option("--batches", o.batches);
  sim_cmd->add_option("--streams", o.streams);
  sim_cmd->add_option("--scheme", o.scheme)->check(CLI::IsMember({"bridge", "projection"}));

  CLI::App* inv_cmd = app.add_subcommand("invert", "numerical inversion of a boundary transform");
  common(inv_cmd);
  inv_cmd->add_option("--format", o.format, "csv (default) or json")->check(CLI::IsMember({"json", "csv"}));
  inv_cmd->add_option("--side", o.side)->check(CLI::IsMember({1, 2}));
  inv_cmd->add_option("--start", o.grid_start);
  inv_cmd->add_option("--stop", o.grid_stop);
  inv_cmd->add_option("--points", o.grid_points);
  inv_cmd->add_flag("--log", o.log_grid, "logarithmic grid");

  CLI::App* check_cmd = app.add_subcommand("check", "cross-module invariant suite");
  check_cmd->add_option("-c,--config", o.config, "JSON model config (default: random model)");
  check_cmd->add_option("-o,--out", o.out_path);
  check_cmd->add_option("--seed", o.check_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  }

  try {
    if (*analyze_cmd) {
      emit_json(o, out, analyze(load(o)));
      return kOk;
    }
    if (*eval_cmd) return do_eval(o, out);
    if (*asympt_cmd) return do_asympt(o, out);
    if (*sim_cmd) return do_simulate(o, out, err);
    if (*inv_cmd) return do_invert(o, out);
    if (*check_cmd) return do_check(o, out);
  } catch (const InvalidModel& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::InvalidConfig ? kInvalidConfig : kRefused;
  }
  return kInvalidConfig;
}

}  // namespace rbmq::cli
