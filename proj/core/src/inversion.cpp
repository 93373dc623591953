#include "rbmq/inversion.hpp"

#include <cmath>
#include <ostream>

#include "rbmq/asymptotics.hpp"
#include "rbmq/io.hpp"

namespace rbmq {

const char* to_string(InversionMethod m) {
  switch (m) {
    case InversionMethod::talbot: return "talbot";
    case InversionMethod::gaver_stehfest: return "gaver_stehfest";
    case InversionMethod::closed_form: return "closed_form";
  }
  return "?";
}

std::vector<double> stehfest_weights(int order) {
  auto fact = [](int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  const int half = order / 2;
  std::vector<double> v(static_cast<std::size_t>(order));
  for (int k = 1; k <= order; ++k) {
    double s = 0.0;
    for (int j = (k + 1) / 2; j <= std::min(k, half); ++j)
      s += std::pow(j, half) * fact(2 * j) /
           (fact(half - j) * fact(j) * fact(j - 1) * fact(k - j) * fact(2 * j - k));
    v[k - 1] = ((k + half) % 2 == 0 ? 1.0 : -1.0) * s;
  }
  return v;
}

DensityTable invert_transform(const TransformBundle& bundle, BoundarySide side,
                              const std::vector<double>& grid, const InversionOptions& opt) {
  if (grid.empty()) throw Error(ErrorCode::InvalidConfig, "empty inversion grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !std::isfinite(grid[i]) || (i > 0 && !(grid[i] > grid[i - 1])))
      throw Error(ErrorCode::InvalidConfig, "inversion grid must be positive and increasing");
  }
  if (opt.stehfest_order < 2 || opt.stehfest_order % 2 != 0 || opt.talbot_nodes < 8)
    throw Error(ErrorCode::InvalidConfig, "unusable inversion orders");

  const BoundaryTransform& t = side == BoundarySide::nu1 ? bundle.side1() : bundle.side2();
  const double tilt = dominant_singularity(t);
  auto tilted_transform = [&](cplx z) {
    try {
      return t.phi(tilt - z);
    } catch (const PoleError& e) {
      throw Error(ErrorCode::ContourCollision,
                  "inversion contour meets a pole of the transform: " + std::string(e.what()));
    }
  };

  DensityTable table{grid, {}, InversionMethod::talbot, tilt, {}, 0.0};
  for (double x : grid) {
    const double g = talbot(tilted_transform, x, opt.talbot_nodes).real();
    table.tilted.push_back(g);
    table.values.push_back(std::exp(-tilt * x) * g);
  }

  if (opt.cross_check) {
    std::vector<std::size_t> probes{0, grid.size() / 2, grid.size() - 1};
    auto real_transform = [&](double z) { return tilted_transform(cplx{z, 0.0}).real(); };
    for (std::size_t i : probes) {
      const double gs = gaver_stehfest(real_transform, grid[i], opt.stehfest_order);
      const double ref = table.tilted[i];
      const double gap = std::abs(gs - ref) / std::max(std::abs(ref), 1e-300);
      table.cross_check_gap = std::max(table.cross_check_gap, gap);
    }
    if (table.cross_check_gap > opt.max_disagreement)
      throw Error(ErrorCode::MethodDisagreement,
                  "Talbot and Gaver-Stehfest disagree by " + format_double(table.cross_check_gap));
  }
  return table;
}

void write_csv(std::ostream& os, const DensityTable& table) {
  os << "x,density,tilted\n";
  for (std::size_t i = 0; i < table.grid.size(); ++i)
    os << format_double(table.grid[i]) << ',' << format_double(table.values[i]) << ','
       << format_double(table.tilted[i]) << '\n';
}

}  // namespace rbmq
