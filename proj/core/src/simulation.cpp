#include "rbmq/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <random>
#include <thread>

#include "rbmq/io.hpp"

namespace rbmq {

std::vector<std::array<double, 2>> SimConfig::default_theta_grid() {
  std::vector<std::array<double, 2>> g;
  for (double a : {-1.0, -0.5, -0.1})
    for (double b : {-1.0, -0.5, -0.1}) g.push_back({a, b});
  return g;
}

namespace {

// Per-batch accumulators; everything is a time integral.
struct BatchSums {
  std::vector<double> laplace;
  std::array<double, 2> local_time{0.0, 0.0};
  std::array<std::vector<double>, 2> marginal;
  std::array<std::vector<double>, 2> boundary;
  std::array<double, 2> marginal_overflow{0.0, 0.0};
  std::array<double, 2> boundary_overflow{0.0, 0.0};
  double time = 0.0;
};

struct Plan {
  std::array<std::array<double, 2>, 2> chol;
  std::array<double, 2> mu;
  std::array<double, 2> var;
  std::array<double, 2> hist_hi;
  std::vector<double> axis1, axis2;       // distinct theta values per coordinate
  std::vector<std::array<int, 2>> cells;  // grid cell -> indices into the axes
  std::int64_t burn_steps;
  std::int64_t batch_steps;
};

std::vector<double> distinct(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

int index_of(const std::vector<double>& axis, double x) {
  return static_cast<int>(std::lower_bound(axis.begin(), axis.end(), x) - axis.begin());
}

class Stream {
 public:
  Stream(const Plan& plan, const SimConfig& cfg, int index)
      : plan_(plan), cfg_(cfg) {
    std::seed_seq gs{cfg.seed, static_cast<std::uint64_t>(index), std::uint64_t{0}};
    std::seed_seq us{cfg.seed, static_cast<std::uint64_t>(index), std::uint64_t{1}};
    gauss_.seed(gs);
    unif_.seed(us);
    e1_.resize(plan.axis1.size());
    e2_.resize(plan.axis2.size());
  }

  void run(std::int64_t steps, BatchSums* sums) {
    const double h = cfg_.step;
    const double sqrt_h = std::sqrt(h);
    const double pool = 1.0 / std::sqrt(static_cast<double>(cfg_.normals_per_step));
    const int bins = cfg_.histogram_bins;
    std::array<double, 2> inv_width{};
    for (int i = 0; i < 2; ++i) inv_width[i] = bins / plan_.hist_hi[i];

    for (std::int64_t n = 0; n < steps; ++n) {
      double x1 = 0.0, x2 = 0.0;
      for (int k = 0; k < cfg_.normals_per_step; ++k) {
        x1 += normal_(gauss_);
        x2 += normal_(gauss_);
      }
      x1 *= pool;
      x2 *= pool;
      const std::array<double, 2> delta{
          plan_.mu[0] * h + sqrt_h * plan_.chol[0][0] * x1,
          plan_.mu[1] * h + sqrt_h * (plan_.chol[1][0] * x1 + plan_.chol[1][1] * x2)};
      std::array<double, 2> dl{};
      for (int i = 0; i < 2; ++i) dl[i] = advance(i, delta[i]);
      if (!sums) continue;

      for (std::size_t k = 0; k < e1_.size(); ++k) e1_[k] = std::exp(plan_.axis1[k] * z_[0]);
      for (std::size_t k = 0; k < e2_.size(); ++k) e2_[k] = std::exp(plan_.axis2[k] * z_[1]);
      for (std::size_t c = 0; c < plan_.cells.size(); ++c)
        sums->laplace[c] += e1_[plan_.cells[c][0]] * e2_[plan_.cells[c][1]] * h;

      for (int i = 0; i < 2; ++i) {
        sums->local_time[i] += dl[i];
        const double bin = z_[i] * inv_width[i];
        if (bin < bins) {
          sums->marginal[i][static_cast<std::size_t>(bin)] += h;
        } else {
          sums->marginal_overflow[i] += h;
        }
        // nu_i lives on {z_i = 0} and is binned by the other coordinate.
        if (dl[i] > 0.0) {
          const int j = 1 - i;
          const double b = z_[j] * inv_width[j];
          if (b < bins) {
            sums->boundary[i][static_cast<std::size_t>(b)] += dl[i];
          } else {
            sums->boundary_overflow[i] += dl[i];
          }
        }
      }
      sums->time += h;
    }
  }

 private:
  double advance(int i, double delta) {
    double& z = z_[i];
    if (cfg_.scheme == SimScheme::projection) {
      const double y = z + delta;
      z = std::max(y, 0.0);
      return std::max(-y, 0.0);
    }
    const double end = z + delta;
    const double vh = plan_.var[i] * cfg_.step;
    if (end > 0.0 && 2.0 * z * end > 40.0 * vh) {
      z = end;
      return 0.0;
    }
    const double u = 1.0 - uniform_(unif_);
    const double minimum = 0.5 * (delta - std::sqrt(delta * delta - 2.0 * vh * std::log(u)));
    const double dl = std::max(0.0, -(z + minimum));
    z = end + dl;
    return dl;
  }

  const Plan& plan_;
  const SimConfig& cfg_;
  std::mt19937_64 gauss_;
  std::mt19937_64 unif_;
  std::normal_distribution<double> normal_;
  std::uniform_real_distribution<double> uniform_;
  std::array<double, 2> z_{0.0, 0.0};
  std::vector<double> e1_, e2_;
};

void validate(const SimConfig& cfg) {
  std::vector<Violation> bad;
  auto need = [&](bool ok, const char* msg) {
    if (!ok) bad.push_back({ErrorCode::InvalidConfig, msg});
  };
  need(std::isfinite(cfg.step) && cfg.step > 0.0, "step must be positive");
  need(std::isfinite(cfg.burn_in) && cfg.burn_in > 0.0, "burn_in must be positive");
  need(std::isfinite(cfg.horizon) && cfg.burn_in < cfg.horizon, "burn_in must be below horizon");
  need(cfg.batches >= 1, "batches must be positive");
  need(cfg.streams >= 1 && cfg.streams <= cfg.batches, "streams must lie in [1, batches]");
  need(cfg.normals_per_step >= 1, "normals_per_step must be positive");
  need(cfg.histogram_bins >= 1, "histogram_bins must be positive");
  for (const auto& t : cfg.theta_grid)
    need(std::isfinite(t[0]) && std::isfinite(t[1]) && t[0] <= 0.0 && t[1] <= 0.0,
         "theta grid points must be finite with non-positive coordinates");
  if (!bad.empty()) throw InvalidModel(std::move(bad));
}

unsigned thread_budget(const SimConfig& cfg) {
  unsigned n = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RBMQ_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return std::max(1u, std::min(n, static_cast<unsigned>(cfg.streams)));
}

Estimate batch_mean(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= n;
  if (xs.size() < 2) return {mean, std::numeric_limits<double>::quiet_NaN()};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

}  // namespace

SimResult simulate(const ModelParams& p, const SimConfig& cfg) {
  p.require_orthogonal_reflection("simulate");
  validate(cfg);

  SimResult result{};
  if (cfg.step * std::max(std::abs(p.m1()), std::abs(p.m2())) > 0.05 ||
      cfg.step * std::max(p.s11(), p.s22()) > 0.05)
    result.warnings.push_back("StepTooLarge: step is not small against the drift and diffusion scales");

  Plan plan{};
  const double l11 = std::sqrt(p.s11());
  plan.chol = {{{l11, 0.0}, {p.s12() / l11, std::sqrt(p.det_sigma() / p.s11())}}};
  plan.mu = {p.m1(), p.m2()};
  plan.var = {p.s11(), p.s22()};
  // Ten mean lengths of the one-dimensional reflected marginal.
  plan.hist_hi = {10.0 * p.s11() / (2.0 * std::abs(p.m1())), 10.0 * p.s22() / (2.0 * std::abs(p.m2()))};
  std::vector<double> t1, t2;
  for (const auto& t : cfg.theta_grid) {
    t1.push_back(t[0]);
    t2.push_back(t[1]);
  }
  plan.axis1 = distinct(t1);
  plan.axis2 = distinct(t2);
  for (const auto& t : cfg.theta_grid)
    plan.cells.push_back({index_of(plan.axis1, t[0]), index_of(plan.axis2, t[1])});
  plan.burn_steps = std::llround(cfg.burn_in / cfg.step);
  plan.batch_steps = std::max<std::int64_t>(1, std::llround((cfg.horizon - cfg.burn_in) / cfg.batches / cfg.step));

  const int bins = cfg.histogram_bins;
  std::vector<BatchSums> sums(static_cast<std::size_t>(cfg.batches));
  for (auto& s : sums) {
    s.laplace.assign(plan.cells.size(), 0.0);
    for (int i = 0; i < 2; ++i) {
      s.marginal[i].assign(static_cast<std::size_t>(bins), 0.0);
      s.boundary[i].assign(static_cast<std::size_t>(bins), 0.0);
    }
  }

  // Stream k owns the consecutive batches [first[k], first[k + 1]).
  std::vector<int> first(static_cast<std::size_t>(cfg.streams) + 1, 0);
  for (int k = 0; k < cfg.streams; ++k)
    first[k + 1] = first[k] + cfg.batches / cfg.streams + (k < cfg.batches % cfg.streams ? 1 : 0);

  auto work = [&](int k) {
    Stream stream(plan, cfg, k);
    stream.run(plan.burn_steps, nullptr);
    for (int b = first[k]; b < first[k + 1]; ++b) stream.run(plan.batch_steps, &sums[b]);
  };
  const unsigned threads = thread_budget(cfg);
  if (threads <= 1) {
    for (int k = 0; k < cfg.streams; ++k) work(k);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (int k = static_cast<int>(t); k < cfg.streams; k += static_cast<int>(threads)) work(k);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<double> per_batch(sums.size());
  for (std::size_t c = 0; c < plan.cells.size(); ++c) {
    for (std::size_t b = 0; b < sums.size(); ++b) per_batch[b] = sums[b].laplace[c] / sums[b].time;
    result.laplace_estimates.push_back({cfg.theta_grid[c], batch_mean(per_batch)});
  }
  double total_time = 0.0;
  for (const auto& s : sums) total_time += s.time;
  for (int i = 0; i < 2; ++i) {
    for (std::size_t b = 0; b < sums.size(); ++b) per_batch[b] = sums[b].local_time[i] / sums[b].time;
    result.local_time_rates[i] = batch_mean(per_batch);

    const int j = 1 - i;
    Histogram marginal{0.0, plan.hist_hi[i], std::vector<double>(bins, 0.0), 0.0};
    Histogram boundary{0.0, plan.hist_hi[j], std::vector<double>(bins, 0.0), 0.0};
    for (const auto& s : sums) {
      for (int k = 0; k < bins; ++k) {
        marginal.density[k] += s.marginal[i][k];
        boundary.density[k] += s.boundary[i][k];
      }
      marginal.overflow += s.marginal_overflow[i];
      boundary.overflow += s.boundary_overflow[i];
    }
    for (int k = 0; k < bins; ++k) {
      marginal.density[k] /= total_time * marginal.bin_width();
      boundary.density[k] /= total_time * boundary.bin_width();
    }
    marginal.overflow /= total_time;
    boundary.overflow /= total_time;
    result.marginal_histograms[i] = std::move(marginal);
    result.boundary_histograms[i] = std::move(boundary);
  }
  result.steps = cfg.streams * plan.burn_steps + cfg.batches * plan.batch_steps;
  return result;
}

void write_csv(std::ostream& os, const SimResult& r) {
  os << "quantity,index,x_lo,x_hi,theta1,theta2,value,stderr\n";
  auto num = [](double x) { return format_double(x); };
  for (const auto& e : r.laplace_estimates)
    os << "laplace,," << ",," << num(e.theta[0]) << ',' << num(e.theta[1]) << ','
       << num(e.value.mean) << ',' << num(e.value.std_error) << '\n';
  for (int i = 0; i < 2; ++i)
    os << "local_time_rate," << i + 1 << ",,,,," << num(r.local_time_rates[i].mean) << ','
       << num(r.local_time_rates[i].std_error) << '\n';
  auto hist = [&](const char* name, int i, const Histogram& h) {
    const double w = h.bin_width();
    for (std::size_t k = 0; k < h.density.size(); ++k)
      os << name << ',' << i + 1 << ',' << num(h.lo + k * w) << ',' << num(h.lo + (k + 1) * w)
         << ",,," << num(h.density[k]) << ",\n";
  };
  for (int i = 0; i < 2; ++i) hist("marginal", i, r.marginal_histograms[i]);
  for (int i = 0; i < 2; ++i) hist("boundary", i, r.boundary_histograms[i]);
}

}  // namespace rbmq
