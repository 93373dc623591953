#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rbmq/model.hpp"

namespace rbmq {

enum class SimScheme {
  /// Exact one-dimensional Skorokhod step per coordinate, using the minimum
  /// of the Brownian bridge between grid points.
  bridge,
  /// Euler step followed by componentwise projection onto the quadrant.
  projection,
};

struct SimConfig {
  double step = 1e-3;
  double horizon = 1e4;   // total time of the measured run, burn-in included
  double burn_in = 1e2;   // discarded at the start of every stream
  std::uint64_t seed = 0x5eed2024;
  int batches = 50;
  int streams = 5;        // independent chains, each owns batches/streams batches
  SimScheme scheme = SimScheme::bridge;
  /// Standard normal pairs drawn and pooled per step; a run at step h with
  /// 2 pairs per step shares its noise with a run at h/2 and 1 pair.
  int normals_per_step = 1;
  std::vector<std::array<double, 2>> theta_grid = default_theta_grid();
  int histogram_bins = 50;
  unsigned threads = 0;   // 0: hardware concurrency, capped by RBMQ_THREADS

  static std::vector<std::array<double, 2>> default_theta_grid();
};

struct Estimate {
  double mean;
  double std_error;
};

struct LaplaceEstimate {
  std::array<double, 2> theta;
  Estimate value;
};

struct Histogram {
  double lo;
  double hi;
  std::vector<double> density;  // per unit length, per unit time
  double overflow;              // mass beyond hi
  double bin_width() const { return (hi - lo) / static_cast<double>(density.size()); }
};

struct SimResult {
  std::vector<LaplaceEstimate> laplace_estimates;
  std::array<Estimate, 2> local_time_rates;
  std::array<Histogram, 2> marginal_histograms;  // densities of Z1, Z2
  /// boundary_histograms[0] estimates the density of nu1 over x2, [1] of nu2 over x1.
  std::array<Histogram, 2> boundary_histograms;
  std::vector<std::string> warnings;
  std::int64_t steps;
};

/// Throws NonIdentityReflection or InvalidConfig.
SimResult simulate(const ModelParams& p, const SimConfig& cfg);

/// Long-format CSV: quantity,index,x_lo,x_hi,theta1,theta2,value,stderr
void write_csv(std::ostream& os, const SimResult& r);

}  // namespace rbmq
