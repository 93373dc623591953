#include <benchmark/benchmark.h>

#include <vector>

#include "rbmq/chebyshev.hpp"
#include "rbmq/inversion.hpp"
#include "rbmq/simulation.hpp"
#include "rbmq/transform.hpp"

namespace {

rbmq::ModelParams correlated() { return rbmq::ModelParams::validate({{{1, 0.3}, {0.3, 2}}}, {-1, -0.5}); }

void BM_ChebyshevComplex(benchmark::State& state) {
  const rbmq::ChebyshevOrder a = rbmq::ChebyshevOrder::real(1.37);
  rbmq::cplx x(-3.0, 0.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rbmq::cheb_T(a, x));
    x += 1e-9;
  }
}
BENCHMARK(BM_ChebyshevComplex);

void BM_Phi1(benchmark::State& state) {
  const rbmq::TransformBundle b(correlated());
  rbmq::cplx t(-1.0, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(b.phi1_eval(t));
    t += 1e-9;
  }
}
BENCHMARK(BM_Phi1);

void BM_PhiBivariate(benchmark::State& state) {
  const rbmq::TransformBundle b(correlated());
  for (auto _ : state) benchmark::DoNotOptimize(b.phi_eval(-0.5, -0.7));
}
BENCHMARK(BM_PhiBivariate);

void BM_Invert(benchmark::State& state) {
  const rbmq::TransformBundle b(correlated());
  std::vector<double> grid;
  for (int i = 1; i <= state.range(0); ++i) grid.push_back(0.1 * i);
  for (auto _ : state) benchmark::DoNotOptimize(rbmq::invert_transform(b, rbmq::BoundarySide::nu1, grid));
}
BENCHMARK(BM_Invert)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_SimulateSteps(benchmark::State& state) {
  rbmq::SimConfig cfg;
  cfg.horizon = 20;
  cfg.burn_in = 1;
  cfg.batches = 2;
  cfg.streams = 1;
  cfg.threads = 1;
  cfg.scheme = state.range(0) == 0 ? rbmq::SimScheme::bridge : rbmq::SimScheme::projection;
  const rbmq::ModelParams p = correlated();
  std::int64_t steps = 0;
  for (auto _ : state) steps += rbmq::simulate(p, cfg).steps;
  state.SetItemsProcessed(steps);
}
BENCHMARK(BM_SimulateSteps)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
