// Serial vs OpenMP null simulation, and linear vs quadratic evaluation of T_n.

#include <benchmark/benchmark.h>

#include <vector>

#include "msquant/engine.hpp"
#include "msquant/model.hpp"
#include "msquant/simulate.hpp"

namespace {

msq::SimulationPlan plan_for(std::size_t n, std::size_t reps) {
  msq::SimulationPlan p;
  p.model = msq::ModelSpec::gaussian(1.0, static_cast<long long>(n));
  p.n = n;
  p.reps = reps;
  p.seed = 7;
  p.alphas = {0.05, 0.1};
  return p;
}

void BM_SimulateSerial(benchmark::State& state) {
  const auto plan = plan_for(static_cast<std::size_t>(state.range(0)), 200);
  for (auto _ : state) benchmark::DoNotOptimize(msq::simulate_null_serial(plan));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(plan.reps));
}

void BM_SimulateParallel(benchmark::State& state) {
  const auto plan = plan_for(static_cast<std::size_t>(state.range(0)), 200);
  for (auto _ : state) benchmark::DoNotOptimize(msq::simulate_null(plan));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(plan.reps));
}

void evaluate_bench(benchmark::State& state, msq::Method method) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto plan = plan_for(n, 1);
  std::vector<double> y;
  msq::draw_null_series(plan, 0, y);
  const msq::ObservationSeries series(std::move(y));
  const auto h = msq::simulation_objective(plan);
  for (auto _ : state) benchmark::DoNotOptimize(msq::evaluate(method, series, h));
  state.SetComplexityN(state.range(0));
}

void BM_EvaluateLinear(benchmark::State& state) { evaluate_bench(state, msq::Method::Linear); }
void BM_EvaluateQuadratic(benchmark::State& state) { evaluate_bench(state, msq::Method::Quadratic); }

}  // namespace

BENCHMARK(BM_SimulateSerial)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateParallel)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EvaluateLinear)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN);
BENCHMARK(BM_EvaluateQuadratic)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Complexity(benchmark::oNSquared);

BENCHMARK_MAIN();
