#include "msquant/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>

#include <fmt/format.h>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace msq {

void SimulationPlan::validate() const {
  if (n < 1) throw std::invalid_argument("simulation: n must be at least 1");
  if (reps < 1) throw std::invalid_argument("simulation: reps must be at least 1");
  if (alphas.empty()) throw std::invalid_argument("simulation: no significance levels");
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    if (!(alphas[k] > 0.0 && alphas[k] < 1.0)) {
      throw std::invalid_argument(fmt::format("simulation: alpha {} outside (0,1)", alphas[k]));
    }
    if (k > 0 && !(alphas[k - 1] < alphas[k])) {
      throw std::invalid_argument("simulation: alphas must be strictly increasing");
    }
  }
  ModelSpec m = model;
  m.n = static_cast<long long>(n);
  m.validate();
}

double empirical_quantile(std::span<const double> sorted_samples, double alpha) {
  if (sorted_samples.empty()) throw std::invalid_argument("empirical quantile: no samples");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("empirical quantile: alpha outside (0,1)");
  }
  const double r = static_cast<double>(sorted_samples.size());
  auto rank = static_cast<std::size_t>(std::ceil(r * (1.0 - alpha)));
  rank = std::clamp<std::size_t>(rank, 1, sorted_samples.size());
  return sorted_samples[rank - 1];
}

double QuantileTable::quantile(double alpha) const {
  for (const auto& [a, q] : quantiles) {
    if (a == alpha) return q;
  }
  return empirical_quantile(samples, alpha);
}

Objective simulation_objective(const SimulationPlan& plan) {
  ModelSpec m = plan.model;
  m.n = static_cast<long long>(plan.n);
  if (m.family == Family::Gaussian) m.sigma = 1.0;
  return make_objective(m);
}

void draw_null_series(const SimulationPlan& plan, std::uint64_t rep, std::vector<double>& out) {
  Xoshiro256 rng = rng_substream(plan.seed, rep);
  out.resize(plan.n);
  const double mean = plan.model.null_mean();
  switch (plan.model.family) {
    case Family::Gaussian:
      for (double& y : out) y = mean + rng.normal();
      break;
    case Family::Poisson:
      for (double& y : out) y = static_cast<double>(rng.poisson(mean));
      break;
    case Family::Bernoulli:
      for (double& y : out) y = rng.bernoulli(mean) ? 1.0 : 0.0;
      break;
  }
}

namespace {

double one_repetition(const SimulationPlan& plan, const Objective& objective, Method method,
                      std::uint64_t rep) {
  std::vector<double> values;
  draw_null_series(plan, rep, values);
  const ObservationSeries series(std::move(values));
  return evaluate(method, series, objective).t_n;
}

QuantileTable assemble(const SimulationPlan& plan, const Objective& objective,
                       std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  QuantileTable table;
  table.samples = std::move(samples);
  for (double alpha : plan.alphas) {
    table.quantiles.emplace_back(alpha, empirical_quantile(table.samples, alpha));
  }
  table.model = objective.describe();
  table.n = plan.n;
  table.reps = plan.reps;
  table.seed = plan.seed;
  return table;
}

}  // namespace

QuantileTable simulate_null_serial(const SimulationPlan& plan, Method method) {
  plan.validate();
  const Objective objective = simulation_objective(plan);
  std::vector<double> samples(plan.reps);
  for (std::size_t r = 0; r < plan.reps; ++r) {
    samples[r] = one_repetition(plan, objective, method, r);
  }
  return assemble(plan, objective, std::move(samples));
}

QuantileTable simulate_null(const SimulationPlan& plan, unsigned workers, Method method) {
  plan.validate();
  const Objective objective = simulation_objective(plan);
  std::vector<double> samples(plan.reps);
  const auto reps = static_cast<long long>(plan.reps);
  std::exception_ptr failure;

#ifdef _OPENMP
  const int threads = workers == 0 ? omp_get_max_threads() : static_cast<int>(workers);
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
#else
  (void)workers;
#endif
  for (long long r = 0; r < reps; ++r) {
    try {
      samples[r] = one_repetition(plan, objective, method, static_cast<std::uint64_t>(r));
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(msq_simulate_failure)
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return assemble(plan, objective, std::move(samples));
}

}  // namespace msq
