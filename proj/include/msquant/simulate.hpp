#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "msquant/engine.hpp"
#include "msquant/model.hpp"
#include "msquant/rng.hpp"

namespace msq {

inline constexpr std::size_t kDefaultReps = 5000;

struct SimulationPlan {
  ModelSpec model;  // model.n is ignored; `n` below wins
  std::size_t n = 1;
  std::size_t reps = kDefaultReps;
  std::uint64_t seed = 0;
  std::vector<double> alphas{0.05};

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct QuantileTable {
  std::vector<double> samples;                        // sorted ascending
  std::vector<std::pair<double, double>> quantiles;  // (alpha, q_n(alpha)), alpha ascending
  std::string model;
  std::size_t n = 0;
  std::size_t reps = 0;
  std::uint64_t seed = 0;

  double quantile(double alpha) const;
};

/// samples[ceil(|samples| (1 - alpha))] with 1-based indexing, clamped to the
/// sample range. Throws std::invalid_argument for empty input or alpha
/// outside (0, 1).
double empirical_quantile(std::span<const double> sorted_samples, double alpha);

/// Objective used for the null simulation of `plan` (Gaussian noise fixed at sigma = 1).
Objective simulation_objective(const SimulationPlan& plan);

/// Draws repetition `rep` of the null model into `out` (resized to plan.n).
void draw_null_series(const SimulationPlan& plan, std::uint64_t rep, std::vector<double>& out);

/// Reference implementation: one repetition after another.
QuantileTable simulate_null_serial(const SimulationPlan& plan, Method method = Method::Linear);

/// Repetitions distributed over `workers` OpenMP threads (0 = runtime
/// default). Output is identical to simulate_null_serial for any worker count.
QuantileTable simulate_null(const SimulationPlan& plan, unsigned workers = 0,
                            Method method = Method::Linear);

}  // namespace msq
