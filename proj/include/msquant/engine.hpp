#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "msquant/geometry.hpp"
#include "msquant/model.hpp"

namespace msq {

enum class Summation { Plain, Compensated };

/// Observations Y_1..Y_n with cumulative sums cs_0 = 0, cs_m = Y_1 + ... + Y_m.
class ObservationSeries {
 public:
  /// Throws std::invalid_argument for empty input or non-finite values.
  explicit ObservationSeries(std::vector<double> values, Summation summation = Summation::Plain);

  std::size_t n() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  std::span<const double> cumsum() const { return cumsum_; }

  /// Sum of Y_i..Y_j (1-based, inclusive) as a cumulative-sum difference.
  double interval_sum(std::size_t i, std::size_t j) const { return cumsum_[j] - cumsum_[i - 1]; }

  /// Poisson: nonnegative integers; Bernoulli: values in {0, 1}; Gaussian: any.
  bool feasible_for(Family family) const;

 private:
  std::vector<double> values_;
  std::vector<double> cumsum_;
};

struct StatisticResult {
  double t_n = 0.0;
  std::size_t i = 1;  // 1-based start of the maximizing interval
  std::size_t j = 1;  // 1-based inclusive end
  std::size_t candidates_evaluated = 0;
};

/// P = {(i, cs_i)} and Q = {(i - n, -cs_{n-i})} for i = 1..n, so that
/// p_j + q_{n-i+1} = (j - i + 1, cs_j - cs_{i-1}).
std::pair<std::vector<geom::Point2>, std::vector<geom::Point2>> build_pq(
    const ObservationSeries& series);

/// Maximum of the objective over all intervals, evaluated only on the
/// constrained-Minkowski candidate set. O(n) time and memory.
///
/// Ties are broken towards the smallest start, then the smallest end.
/// Throws std::invalid_argument if the data are infeasible for the
/// objective's family or the objective was built for a different n.
StatisticResult evaluate_tn(const ObservationSeries& series, const Objective& objective,
                            geom::SweepStats* stats = nullptr);

/// Double loop over all intervals using cumulative-sum differences, O(n^2).
StatisticResult oracle_tn(const ObservationSeries& series, const Objective& objective);

/// Triple loop that re-sums every interval, O(n^3). Test oracle only.
StatisticResult oracle_tn_naive(const ObservationSeries& series, const Objective& objective);

enum class Method { Linear, Quadratic, Cubic };

StatisticResult evaluate(Method method, const ObservationSeries& series, const Objective& objective);

}  // namespace msq
