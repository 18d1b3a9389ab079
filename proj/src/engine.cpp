#include "msquant/engine.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace msq {

ObservationSeries::ObservationSeries(std::vector<double> values, Summation summation)
    : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("observation series: no observations");
  cumsum_.resize(values_.size() + 1);
  cumsum_[0] = 0.0;
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t m = 0; m < values_.size(); ++m) {
    const double y = values_[m];
    if (!std::isfinite(y)) {
      throw std::invalid_argument(fmt::format("observation series: value {} is not finite", m + 1));
    }
    if (summation == Summation::Compensated) {
      const double t = y - comp;
      const double next = sum + t;
      comp = (next - sum) - t;
      sum = next;
    } else {
      sum += y;
    }
    cumsum_[m + 1] = sum;
  }
}

bool ObservationSeries::feasible_for(Family family) const {
  for (double y : values_) {
    switch (family) {
      case Family::Gaussian: break;
      case Family::Poisson:
        if (y < 0.0 || y != std::floor(y)) return false;
        break;
      case Family::Bernoulli:
        if (y != 0.0 && y != 1.0) return false;
        break;
    }
  }
  return true;
}

std::pair<std::vector<geom::Point2>, std::vector<geom::Point2>> build_pq(
    const ObservationSeries& series) {
  const std::size_t n = series.n();
  const auto cs = series.cumsum();
  std::vector<geom::Point2> P(n);
  std::vector<geom::Point2> Q(n);
  const double dn = static_cast<double>(n);
  for (std::size_t i = 1; i <= n; ++i) {
    P[i - 1] = {static_cast<double>(i), cs[i]};
    Q[i - 1] = {static_cast<double>(i) - dn, -cs[n - i]};
  }
  return {std::move(P), std::move(Q)};
}

namespace {

void check_inputs(const ObservationSeries& series, const Objective& objective) {
  if (static_cast<long long>(series.n()) != objective.n()) {
    throw std::invalid_argument(fmt::format("objective built for n={} applied to {} observations",
                                            objective.n(), series.n()));
  }
  if (!series.feasible_for(objective.family())) {
    throw std::invalid_argument(
        fmt::format("observations are infeasible for the {} family", to_string(objective.family())));
  }
}

// Lexicographic tie-break on (i, j) for equal values.
void consider(StatisticResult& best, bool& have, double value, std::size_t i, std::size_t j) {
  if (!have || value > best.t_n ||
      (value == best.t_n && (i < best.i || (i == best.i && j < best.j)))) {
    best.t_n = value;
    best.i = i;
    best.j = j;
    have = true;
  }
}

}  // namespace

StatisticResult evaluate_tn(const ObservationSeries& series, const Objective& objective,
                            geom::SweepStats* stats) {
  check_inputs(series, objective);
  const std::size_t n = series.n();
  StatisticResult best;
  if (n == 1) {
    best.t_n = objective(1.0, series.interval_sum(1, 1));
    best.candidates_evaluated = 1;
    if (stats) *stats = geom::SweepStats{0, 0, 1};
    return best;
  }

  const auto [P, Q] = build_pq(series);
  const geom::CandidateSet R = geom::constrained_minkowski_candidates(P, Q, stats);

  bool have = false;
  for (const geom::Candidate& c : R.points) {
    // p_j + q_k covers the interval [n - k + 1, j] in 1-based indices.
    const std::size_t j = c.p_index + 1;
    const std::size_t i = n - c.q_index;
    consider(best, have, objective(c.point.x1, c.point.x2), i, j);
  }
  best.candidates_evaluated = R.points.size();
  return best;
}

StatisticResult oracle_tn(const ObservationSeries& series, const Objective& objective) {
  check_inputs(series, objective);
  const std::size_t n = series.n();
  StatisticResult best;
  bool have = false;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      const double ell = static_cast<double>(j - i + 1);
      consider(best, have, objective(ell, series.interval_sum(i, j)), i, j);
    }
  }
  best.candidates_evaluated = n * (n + 1) / 2;
  return best;
}

StatisticResult oracle_tn_naive(const ObservationSeries& series, const Objective& objective) {
  check_inputs(series, objective);
  const std::size_t n = series.n();
  const auto y = series.values();
  StatisticResult best;
  bool have = false;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      double s = 0.0;
      for (std::size_t k = i; k <= j; ++k) s += y[k - 1];
      consider(best, have, objective(static_cast<double>(j - i + 1), s), i, j);
    }
  }
  best.candidates_evaluated = n * (n + 1) / 2;
  return best;
}

StatisticResult evaluate(Method method, const ObservationSeries& series, const Objective& objective) {
  switch (method) {
    case Method::Linear: return evaluate_tn(series, objective);
    case Method::Quadratic: return oracle_tn(series, objective);
    case Method::Cubic: return oracle_tn_naive(series, objective);
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace msq
