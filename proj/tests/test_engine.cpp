#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "msquant/engine.hpp"
#include "support/oracles.hpp"

using namespace msq;
using geom::Point2;

namespace {

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("observation series invariants") {
  const ObservationSeries s({1.0, -2.0, 0.5});
  REQUIRE(s.cumsum().size() == 4);
  CHECK(s.cumsum()[0] == 0.0);
  for (std::size_t m = 1; m <= 3; ++m) {
    CHECK(s.cumsum()[m] - s.cumsum()[m - 1] == doctest::Approx(s.values()[m - 1]));
  }
  CHECK_THROWS_AS(ObservationSeries({}), std::invalid_argument);
  CHECK_THROWS_AS(ObservationSeries({1.0, NAN}), std::invalid_argument);
  CHECK(ObservationSeries({0, 3, 1}).feasible_for(Family::Poisson));
  CHECK_FALSE(ObservationSeries({0, -1}).feasible_for(Family::Poisson));
  CHECK_FALSE(ObservationSeries({0.5}).feasible_for(Family::Poisson));
  CHECK_FALSE(ObservationSeries({0, 2}).feasible_for(Family::Bernoulli));
}

TEST_CASE("compensated cumulative sums") {
  std::vector<double> y(1000, 0.1);
  y.insert(y.begin(), 1e16);
  y.push_back(-1e16);
  const ObservationSeries plain(y);
  const ObservationSeries comp(y, Summation::Compensated);
  const double exact = 100.0;
  CHECK(std::abs(comp.cumsum().back() - exact) < std::abs(plain.cumsum().back() - exact) + 1e-9);
  CHECK(comp.cumsum().back() == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("build_pq small cases") {
  auto [P, Q] = build_pq(ObservationSeries({1.0, 2.0}));
  CHECK(P == std::vector<Point2>{{1, 1}, {2, 3}});
  CHECK(Q == std::vector<Point2>{{-1, -1}, {0, 0}});
  auto [P1, Q1] = build_pq(ObservationSeries({0.0}));
  CHECK(P1 == std::vector<Point2>{{1, 0}});
  CHECK(Q1 == std::vector<Point2>{{0, 0}});
}

TEST_CASE("build_pq maps admissible pairs onto intervals exactly") {
  const std::vector<double> y{1.0, -1.0, 2.0};
  const ObservationSeries s(y);
  const auto [P, Q] = build_pq(s);
  const std::size_t n = y.size();
  int admissible = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t k = 1; k <= n; ++k) {
      const Point2 sum = P[j - 1] + Q[k - 1];
      const std::size_t i = n - k + 1;
      if (i <= j) {
        ++admissible;
        double direct = 0.0;
        for (std::size_t m = i; m <= j; ++m) direct += y[m - 1];
        CHECK(sum.x1 == static_cast<double>(j - i + 1));
        CHECK(sum.x2 == direct);
      } else {
        CHECK(sum.x1 <= 0.0);
      }
    }
  }
  CHECK(admissible == 6);
}

TEST_CASE("evaluate_tn examples") {
  const auto zeros = ObservationSeries({0, 0, 0, 0});
  const auto r0 = evaluate_tn(zeros, gaussian_objective(1.0, 4));
  CHECK(r0.t_n == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-15));
  CHECK(r0.i == 1);
  CHECK(r0.j == 4);

  const auto r1 = evaluate_tn(ObservationSeries({1, 2}), gaussian_objective(1.0, 2));
  CHECK(r1.t_n == doctest::Approx(3.0 / std::sqrt(2.0) - std::sqrt(2.0)).epsilon(1e-14));
  CHECK(r1.i == 1);
  CHECK(r1.j == 2);

  const auto r2 = evaluate_tn(ObservationSeries({0.0}), gaussian_objective(1.0, 1));
  CHECK(r2.t_n == doctest::Approx(-std::sqrt(2.0)));
  CHECK(r2.candidates_evaluated == 1);
}

TEST_CASE("oracle examples") {
  const auto pois = general_objective(ModelSpec::poisson(1.0, 3, Penalty::zero()));
  const auto ones = ObservationSeries({1, 1, 1});
  CHECK(std::abs(oracle_tn(ones, pois).t_n) <= 1e-12);
  CHECK(std::abs(oracle_tn_naive(ones, pois).t_n) <= 1e-12);
  const auto r = evaluate_tn(ones, pois);
  CHECK(std::abs(r.t_n) <= 1e-12);
  CHECK(r.i == 1);
  CHECK(r.j == 1);

  const auto pois2 = general_objective(ModelSpec::poisson(1.0, 2, Penalty::zero()));
  const auto y40 = ObservationSeries({4, 0});
  const double expected = 4.0 * std::log(4.0) - 3.0;
  CHECK(oracle_tn(y40, pois2).t_n == doctest::Approx(expected).epsilon(1e-14));
  CHECK(testing::loglik_sup_search(Family::Poisson, 0.0, 1.0, 4.0) ==
        doctest::Approx(expected).epsilon(1e-10));
  const auto lin = evaluate_tn(y40, pois2);
  CHECK(lin.t_n == doctest::Approx(expected).epsilon(1e-14));
  CHECK(lin.i == 1);
  CHECK(lin.j == 1);

  CHECK(oracle_tn_naive(ObservationSeries({0.0}), gaussian_objective(1.0, 1)).t_n ==
        doctest::Approx(-std::sqrt(2.0)));
}

TEST_CASE("infeasible data and mismatched n are rejected") {
  const auto pois = general_objective(ModelSpec::poisson(1.0, 2, Penalty::zero()));
  CHECK_THROWS_AS(evaluate_tn(ObservationSeries({1, -1}), pois), std::invalid_argument);
  CHECK_THROWS_AS(oracle_tn(ObservationSeries({1, 0.5}), pois), std::invalid_argument);
  const auto bern = general_objective(ModelSpec::bernoulli(0.5, 2, Penalty::zero()));
  CHECK_THROWS_AS(evaluate_tn(ObservationSeries({1, 2}), bern), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_tn(ObservationSeries({1, 2, 3}), gaussian_objective(1.0, 2)),
                  std::invalid_argument);
}

TEST_CASE("linear evaluation matches the quadratic oracle") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::size_t> len(1, 120);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = len(rng);
    const int fam = trial % 3;
    std::vector<double> y;
    Objective h = gaussian_objective(1.0, static_cast<long long>(n));
    if (fam == 0) {
      y = testing::gaussian_series(n, rng);
    } else if (fam == 1) {
      y = testing::poisson_series(n, 1.0, rng);
      h = general_objective(ModelSpec::poisson(1.0, static_cast<long long>(n), Penalty::zero()));
    } else {
      y = testing::bernoulli_series(n, 0.5, rng);
      h = general_objective(ModelSpec::bernoulli(0.5, static_cast<long long>(n), Penalty::zero()));
    }
    const ObservationSeries s(y);
    const auto fast = evaluate_tn(s, h);
    const auto slow = oracle_tn(s, h);
    CAPTURE(trial);
    CHECK(rel_diff(fast.t_n, slow.t_n) <= 1e-9);
    // The reported interval attains the value.
    CHECK(h(static_cast<double>(fast.j - fast.i + 1), s.interval_sum(fast.i, fast.j)) == fast.t_n);
    CHECK(fast.candidates_evaluated <= 3 * n);
  }
}

TEST_CASE("custom concave penalties and non-null Gaussian parameters") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial * 3;
    const auto nn = static_cast<long long>(n);
    const auto y = testing::poisson_series(n, 2.0, rng);
    const auto h = general_objective(ModelSpec::poisson(
        1.5, nn, Penalty::custom_concave([](double l) { return 0.5 * std::sqrt(l); })));
    const ObservationSeries s(y);
    CHECK(rel_diff(evaluate_tn(s, h).t_n, oracle_tn(s, h).t_n) <= 1e-9);

    auto g = ModelSpec::gaussian(2.0, nn, Penalty::custom_concave([](double l) { return std::log(l); }));
    g.null_param = 0.3;
    const auto hg = general_objective(g);
    auto yg = testing::gaussian_series(n, rng);
    const ObservationSeries sg(yg);
    CHECK(rel_diff(evaluate_tn(sg, hg).t_n, oracle_tn(sg, hg).t_n) <= 1e-9);
  }
}

TEST_CASE("maximum over candidates equals maximum over every admissible sum") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 150 + trial;
    const ObservationSeries s(testing::gaussian_series(n, rng));
    const auto h = gaussian_objective(1.0, static_cast<long long>(n));
    const auto [P, Q] = build_pq(s);
    double best_all = -INFINITY;
    for (const auto& z : testing::constrained_sums(P, Q)) best_all = std::max(best_all, h(z.x1, z.x2));
    CHECK(evaluate_tn(s, h).t_n == best_all);
  }
}

TEST_CASE("sigma invariance") {
  std::mt19937_64 rng(404);
  const auto y = testing::gaussian_series(300, rng);
  const double base = evaluate_tn(ObservationSeries(y), gaussian_objective(1.0, 300)).t_n;
  for (double c : {0.1, 1.0, 10.0}) {
    std::vector<double> scaled(y);
    for (auto& v : scaled) v *= c;
    const double t = evaluate_tn(ObservationSeries(scaled), gaussian_objective(c, 300)).t_n;
    CHECK(std::abs(t - base) <= 1e-12);
  }
}

TEST_CASE("statistic depends on the order of observations") {
  const auto h = gaussian_objective(1.0, 4);
  const double clustered = evaluate_tn(ObservationSeries({2, 2, -2, -2}), h).t_n;
  const double alternating = evaluate_tn(ObservationSeries({2, -2, 2, -2}), h).t_n;
  CHECK(clustered > alternating + 0.1);
}

TEST_CASE("working memory is linear in n") {
  std::mt19937_64 rng(505);
  for (std::size_t n : {1000u, 20000u, 200000u}) {
    geom::SweepStats st;
    evaluate_tn(ObservationSeries(testing::gaussian_series(n, rng)),
                gaussian_objective(1.0, static_cast<long long>(n)), &st);
    CHECK(st.peak_live_points <= 12 * n);
  }
}
