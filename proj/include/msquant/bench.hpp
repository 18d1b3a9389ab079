#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "msquant/engine.hpp"
#include "msquant/model.hpp"

namespace msq::bench {

struct BenchRecord {
  std::size_t n = 0;
  Method method = Method::Linear;
  double mean_seconds = 0.0;
  std::size_t reps = 0;
  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

std::string method_name(Method method);

/// Throws std::invalid_argument for names other than linear, quadratic, cubic.
Method parse_method(std::string_view name);

/// "a:b:xk" gives a, a k, a k^2, ... up to b; "a:b:+k" steps by k. The upper
/// end b is appended when the progression does not land on it.
std::vector<std::size_t> parse_grid(std::string_view spec);

struct BenchConfig {
  std::vector<std::size_t> grid;
  std::vector<Method> methods{Method::Linear};
  std::size_t reps = 10;
  std::uint64_t seed = 1;
  std::size_t quadratic_cap = 50'000;
  std::size_t cubic_cap = 2'000;
  ModelSpec model = ModelSpec::gaussian(1.0, 1);
};

/// Mean wall time of one T_n evaluation per (n, method), with fresh null data
/// per repetition. Data generation is excluded from the timing. Methods above
/// their cap are skipped.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

/// Least-squares slope of log(mean_seconds) against log(n).
double loglog_slope(const std::vector<BenchRecord>& records);

std::string bench_csv(const std::vector<BenchRecord>& records, const BenchConfig& config);
std::vector<BenchRecord> parse_bench_csv(std::string_view text);

}  // namespace msq::bench
