#include "msquant/bench.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "msquant/io.hpp"
#include "msquant/simulate.hpp"

namespace msq::bench {

std::string method_name(Method method) {
  switch (method) {
    case Method::Linear: return "linear";
    case Method::Quadratic: return "quadratic";
    case Method::Cubic: return "cubic";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "linear") return Method::Linear;
  if (name == "quadratic") return Method::Quadratic;
  if (name == "cubic") return Method::Cubic;
  throw std::invalid_argument(fmt::format("unknown method '{}'", name));
}

namespace {

std::size_t parse_size(std::string_view s) {
  const double v = io::parse_number(s);
  if (!(v >= 1.0) || v != std::floor(v) || v > 1e15) {
    throw std::invalid_argument(fmt::format("grid: '{}' is not a positive integer", s));
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

std::vector<std::size_t> parse_grid(std::string_view spec) {
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
  if (c2 == std::string_view::npos) {
    throw std::invalid_argument(fmt::format("grid '{}': expected start:end:step", spec));
  }
  std::size_t lo, hi;
  try {
    lo = parse_size(spec.substr(0, c1));
    hi = parse_size(spec.substr(c1 + 1, c2 - c1 - 1));
  } catch (const io::ParseError& e) {
    throw std::invalid_argument(fmt::format("grid '{}': {}", spec, e.what()));
  }
  std::string_view step = spec.substr(c2 + 1);
  if (lo > hi || step.size() < 2 || (step[0] != 'x' && step[0] != '+')) {
    throw std::invalid_argument(fmt::format("grid '{}': expected start<=end and step xK or +K", spec));
  }
  const bool geometric = step[0] == 'x';
  double k;
  try {
    k = io::parse_number(step.substr(1));
  } catch (const io::ParseError& e) {
    throw std::invalid_argument(fmt::format("grid '{}': {}", spec, e.what()));
  }
  if (geometric ? !(k > 1.0) : !(k >= 1.0)) {
    throw std::invalid_argument(fmt::format("grid '{}': step must increase n", spec));
  }
  std::vector<std::size_t> grid;
  double v = static_cast<double>(lo);
  while (v <= static_cast<double>(hi) + 0.5) {
    const auto n = static_cast<std::size_t>(std::llround(v));
    if (grid.empty() || grid.back() != n) grid.push_back(n);
    v = geometric ? v * k : v + k;
  }
  if (grid.back() != hi) grid.push_back(hi);
  return grid;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.reps < 1) throw std::invalid_argument("bench: reps must be at least 1");
  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> records;
  for (std::size_t n : config.grid) {
    SimulationPlan plan;
    plan.model = config.model;
    plan.n = n;
    plan.reps = config.reps;
    plan.seed = config.seed;
    const Objective objective = simulation_objective(plan);
    for (Method method : config.methods) {
      if (method == Method::Quadratic && n > config.quadratic_cap) continue;
      if (method == Method::Cubic && n > config.cubic_cap) continue;
      double total = 0.0;
      double sink = 0.0;
      std::vector<double> values;
      for (std::size_t r = 0; r < config.reps; ++r) {
        draw_null_series(plan, r, values);
        const ObservationSeries series(values);
        const auto start = clock::now();
        sink += evaluate(method, series, objective).t_n;
        const auto stop = clock::now();
        total += std::chrono::duration<double>(stop - start).count();
      }
      if (!std::isfinite(sink)) throw std::runtime_error("bench: non-finite statistic");
      const double mean = std::max(total / static_cast<double>(config.reps), 1e-9);
      records.push_back({n, method, mean, config.reps});
    }
  }
  return records;
}

double loglog_slope(const std::vector<BenchRecord>& records) {
  if (records.size() < 2) throw std::invalid_argument("loglog_slope: need at least two records");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(records.size());
  for (const auto& r : records) {
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(r.mean_seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("loglog_slope: all n identical");
  return (m * sxy - sx * sy) / denom;
}

std::string bench_csv(const std::vector<BenchRecord>& records, const BenchConfig& config) {
  std::string out;
  out += fmt::format("# model={}\n", to_string(config.model.family));
  out += fmt::format("# reps={}\n", config.reps);
  out += fmt::format("# seed={}\n", config.seed);
  out += "n,method,mean_seconds,reps\n";
  for (const auto& r : records) {
    out += fmt::format("{},{},{},{}\n", r.n, method_name(r.method), io::format_number(r.mean_seconds),
                       r.reps);
  }
  return out;
}

std::vector<BenchRecord> parse_bench_csv(std::string_view text) {
  std::vector<BenchRecord> records;
  bool header = false;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!header) {
      if (line != "n,method,mean_seconds,reps") throw io::ParseError("bench csv: missing header");
      header = true;
      continue;
    }
    const auto f = io::split_list(line);
    if (f.size() != 4) throw io::ParseError("bench csv: expected four fields");
    BenchRecord r;
    r.n = static_cast<std::size_t>(io::parse_number(f[0]));
    try {
      r.method = parse_method(f[1]);
    } catch (const std::invalid_argument& e) {
      throw io::ParseError(e.what());
    }
    r.mean_seconds = io::parse_number(f[2]);
    r.reps = static_cast<std::size_t>(io::parse_number(f[3]));
    records.push_back(r);
  }
  if (!header) throw io::ParseError("bench csv: missing header");
  return records;
}

}  // namespace msq::bench
