#include "msquant/cli.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "msquant/bench.hpp"
#include "msquant/engine.hpp"
#include "msquant/io.hpp"
#include "msquant/simulate.hpp"

namespace msq::cli {

namespace {

struct ModelFlags {
  std::string model = "gaussian";
  double sigma = 1.0;
  double lambda0 = 1.0;
  double p0 = 0.5;
  std::string penalty;  // empty: family default

  void attach(CLI::App& app) {
    app.add_option("--model", model, "gaussian | poisson | bernoulli")
        ->check(CLI::IsMember({"gaussian", "poisson", "bernoulli"}));
    app.add_option("--sigma", sigma, "Gaussian noise scale");
    app.add_option("--lambda0", lambda0, "Poisson null mean");
    app.add_option("--p0", p0, "Bernoulli null success probability");
    app.add_option("--penalty", penalty, "fms | none (default: fms for gaussian, none otherwise)")
        ->check(CLI::IsMember({"fms", "none"}));
  }

  ModelSpec spec(long long n) const {
    const bool gaussian = model == "gaussian";
    const std::string kind = penalty.empty() ? (gaussian ? "fms" : "none") : penalty;
    const Penalty pen = kind == "fms" ? Penalty::fms() : Penalty::zero();
    if (gaussian) return ModelSpec::gaussian(sigma, n, pen);
    if (model == "poisson") return ModelSpec::poisson(lambda0, n, pen);
    return ModelSpec::bernoulli(p0, n, pen);
  }
};

std::vector<double> parse_alphas(const std::string& text) {
  std::vector<double> alphas;
  for (const auto& field : io::split_list(text)) alphas.push_back(io::parse_number(field));
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  return alphas;
}

int cmd_stat(const std::string& input, const ModelFlags& flags, std::ostream& out,
             std::ostream& err) {
  std::vector<double> values;
  try {
    values = io::read_observations(input);
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  const auto n = static_cast<long long>(values.size());
  const Objective objective = make_objective(flags.spec(n));
  const ObservationSeries series(std::move(values));
  if (!series.feasible_for(objective.family())) {
    err << "error: observations are infeasible for the " << to_string(objective.family())
        << " model\n";
    return kInfeasible;
  }
  const StatisticResult r = evaluate_tn(series, objective);
  out << fmt::format("t_n={:.6f} i={} j={}\n", r.t_n, r.i, r.j);
  return kOk;
}

int cmd_quantile(const ModelFlags& flags, std::size_t n, std::size_t reps, const std::string& alphas,
                 std::uint64_t seed, const std::string& out_path, unsigned threads, std::ostream& out) {
  SimulationPlan plan;
  plan.model = flags.spec(static_cast<long long>(n));
  plan.n = n;
  plan.reps = reps;
  plan.seed = seed;
  plan.alphas = parse_alphas(alphas);
  const QuantileTable table = simulate_null(plan, threads);
  const std::string csv = io::quantile_csv(table);
  if (out_path.empty() || out_path == "-") {
    out << csv;
  } else {
    io::write_file_atomic(out_path, csv);
  }
  return kOk;
}

int cmd_bench(const ModelFlags& flags, const std::string& grid, std::size_t reps,
              const std::string& methods, std::uint64_t seed, std::size_t quadratic_cap,
              std::size_t cubic_cap, const std::string& out_path, std::ostream& out) {
  bench::BenchConfig config;
  config.grid = bench::parse_grid(grid);
  config.methods.clear();
  for (const auto& m : io::split_list(methods)) config.methods.push_back(bench::parse_method(m));
  config.reps = reps;
  config.seed = seed;
  config.quadratic_cap = quadratic_cap;
  config.cubic_cap = cubic_cap;
  config.model = flags.spec(1);
  const auto records = bench::run_bench(config);
  const std::string csv = bench::bench_csv(records, config);
  if (out_path.empty() || out_path == "-") {
    out << csv;
  } else {
    io::write_file_atomic(out_path, csv);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiscale change-point statistic and null quantile simulation"};
  app.require_subcommand(1);

  ModelFlags stat_flags, quant_flags, bench_flags;

  auto* stat = app.add_subcommand("stat", "Evaluate T_n on observations from a file");
  std::string input;
  stat->add_option("input", input, "Newline-delimited observations")->required();
  stat_flags.attach(*stat);

  auto* quant = app.add_subcommand("quantile", "Simulate null quantiles of T_n");
  std::size_t q_n = 0, q_reps = kDefaultReps;
  std::string q_alpha = "0.05", q_out;
  std::uint64_t q_seed = 0;
  unsigned q_threads = 0;
  quant->add_option("--n", q_n, "Sample size")->required()->check(CLI::PositiveNumber);
  quant->add_option("--reps", q_reps, "Monte Carlo repetitions")->check(CLI::PositiveNumber);
  quant->add_option("--alpha", q_alpha, "Comma-separated significance levels");
  quant->add_option("--seed", q_seed, "Random seed");
  quant->add_option("--out", q_out, "Output CSV path (default stdout)");
  quant->add_option("--threads", q_threads, "Worker threads (0 = all)");
  quant_flags.attach(*quant);

  auto* bench_cmd = app.add_subcommand("bench", "Time T_n evaluation methods over a grid of n");
  std::string b_grid, b_methods = "linear", b_out;
  std::size_t b_reps = 10, b_qcap = 50'000, b_ccap = 2'000;
  std::uint64_t b_seed = 1;
  bench_cmd->add_option("--n-grid", b_grid, "start:end:xK or start:end:+K")->required();
  bench_cmd->add_option("--reps", b_reps, "Repetitions per point")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--methods", b_methods, "Comma-separated: linear,quadratic,cubic");
  bench_cmd->add_option("--seed", b_seed, "Random seed");
  bench_cmd->add_option("--quadratic-cap", b_qcap, "Largest n for the quadratic method");
  bench_cmd->add_option("--cubic-cap", b_ccap, "Largest n for the cubic method");
  bench_cmd->add_option("--out", b_out, "Output CSV path (default stdout)");
  bench_flags.attach(*bench_cmd);

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (stat->parsed()) return cmd_stat(input, stat_flags, out, err);
    if (quant->parsed()) {
      return cmd_quantile(quant_flags, q_n, q_reps, q_alpha, q_seed, q_out, q_threads, out);
    }
    return cmd_bench(bench_flags, b_grid, b_reps, b_methods, b_seed, b_qcap, b_ccap, b_out, out);
  } catch (const io::IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace msq::cli
