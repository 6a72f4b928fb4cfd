// Command-line harness: learn weights, sort arrays, run the benchmark and
// resiliency sweeps, and analyze states or traces.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rlsort/agent.hpp"
#include "rlsort/analysis.hpp"
#include "rlsort/avi.hpp"
#include "rlsort/comparator.hpp"
#include "rlsort/harness.hpp"
#include "rlsort/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

using namespace rlsort;

std::string default_config_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("RLSORT_CONFIG")) return env;
  return "";
}

HarnessConfig config_or_default(const std::string& flag_value) {
  const std::string path = default_config_path(flag_value);
  if (path.empty()) return HarnessConfig{};
  return load_harness_config(path);
}

const char* reason_name(TerminationReason r) {
  switch (r) {
    case TerminationReason::sorted_detected: return "sorted_detected";
    case TerminationReason::step_cap: return "step_cap";
    case TerminationReason::interrupted: return "interrupted";
  }
  return "unknown";
}

int cmd_learn(const std::string& config_path, std::string out_path,
              std::optional<std::uint64_t> seed) {
  HarnessConfig cfg = config_or_default(config_path);
  if (seed) cfg.learn.seed = *seed;
  if (out_path.empty()) out_path = cfg.params_file;

  const LearnResult res = avi_learn(cfg.learn);
  const auto& th = res.params.theta;
  std::printf("learned theta = [%.6f, %.6f], gamma = %.3f\n", th(0), th(1),
              res.params.gamma);
  const bool stable = res.params.stability_precondition();
  std::printf("stability precondition (theta1 < 0 and theta2 < 0): %s\n",
              stable ? "satisfied" : "VIOLATED");

  ParamsFile pf;
  pf.params = res.params;
  pf.seed = cfg.learn.seed;
  pf.provenance = "avi iterations=" + std::to_string(cfg.learn.iterations) +
                  " samples_per_iter=" +
                  std::to_string(cfg.learn.samples_per_iter) +
                  " sample_dim=" + std::to_string(cfg.learn.sample_dim);
  write_params_json(out_path, pf);
  std::printf("wrote %s\n", out_path.c_str());
  return stable ? kExitOk : kExitAssertion;
}

int cmd_sort(const std::string& config_path, const std::string& params_path,
             const std::string& array_text, const std::string& input_file,
             double p, std::optional<std::uint64_t> seed,
             const std::string& trace_path, const std::string& heatmap_path,
             int cap_mult) {
  HarnessConfig cfg = config_or_default(config_path);
  const std::string theta_path =
      params_path.empty() ? cfg.params_file : params_path;
  const ParamsFile pf = read_params_json(theta_path);

  StateVector x = input_file.empty() ? parse_state(array_text)
                                     : read_state_file(input_file);
  const std::uint64_t s =
      seed ? *seed : derive_seed(cfg.master_seed, {hash_name("sort")});
  FaultyComparator cmp(p, s);
  const bool want_snapshots = !heatmap_path.empty();
  auto [out, trace] =
      rl_sort(x, pf.params, cmp,
              static_cast<long>(cap_mult) * x.size() * x.size(),
              want_snapshots);

  std::printf("%s\n", format_state(out).c_str());
  std::printf("moves=%ld steps=%zu termination=%s\n", trace.moves,
              trace.steps.size(), reason_name(trace.terminated_reason));
  if (!trace_path.empty()) write_trace_csv(trace_path, trace);
  if (!heatmap_path.empty()) write_heatmap_csv(heatmap_path, trace);
  return kExitOk;
}

ValueParams load_params_for_run(const HarnessConfig& cfg,
                                const std::string& params_path) {
  const std::string path = params_path.empty() ? cfg.params_file : params_path;
  return read_params_json(path).params;
}

int cmd_bench(const std::string& config_path, const std::string& params_path,
              const std::string& output, const std::string& datasets_dir) {
  HarnessConfig cfg = config_or_default(config_path);
  if (!output.empty()) cfg.bench.output = output;
  if (!datasets_dir.empty()) cfg.bench.datasets_dir = datasets_dir;
  const ValueParams vp = load_params_for_run(cfg, params_path);
  const auto rows = run_bench(cfg, vp);
  write_bench_csv(cfg.bench.output, rows);
  std::printf("wrote %zu rows to %s\n", rows.size(), cfg.bench.output.c_str());
  return kExitOk;
}

int cmd_resilience(const std::string& config_path,
                   const std::string& params_path, const std::string& output) {
  HarnessConfig cfg = config_or_default(config_path);
  if (!output.empty()) cfg.resilience.output = output;
  const ValueParams vp = load_params_for_run(cfg, params_path);
  const auto rows = run_resilience(cfg, vp);
  write_resilience_csv(cfg.resilience.output, rows);
  std::printf("wrote %zu rows to %s\n", rows.size(),
              cfg.resilience.output.c_str());
  return kExitOk;
}

int cmd_analyze(const std::string& config_path, const std::string& params_path,
                const std::string& array_text, const std::string& input_file,
                const std::string& trace_file, double p, double p_v,
                long trials, std::optional<std::uint64_t> seed,
                const std::string& out_path) {
  HarnessConfig cfg = config_or_default(config_path);

  if (!trace_file.empty()) {
    const std::vector<double> values = read_trace_values_csv(trace_file);
    const auto violations = check_monotonic(values);
    std::string body = "{\n  \"monotonicity_violations\": [";
    for (std::size_t t = 0; t < violations.size(); ++t) {
      if (t) body += ", ";
      body += std::to_string(violations[t]);
    }
    body += "],\n  \"steps\": " + std::to_string(values.size() - 1) + "\n}";
    if (out_path.empty()) {
      std::printf("%s\n", body.c_str());
    } else {
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot open " + out_path);
      out << body << "\n";
    }
    return kExitOk;
  }

  const ValueParams vp = load_params_for_run(cfg, params_path);
  StateVector x = input_file.empty() ? parse_state(array_text)
                                     : read_state_file(input_file);
  const std::uint64_t s =
      seed ? *seed : derive_seed(cfg.master_seed, {hash_name("analyze")});
  const AnalysisReport rep = analyze_state(x, vp, p, p_v, trials, s);
  const std::string body = analysis_report_json(rep);
  if (out_path.empty()) {
    std::printf("%s\n", body.c_str());
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    out << body << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resilient greedy sorting agent: learning, sorting, "
               "benchmarks, and fault-resiliency analysis"};
  app.require_subcommand(1);

  std::string config_path, params_path, output, array_text, input_file;
  std::string trace_path, heatmap_path, trace_file, out_path;
  double p = 0.0, p_v = 0.0;
  long trials = 10000;
  int cap_mult = 10;
  std::optional<std::uint64_t> seed;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path,
                    "JSON config (default: $RLSORT_CONFIG)");
  };

  CLI::App* learn = app.add_subcommand("learn", "learn value weights");
  add_common(learn);
  learn->add_option("--out", output, "weights JSON output path");
  learn->add_option("--seed", seed, "learning seed override");

  CLI::App* sort_cmd = app.add_subcommand("sort", "sort one array");
  add_common(sort_cmd);
  sort_cmd->add_option("--params", params_path, "weights JSON path");
  sort_cmd->add_option("array", array_text, "whitespace-separated values");
  sort_cmd->add_option("--input", input_file, "array file");
  sort_cmd->add_option("--p", p, "comparison fault rate");
  sort_cmd->add_option("--seed", seed, "comparator seed");
  sort_cmd->add_option("--trace", trace_path, "per-step CSV output");
  sort_cmd->add_option("--heatmap", heatmap_path, "snapshot CSV output");
  sort_cmd->add_option("--cap-mult", cap_mult, "step cap = mult * d^2");

  std::string datasets_dir;
  CLI::App* bench = app.add_subcommand("bench", "benchmark table CSV");
  add_common(bench);
  bench->add_option("--params", params_path, "weights JSON path");
  bench->add_option("--output", output, "CSV output override");
  bench->add_option("--dump-datasets", datasets_dir,
                    "directory for dataset JSONL audit files");

  CLI::App* resil =
      app.add_subcommand("resilience", "success/error vs fault rate CSV");
  add_common(resil);
  resil->add_option("--params", params_path, "weights JSON path");
  resil->add_option("--output", output, "CSV output override");

  CLI::App* analyze = app.add_subcommand("analyze", "state or trace report");
  add_common(analyze);
  analyze->add_option("--params", params_path, "weights JSON path");
  analyze->add_option("array", array_text, "whitespace-separated values");
  analyze->add_option("--input", input_file, "array file");
  analyze->add_option("--trace", trace_file, "trace CSV to check");
  analyze->add_option("--p", p, "comparison fault rate");
  analyze->add_option("--pv", p_v, "category-flip probability p_V");
  analyze->add_option("--trials", trials, "Monte Carlo trials");
  analyze->add_option("--seed", seed, "Monte Carlo seed");
  analyze->add_option("--out", out_path, "report JSON output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(learn)) return cmd_learn(config_path, output, seed);
    if (app.got_subcommand(sort_cmd))
      return cmd_sort(config_path, params_path, array_text, input_file, p,
                      seed, trace_path, heatmap_path, cap_mult);
    if (app.got_subcommand(bench))
      return cmd_bench(config_path, params_path, output, datasets_dir);
    if (app.got_subcommand(resil))
      return cmd_resilience(config_path, params_path, output);
    if (app.got_subcommand(analyze))
      return cmd_analyze(config_path, params_path, array_text, input_file,
                         trace_file, p, p_v, trials, seed, out_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
