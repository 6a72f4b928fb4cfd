#include "rlsort/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "rlsort/agent.hpp"
#include "rlsort/baselines.hpp"
#include "rlsort/comparator.hpp"
#include "rlsort/io.hpp"

namespace rlsort {

using nlohmann::json;

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::rl: return "rl";
    case Algorithm::bubble: return "bubble";
    case Algorithm::quick: return "quick";
    case Algorithm::selection: return "selection";
  }
  return "rl";
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "rl") return Algorithm::rl;
  if (name == "bubble") return Algorithm::bubble;
  if (name == "quick") return Algorithm::quick;
  if (name == "selection") return Algorithm::selection;
  throw std::invalid_argument("unknown algorithm: " + name);
}

namespace {

std::vector<Algorithm> parse_algorithms(const json& arr) {
  std::vector<Algorithm> out;
  for (const auto& a : arr) out.push_back(algorithm_from_string(a));
  return out;
}

std::vector<DatasetKind> parse_kinds(const json& arr) {
  std::vector<DatasetKind> out;
  for (const auto& k : arr) out.push_back(dataset_kind_from_string(k));
  return out;
}

void check_rates(const std::vector<double>& rates) {
  for (double p : rates)
    if (p < 0.0 || p > 1.0)
      throw std::invalid_argument("fault rates must lie in [0,1]");
}

std::uint64_t dataset_seed(std::uint64_t master, DatasetKind kind, int dim) {
  return derive_seed(master, {hash_name("dataset"), hash_name(to_string(kind)),
                              static_cast<std::uint64_t>(dim)});
}

std::uint64_t trial_seed(std::uint64_t master, Algorithm alg, DatasetKind kind,
                         int dim, double p, int trial) {
  return derive_seed(
      master,
      {hash_name(to_string(alg)), hash_name(to_string(kind)),
       static_cast<std::uint64_t>(dim),
       static_cast<std::uint64_t>(std::llround(p * 1e9)),
       static_cast<std::uint64_t>(trial)});
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

HarnessConfig load_harness_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  json j = json::parse(in);

  HarnessConfig cfg;
  cfg.master_seed = j.value("master_seed", cfg.master_seed);
  cfg.params_file = j.value("params_file", cfg.params_file);

  cfg.learn.seed = derive_seed(cfg.master_seed, {hash_name("learn")});
  if (j.contains("learn")) {
    const json& l = j["learn"];
    cfg.learn.sample_dim = l.value("sample_dim", cfg.learn.sample_dim);
    cfg.learn.samples_per_iter =
        l.value("samples_per_iter", cfg.learn.samples_per_iter);
    cfg.learn.iterations = l.value("iterations", cfg.learn.iterations);
    cfg.learn.gamma = l.value("gamma", cfg.learn.gamma);
    cfg.learn.seed = l.value("seed", cfg.learn.seed);
    cfg.learn.resample_each_iter =
        l.value("resample_each_iter", cfg.learn.resample_each_iter);
  }
  if (j.contains("bench")) {
    const json& b = j["bench"];
    if (b.contains("algorithms"))
      cfg.bench.algorithms = parse_algorithms(b["algorithms"]);
    if (b.contains("kinds")) cfg.bench.kinds = parse_kinds(b["kinds"]);
    if (b.contains("dims")) cfg.bench.dims = b["dims"].get<std::vector<int>>();
    if (b.contains("fault_rates"))
      cfg.bench.fault_rates = b["fault_rates"].get<std::vector<double>>();
    cfg.bench.trials = b.value("trials", cfg.bench.trials);
    cfg.bench.scale = b.value("scale", cfg.bench.scale);
    cfg.bench.sigma = b.value("sigma", cfg.bench.sigma);
    cfg.bench.step_cap_multiplier =
        b.value("step_cap_multiplier", cfg.bench.step_cap_multiplier);
    cfg.bench.output = b.value("output", cfg.bench.output);
    cfg.bench.datasets_dir = b.value("datasets_dir", cfg.bench.datasets_dir);
  }
  if (j.contains("resilience")) {
    const json& r = j["resilience"];
    if (r.contains("algorithms"))
      cfg.resilience.algorithms = parse_algorithms(r["algorithms"]);
    if (r.contains("dims"))
      cfg.resilience.dims = r["dims"].get<std::vector<int>>();
    if (r.contains("fault_rates"))
      cfg.resilience.fault_rates =
          r["fault_rates"].get<std::vector<double>>();
    cfg.resilience.trials = r.value("trials", cfg.resilience.trials);
    cfg.resilience.scale = r.value("scale", cfg.resilience.scale);
    cfg.resilience.step_cap_multiplier = r.value(
        "step_cap_multiplier", cfg.resilience.step_cap_multiplier);
    cfg.resilience.output = r.value("output", cfg.resilience.output);
  }
  check_rates(cfg.bench.fault_rates);
  check_rates(cfg.resilience.fault_rates);
  if (cfg.bench.trials < 1 || cfg.resilience.trials < 1)
    throw std::invalid_argument("trials must be >= 1");
  return cfg;
}

TrialResult run_trial(Algorithm alg, const StateVector& x,
                      const ValueParams& vp, double p, std::uint64_t seed,
                      int step_cap_multiplier) {
  FaultyComparator cmp(p, seed);
  const int d = static_cast<int>(x.size());
  switch (alg) {
    case Algorithm::rl: {
      auto [out, trace] =
          rl_sort(x, vp, cmp, static_cast<long>(step_cap_multiplier) * d * d);
      return {std::move(out), trace.moves,
              trace.terminated_reason == TerminationReason::step_cap};
    }
    case Algorithm::bubble: {
      SortOutcome o = bubble_sort(x, cmp, step_cap_multiplier);
      return {std::move(o.result), o.moves, o.capped};
    }
    case Algorithm::quick: {
      SortOutcome o = quick_sort(x, cmp);
      return {std::move(o.result), o.moves, o.capped};
    }
    case Algorithm::selection: {
      SortOutcome o = selection_sort(x, cmp);
      return {std::move(o.result), o.moves, o.capped};
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<BenchRow> run_bench(const HarnessConfig& cfg,
                                const ValueParams& vp) {
  const BenchConfig& b = cfg.bench;
  std::vector<BenchRow> rows;
  for (Algorithm alg : b.algorithms) {
    for (DatasetKind kind : b.kinds) {
      for (int dim : b.dims) {
        const Dataset ds =
            gen_dataset(kind, dim, b.trials, {b.sigma, b.scale},
                        dataset_seed(cfg.master_seed, kind, dim));
        // datasets are shared across algorithms; audit them once
        if (!b.datasets_dir.empty() && alg == b.algorithms.front())
          write_dataset_jsonl(b.datasets_dir + "/" + to_string(kind) + "_d" +
                                  std::to_string(dim) + ".jsonl",
                              ds);
        for (double p : b.fault_rates) {
          std::vector<double> moves, errors;
          int successes = 0;
          for (int t = 0; t < b.trials; ++t) {
            const StateVector& x = ds.arrays[t];
            StateVector ref = x;
            std::sort(ref.data(), ref.data() + ref.size());
            const TrialResult r =
                run_trial(alg, x, vp, p,
                          trial_seed(cfg.master_seed, alg, kind, dim, p, t),
                          b.step_cap_multiplier);
            moves.push_back(static_cast<double>(r.moves));
            errors.push_back(error_distance(r.output, ref));
            if (success(r.output, ref)) ++successes;
          }
          rows.push_back({alg, kind, dim, p, summarize(moves),
                          summarize(errors),
                          static_cast<double>(successes) / b.trials});
        }
      }
    }
  }
  return rows;
}

void write_bench_csv(const std::string& path,
                     const std::vector<BenchRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "algorithm,kind,dim,p,moves_mean,moves_std,error_mean,error_std,"
         "success_rate\n";
  for (const BenchRow& r : rows) {
    out << to_string(r.algorithm) << "," << to_string(r.kind) << "," << r.dim
        << "," << fmt(r.p) << "," << fmt(r.moves.mean) << ","
        << fmt(r.moves.stddev) << "," << fmt(r.error.mean) << ","
        << fmt(r.error.stddev) << "," << fmt(r.success_rate) << "\n";
  }
}

std::vector<ResilienceRow> run_resilience(const HarnessConfig& cfg,
                                          const ValueParams& vp) {
  const ResilienceConfig& rc = cfg.resilience;
  std::vector<ResilienceRow> rows;
  for (Algorithm alg : rc.algorithms) {
    for (int dim : rc.dims) {
      const Dataset ds = gen_dataset(
          DatasetKind::random, dim, rc.trials, {0.1, rc.scale},
          dataset_seed(cfg.master_seed, DatasetKind::random, dim));
      for (double p : rc.fault_rates) {
        std::vector<double> errors;
        int successes = 0;
        for (int t = 0; t < rc.trials; ++t) {
          const StateVector& x = ds.arrays[t];
          StateVector ref = x;
          std::sort(ref.data(), ref.data() + ref.size());
          const TrialResult r = run_trial(
              alg, x, vp, p,
              trial_seed(cfg.master_seed, alg, DatasetKind::random, dim, p, t),
              rc.step_cap_multiplier);
          errors.push_back(error_distance(r.output, ref));
          if (success(r.output, ref)) ++successes;
        }
        rows.push_back({alg, dim, p,
                        static_cast<double>(successes) / rc.trials,
                        summarize(errors)});
      }
    }
  }
  return rows;
}

void write_resilience_csv(const std::string& path,
                          const std::vector<ResilienceRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "algorithm,dim,p,success_rate,error_mean,error_std\n";
  for (const ResilienceRow& r : rows) {
    out << to_string(r.algorithm) << "," << r.dim << "," << fmt(r.p) << ","
        << fmt(r.success_rate) << "," << fmt(r.error.mean) << ","
        << fmt(r.error.stddev) << "\n";
  }
}

}  // namespace rlsort
