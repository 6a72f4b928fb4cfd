#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rlsort/avi.hpp"
#include "rlsort/experiment.hpp"
#include "rlsort/valuation.hpp"

namespace rlsort {

enum class Algorithm { rl, bubble, quick, selection };

std::string to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& name);

/// Benchmark plan: the cross product algorithms x kinds x dims x fault
/// rates, `trials` arrays per cell.
struct BenchConfig {
  std::vector<Algorithm> algorithms{Algorithm::rl, Algorithm::bubble,
                                    Algorithm::quick, Algorithm::selection};
  std::vector<DatasetKind> kinds{DatasetKind::sorted, DatasetKind::reversed,
                                 DatasetKind::gaussian, DatasetKind::random};
  std::vector<int> dims{5, 10};
  std::vector<double> fault_rates{0.0, 0.05};
  int trials = 100;
  double scale = 100.0;
  double sigma = 0.1;
  int step_cap_multiplier = 10;
  std::string output = "bench.csv";
  std::string datasets_dir;  // when set, each cell's dataset is audited there
};

/// Fault-rate sweep plan (success and distance-from-sorted vs p).
struct ResilienceConfig {
  std::vector<Algorithm> algorithms{Algorithm::rl, Algorithm::bubble,
                                    Algorithm::quick, Algorithm::selection};
  std::vector<int> dims{10};
  std::vector<double> fault_rates{0.0,  0.05, 0.1,  0.15, 0.2, 0.25,
                                  0.3,  0.35, 0.4,  0.45, 0.5};
  int trials = 100;
  double scale = 100.0;
  int step_cap_multiplier = 10;
  std::string output = "resilience.csv";
};

struct HarnessConfig {
  std::uint64_t master_seed = 42;
  std::string params_file = "theta.json";
  LearnConfig learn;
  BenchConfig bench;
  ResilienceConfig resilience;
};

/// Parses the single-document JSON config (sections: learn, bench,
/// resilience). Missing keys keep their defaults. The learn seed defaults
/// to a value derived from master_seed when the file does not pin one.
HarnessConfig load_harness_config(const std::string& path);

struct TrialResult {
  StateVector output;
  long moves = 0;
  bool capped = false;
};

/// One sorting run of `alg` on x with fault rate p. The RL agent's step
/// cap and bubble's pass cap use step_cap_multiplier.
TrialResult run_trial(Algorithm alg, const StateVector& x,
                      const ValueParams& vp, double p, std::uint64_t seed,
                      int step_cap_multiplier);

struct BenchRow {
  Algorithm algorithm;
  DatasetKind kind;
  int dim;
  double p;
  StatSummary moves;
  StatSummary error;
  double success_rate;
};

/// Deterministic given (config, master seed): the dataset of a (kind, dim)
/// cell is shared across algorithms and fault rates, and per-trial
/// comparator seeds are derived from the full cell identity so extending
/// the plan never shifts existing cells.
std::vector<BenchRow> run_bench(const HarnessConfig& cfg,
                                const ValueParams& vp);

void write_bench_csv(const std::string& path,
                     const std::vector<BenchRow>& rows);

struct ResilienceRow {
  Algorithm algorithm;
  int dim;
  double p;
  double success_rate;
  StatSummary error;
};

std::vector<ResilienceRow> run_resilience(const HarnessConfig& cfg,
                                          const ValueParams& vp);

void write_resilience_csv(const std::string& path,
                          const std::vector<ResilienceRow>& rows);

}  // namespace rlsort
