// Acceptance suite: runs every contract criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rlsort/agent.hpp"
#include "rlsort/analysis.hpp"
#include "rlsort/avi.hpp"
#include "rlsort/baselines.hpp"
#include "rlsort/comparator.hpp"
#include "rlsort/experiment.hpp"
#include "rlsort/harness.hpp"
#include "rlsort/io.hpp"

using namespace rlsort;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kMasterSeed = 42;

double unit_draw(std::mt19937_64& rng) {
  double u;
  do {
    u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  } while (u == 0.0);
  return u;
}

StateVector random_state(int d, std::mt19937_64& rng) {
  StateVector x(d);
  for (int k = 0; k < d; ++k) x(k) = unit_draw(rng);
  return x;
}

bool exact_equal(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index k = 0; k < a.size(); ++k)
    if (a(k) != b(k)) return false;
  return true;
}

StateVector sorted_copy(const StateVector& x) {
  StateVector y = x;
  std::sort(y.data(), y.data() + y.size());
  return y;
}

/// One benchmark cell through the production harness path.
BenchRow run_cell(const ValueParams& vp, Algorithm alg, DatasetKind kind,
                  int dim, double p, int trials, double scale) {
  HarnessConfig cfg;
  cfg.master_seed = kMasterSeed;
  cfg.bench.algorithms = {alg};
  cfg.bench.kinds = {kind};
  cfg.bench.dims = {dim};
  cfg.bench.fault_rates = {p};
  cfg.bench.trials = trials;
  cfg.bench.scale = scale;
  return run_bench(cfg, vp).front();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? " ok" : " FAILED");
  }
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

// ---------------------------------------------------------------- criteria

Outcome criterion1_matrix_oracles() {
  Outcome out;
  std::mt19937_64 rng(derive_seed(kMasterSeed, {hash_name("c1")}));
  bool insertion_ok = true;
  for (int d = 1; d <= 6 && insertion_ok; ++d)
    for (int i = 1; i <= d && insertion_ok; ++i)
      for (int j = 1; j <= d && insertion_ok; ++j) {
        const ActionMatrix m = insertion_matrix(i, j, d);
        for (int rep = 0; rep < 100; ++rep) {
          const StateVector x = random_state(d, rng);
          if (!exact_equal(apply(m, x), list_insert(x, i, j))) {
            insertion_ok = false;
            break;
          }
        }
      }
  out.require(insertion_ok, "insertion matrices == list-insert oracle");

  bool ops_ok = true;
  for (int rep = 0; rep < 1000 && ops_ok; ++rep) {
    const int d = 1 + static_cast<int>(rng() % 8);
    const StateVector x = random_state(d, rng);
    const int i = 1 + static_cast<int>(rng() % d);
    const int j = 1 + static_cast<int>(rng() % d);
    const int j2 = 1 + static_cast<int>(rng() % d);
    const double c = unit_draw(rng);

    StateVector assign = x;
    assign(i - 1) = x(j - 1);
    ops_ok = ops_ok && exact_equal(apply(assignment_matrix(i, j, d), x), assign);

    StateVector scaled = x;
    scaled(i - 1) = c * x(i - 1);
    ops_ok = ops_ok &&
             exact_equal(apply(const_assignment_matrix(i, c, d), x), scaled);

    StateVector summed = x;
    summed(i - 1) = x(j - 1) + x(j2 - 1);
    ops_ok = ops_ok &&
             exact_equal(apply(summation_matrix(i, j, j2, d), x), summed);

    StateVector swapped = x;
    std::swap(swapped(i - 1), swapped(j - 1));
    ops_ok = ops_ok && exact_equal(apply(swap_matrix(i, j, d), x), swapped);
  }
  out.require(ops_ok, "assignment/const/summation/swap matrices == direct ops");
  return out;
}

Outcome criterion2_stability(const ValueParams& learned) {
  Outcome out;
  const int lengths[] = {3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 50};
  std::mt19937_64 rng(derive_seed(kMasterSeed, {hash_name("c2")}));
  ReliableComparator truth;
  long violations = 0, unsorted = 0, not_perm = 0, over_budget = 0;
  for (int t = 0; t < 1000; ++t) {
    const int d = lengths[t % 11];
    const StateVector x = random_state(d, rng);
    const auto [res, trace] = rl_sort(x, learned, truth, default_step_cap(d));
    if (!check_monotonic(trace).empty()) ++violations;
    if (!exact_equal(res, sorted_copy(x))) ++unsorted;
    if (!exact_equal(sorted_copy(res), sorted_copy(x))) ++not_perm;
    if (trace.moves > static_cast<long>(d) * d) ++over_budget;
  }
  out.require(violations == 0, "monotone value on all 1000 runs");
  out.require(unsorted == 0, "every output exactly sorted");
  out.require(not_perm == 0, "every output a permutation of its input");
  out.require(over_budget == 0, "moves <= d^2 always");
  return out;
}

Outcome criterion3_residual_fast_path(const ValueParams& learned) {
  Outcome out;
  std::mt19937_64 rng(derive_seed(kMasterSeed, {hash_name("c3")}));
  ReliableComparator truth;
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const int d = 2 + (t % 7);  // 2..8
    const StateVector x = random_state(d, rng);
    const double vx = value(x, learned, truth);
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) {
        const double fast = residual(x, i, j, learned, truth);
        const double full = value(list_insert(x, i, j), learned, truth) - vx;
        worst = std::max(worst, std::abs(fast - full));
      }
  }
  out.require(worst <= 1e-9,
              "max |residual - full recompute| = " + num(worst) + " <= 1e-9");
  return out;
}

Outcome criterion4_move_counts(const ValueParams& learned) {
  Outcome out;
  const double scale = 100.0;

  const BenchRow rl10 = run_cell(learned, Algorithm::rl, DatasetKind::random,
                                 10, 0.0, 100, scale);
  out.require(rl10.moves.mean >= 8.0 && rl10.moves.mean <= 13.5,
              "RL random d=10 mean moves " + num(rl10.moves.mean) +
                  " in [8,13.5]");

  const BenchRow rl100 = run_cell(learned, Algorithm::rl, DatasetKind::random,
                                  100, 0.0, 100, scale);
  out.require(rl100.moves.mean >= 250.0 && rl100.moves.mean <= 320.0,
              "RL random d=100 mean moves " + num(rl100.moves.mean) +
                  " in [250,320]");

  const BenchRow bub10 = run_cell(learned, Algorithm::bubble,
                                  DatasetKind::random, 10, 0.0, 100, scale);
  out.require(bub10.moves.mean >= 18.0 && bub10.moves.mean <= 29.0,
              "bubble random d=10 mean moves " + num(bub10.moves.mean) +
                  " in [18,29]");

  const BenchRow bub5 = run_cell(learned, Algorithm::bubble,
                                 DatasetKind::reversed, 5, 0.0, 100, scale);
  out.require(bub5.moves.mean == 10.0 && bub5.moves.stddev == 0.0,
              "bubble reversed d=5 exactly 10.00 +- 0.00");

  const int sel_dims[] = {5, 10, 50, 100};
  const double sel_expect[] = {4.0, 9.0, 49.0, 99.0};
  for (int t = 0; t < 4; ++t) {
    const BenchRow sel =
        run_cell(learned, Algorithm::selection, DatasetKind::reversed,
                 sel_dims[t], 0.0, 100, scale);
    out.require(sel.moves.mean == sel_expect[t] && sel.moves.stddev == 0.0,
                "selection reversed d=" + std::to_string(sel_dims[t]) +
                    " exactly " + num(sel_expect[t]));
  }

  const BenchRow q10 = run_cell(learned, Algorithm::quick, DatasetKind::random,
                                10, 0.0, 100, scale);
  out.require(q10.moves.mean >= 43.83 * 0.6 && q10.moves.mean <= 43.83 * 1.4,
              "quick random d=10 mean moves " + num(q10.moves.mean) +
                  " within +-40% of 43.83");
  return out;
}

Outcome criterion5_fault_resiliency(const ValueParams& learned) {
  Outcome out;
  const double scale = 100.0;

  const BenchRow q50 = run_cell(learned, Algorithm::quick, DatasetKind::random,
                                50, 0.05, 100, scale);
  out.require(q50.success_rate == 0.0,
              "quick success rate at d=50, p=0.05 == 0 (got " +
                  num(q50.success_rate) + ")");

  const BenchRow rl100 = run_cell(learned, Algorithm::rl, DatasetKind::random,
                                  100, 0.05, 100, scale);
  out.require(rl100.error.mean <= 15.0,
              "RL mean error at d=100, p=0.05 = " + num(rl100.error.mean) +
                  " <= 15");

  const BenchRow q100 = run_cell(learned, Algorithm::quick,
                                 DatasetKind::random, 100, 0.05, 100, scale);
  out.require(q100.error.mean >= 100.0,
              "quick mean error at d=100, p=0.05 = " + num(q100.error.mean) +
                  " >= 100");

  const BenchRow bub_rel = run_cell(learned, Algorithm::bubble,
                                    DatasetKind::random, 100, 0.0, 100, scale);
  const BenchRow bub_flt = run_cell(learned, Algorithm::bubble,
                                    DatasetKind::random, 100, 0.05, 100, scale);
  out.require(bub_flt.moves.mean >= 2.0 * bub_rel.moves.mean,
              "bubble faulty d=100 moves " + num(bub_flt.moves.mean) +
                  " >= 2x reliable " + num(bub_rel.moves.mean));
  return out;
}

Outcome criterion6_success_shape(const ValueParams& learned) {
  Outcome out;
  const double scale = 100.0;

  const BenchRow rl30 = run_cell(learned, Algorithm::rl, DatasetKind::random,
                                 10, 0.30, 100, scale);
  out.require(rl30.success_rate > 0.0,
              "RL success at p=0.3 = " + num(rl30.success_rate) + " > 0");

  const BenchRow rl15 = run_cell(learned, Algorithm::rl, DatasetKind::random,
                                 10, 0.15, 100, scale);
  const BenchRow bub15 = run_cell(learned, Algorithm::bubble,
                                  DatasetKind::random, 10, 0.15, 100, scale);
  out.require(rl15.success_rate >= bub15.success_rate,
              "RL success " + num(rl15.success_rate) +
                  " >= bubble success " + num(bub15.success_rate) +
                  " at p=0.15");

  bool bubble_zero = true;
  std::string rates;
  for (double p : {0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45, 0.50}) {
    const BenchRow b = run_cell(learned, Algorithm::bubble,
                                DatasetKind::random, 10, p, 100, scale);
    if (!rates.empty()) rates += ",";
    rates += num(b.success_rate);
    bubble_zero = bubble_zero && b.success_rate == 0.0;
  }
  out.require(bubble_zero,
              "bubble success == 0 for p in {0.15..0.5} (got " + rates + ")");
  return out;
}

Outcome criterion7_termination_probability() {
  Outcome out;
  struct Case {
    int d, k;
    double p;
  };
  for (const Case c : {Case{10, 3, 0.05}, Case{10, 9, 0.3}, Case{6, 0, 0.1}}) {
    StateVector x(c.d);
    for (int t = 0; t <= c.k; ++t) x(t) = static_cast<double>(c.k + 1 - t);
    for (int t = c.k + 1; t < c.d; ++t) x(t) = static_cast<double>(t + 1);
    ReliableComparator truth;
    if (static_cast<long>(features(x, truth).f1) != c.k) {
      out.require(false, "test-state construction for k=" +
                             std::to_string(c.k));
      continue;
    }
    const double mc = termination_prob_mc(
        x, c.p, 10000,
        derive_seed(kMasterSeed, {hash_name("c7"),
                                  static_cast<std::uint64_t>(c.d),
                                  static_cast<std::uint64_t>(c.k)}));
    const double product =
        std::pow(c.p, c.k) * std::pow(1.0 - c.p, c.d - 1 - c.k);
    const double printed = termination_prob_closed_form(c.d, c.k, c.p);
    out.require(std::abs(mc - product) <= 0.02,
                "(d=" + std::to_string(c.d) + ",k=" + std::to_string(c.k) +
                    ",p=" + num(c.p) + ") mc=" + num(mc) + " vs product=" +
                    num(product) + " (closed form as published: " +
                    num(printed) + ")");
  }
  return out;
}

Outcome criterion8_learned_sign_condition() {
  Outcome out;
  for (std::uint64_t seed : {101ULL, 202ULL, 303ULL, 404ULL, 505ULL}) {
    LearnConfig cfg;  // defaults: dim 6, 1000 samples, 15 iterations
    cfg.seed = seed;
    const LearnResult res = avi_learn(cfg);
    out.require(res.params.stability_precondition(),
                "seed " + std::to_string(seed) + " theta = [" +
                    num(res.params.theta(0)) + "," +
                    num(res.params.theta(1)) + "] both negative");
  }
  return out;
}

Outcome criterion9_bench_determinism() {
  Outcome out;
  const fs::path tmp =
      fs::temp_directory_path() /
      ("rlsort_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(tmp);
  const std::string theta = (tmp / "theta.json").string();
  const std::string cfg_path = (tmp / "config.json").string();
  const std::string csv_a = (tmp / "bench_a.csv").string();
  const std::string csv_b = (tmp / "bench_b.csv").string();

  auto cli = [&](const std::string& args) {
    const std::string cmd =
        std::string(RLSORT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };

  bool ok = cli("learn --out " + theta) == 0;
  {
    std::ofstream cfg(cfg_path);
    cfg << "{\n  \"master_seed\": 42,\n  \"params_file\": \"" << theta
        << "\",\n  \"bench\": {\n    \"dims\": [5, 10],\n"
        << "    \"fault_rates\": [0.0, 0.05],\n    \"trials\": 25,\n"
        << "    \"scale\": 100.0,\n    \"output\": \"" << csv_a
        << "\"\n  }\n}\n";
  }
  ok = ok && cli("bench --config " + cfg_path) == 0;
  ok = ok && cli("bench --config " + cfg_path + " --output " + csv_b) == 0;

  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string a = slurp(csv_a), b = slurp(csv_b);
  out.require(ok, "cli learn+bench runs succeed");
  out.require(!a.empty() && a == b,
              "bench CSVs byte-identical across reruns (" +
                  std::to_string(a.size()) + " bytes)");
  fs::remove_all(tmp);
  return out;
}

}  // namespace

int main() {
  std::printf("acceptance suite (master seed %llu)\n",
              static_cast<unsigned long long>(kMasterSeed));

  LearnConfig learn_cfg;
  learn_cfg.seed = derive_seed(kMasterSeed, {hash_name("learn")});
  const LearnResult learned = avi_learn(learn_cfg);
  std::printf("learned theta = [%.6f, %.6f]\n", learned.params.theta(0),
              learned.params.theta(1));

  struct Entry {
    const char* name;
    Outcome outcome;
  };
  std::vector<Entry> entries;
  const auto timed = [&](const char* name, auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = fn();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    char line[2048];
    std::snprintf(line, sizeof(line), "[%s] %s: %s (%.1fs)",
                  o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    std::printf("%s\n", line);
    std::fflush(stdout);
    entries.push_back({name, std::move(o)});
  };

  timed("criterion 1: matrix-oracle equivalence",
        [] { return criterion1_matrix_oracles(); });
  timed("criterion 2: stability (monotone value, sorted outputs, move bound)",
        [&] { return criterion2_stability(learned.params); });
  timed("criterion 3: residual fast path == full recompute",
        [&] { return criterion3_residual_fast_path(learned.params); });
  timed("criterion 4: move-count reproduction",
        [&] { return criterion4_move_counts(learned.params); });
  timed("criterion 5: fault resiliency at p=0.05",
        [&] { return criterion5_fault_resiliency(learned.params); });
  timed("criterion 6: success-vs-fault-rate shape at d=10",
        [&] { return criterion6_success_shape(learned.params); });
  timed("criterion 7: termination probability oracle",
        [] { return criterion7_termination_probability(); });
  timed("criterion 8: learned-weight sign condition",
        [] { return criterion8_learned_sign_condition(); });
  timed("criterion 9: bench determinism",
        [] { return criterion9_bench_determinism(); });

  int passed = 0;
  for (const Entry& e : entries)
    if (e.outcome.pass) ++passed;
  std::printf("acceptance: %d/%zu criteria passed\n", passed, entries.size());
  return passed == static_cast<int>(entries.size()) ? 0 : 1;
}
