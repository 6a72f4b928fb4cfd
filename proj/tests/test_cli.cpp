#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "rlsort/io.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("rlsort_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const char* name) const { return (path / name).string(); }
};

int run_cli(const std::string& args, const std::string& stdout_file = "") {
  std::string cmd = std::string(RLSORT_CLI_PATH) + " " + args;
  if (!stdout_file.empty()) cmd += " > " + stdout_file + " 2>/dev/null";
  else cmd += " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("learn writes a weight file with negative components") {
  TempDir tmp;
  const std::string theta = tmp.file("theta.json");
  CHECK(run_cli("learn --out " + theta + " --seed 5",
                tmp.file("learn.out")) == 0);
  const std::string body = slurp(theta);
  CHECK(body.find("theta") != std::string::npos);
  const std::string printed = slurp(tmp.file("learn.out"));
  CHECK(printed.find("satisfied") != std::string::npos);

  // same seed, same file bytes
  const std::string theta2 = tmp.file("theta2.json");
  CHECK(run_cli("learn --out " + theta2 + " --seed 5") == 0);
  CHECK(slurp(theta) == slurp(theta2));

  // unwritable output path is a usage error
  CHECK(run_cli("learn --out " + tmp.file("no/such/dir/theta.json")) == 2);
}

TEST_CASE("sort command round trip") {
  TempDir tmp;
  const std::string theta = tmp.file("theta.json");
  REQUIRE(run_cli("learn --out " + theta + " --seed 5") == 0);

  CHECK(run_cli("sort --params " + theta + " \"3 1 2\"",
                tmp.file("sorted.out")) == 0);
  const std::string out = slurp(tmp.file("sorted.out"));
  CHECK(out.find("1 2 3") != std::string::npos);
  CHECK(out.find("sorted_detected") != std::string::npos);

  CHECK(run_cli("sort --params " + theta + " \"1 2 3 4\"",
                tmp.file("noop.out")) == 0);
  CHECK(slurp(tmp.file("noop.out")).find("moves=0") != std::string::npos);

  // missing weight file is a usage error
  CHECK(run_cli("sort --params " + tmp.file("nope.json") + " \"2 1\"") == 2);

  // faulty run with trace and heatmap outputs
  const std::string trace = tmp.file("trace.csv");
  const std::string heat = tmp.file("heat.csv");
  CHECK(run_cli("sort --params " + theta + " --p 0.05 --seed 9 --trace " +
                trace + " --heatmap " + heat + " \"5 4 3 2 1 6 9 8 7\"") == 0);
  CHECK(slurp(trace).rfind("step,i,j,value,f1", 0) == 0);
  CHECK(!slurp(heat).empty());

  // the trace is accepted by the analyzer
  CHECK(run_cli("analyze --trace " + trace, tmp.file("rep.out")) == 0);
  CHECK(slurp(tmp.file("rep.out")).find("monotonicity_violations") !=
        std::string::npos);
}

TEST_CASE("analyze reports the action partition of a sorted array") {
  TempDir tmp;
  const std::string theta = tmp.file("theta.json");
  REQUIRE(run_cli("learn --out " + theta + " --seed 5") == 0);
  CHECK(run_cli("analyze --params " + theta +
                " --p 0.05 --trials 200 \"1 2 3 4 5\"",
                tmp.file("rep.json")) == 0);
  const std::string rep = slurp(tmp.file("rep.json"));
  CHECK(rep.find("\"g\": 0") != std::string::npos);
  CHECK(rep.find("\"k\": 0") != std::string::npos);
}

TEST_CASE("bench honors the config file and env var") {
  TempDir tmp;
  const std::string theta = tmp.file("theta.json");
  REQUIRE(run_cli("learn --out " + theta + " --seed 5") == 0);

  const std::string cfg_path = tmp.file("config.json");
  {
    std::ofstream cfg(cfg_path);
    cfg << R"({
  "master_seed": 7,
  "params_file": ")" << theta << R"(",
  "bench": {
    "algorithms": ["bubble", "selection"],
    "kinds": ["sorted", "reversed"],
    "dims": [5],
    "fault_rates": [0.0],
    "trials": 10,
    "output": ")" << tmp.file("bench.csv") << R"("
  }
})";
  }
  CHECK(run_cli("bench --config " + cfg_path) == 0);
  const std::string csv = slurp(tmp.file("bench.csv"));
  CHECK(csv.rfind("algorithm,kind,dim,p,", 0) == 0);
  // bubble on reversed 5-arrays: exactly 10 moves, zero spread
  CHECK(csv.find("bubble,reversed,5,0.000000,10.000000,0.000000") !=
        std::string::npos);
  // selection on reversed 5-arrays: exactly 4 moves
  CHECK(csv.find("selection,reversed,5,0.000000,4.000000,0.000000") !=
        std::string::npos);

  // the same config via RLSORT_CONFIG
  const std::string env_cmd = "RLSORT_CONFIG=" + cfg_path + " " +
                              std::string(RLSORT_CLI_PATH) +
                              " bench --output " + tmp.file("bench2.csv") +
                              " > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(env_cmd.c_str())) == 0);
  CHECK(slurp(tmp.file("bench2.csv")).rfind("algorithm,", 0) == 0);

  // dataset audit dump round-trips
  CHECK(run_cli("bench --config " + cfg_path + " --output " +
                tmp.file("bench3.csv") + " --dump-datasets " +
                tmp.path.string()) == 0);
  const auto ds = rlsort::read_dataset_jsonl(tmp.file("reversed_d5.jsonl"));
  CHECK(ds.dim == 5);
  CHECK(ds.count == 10);
}

TEST_CASE("resilience sweep emits the p grid") {
  TempDir tmp;
  const std::string theta = tmp.file("theta.json");
  REQUIRE(run_cli("learn --out " + theta + " --seed 5") == 0);
  const std::string cfg_path = tmp.file("config.json");
  {
    std::ofstream cfg(cfg_path);
    cfg << R"({
  "params_file": ")" << theta << R"(",
  "resilience": {
    "algorithms": ["quick"],
    "dims": [8],
    "fault_rates": [0.0, 0.5],
    "trials": 10,
    "output": ")" << tmp.file("resilience.csv") << R"("
  }
})";
  }
  CHECK(run_cli("resilience --config " + cfg_path) == 0);
  const std::string csv = slurp(tmp.file("resilience.csv"));
  CHECK(csv.rfind("algorithm,dim,p,success_rate,error_mean,error_std", 0) ==
        0);
  // reliable quicksort sorts everything
  CHECK(csv.find("quick,8,0.000000,1.000000,0.000000") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  TempDir tmp;
  CHECK(run_cli("bench --config " + tmp.file("missing.json")) == 2);
  CHECK(run_cli("sort \"not numbers\" --params x.json") == 2);
}
