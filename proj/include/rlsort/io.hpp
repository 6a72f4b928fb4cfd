#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rlsort/agent.hpp"
#include "rlsort/analysis.hpp"
#include "rlsort/avi.hpp"
#include "rlsort/experiment.hpp"
#include "rlsort/valuation.hpp"

namespace rlsort {

/// Weight file: the two weights, the discount, the learning seed, and a
/// free-form provenance block.
struct ParamsFile {
  ValueParams params;
  std::uint64_t seed = 0;
  std::string provenance;
};

void write_params_json(const std::string& path, const ParamsFile& pf);
ParamsFile read_params_json(const std::string& path);

/// step,i,j,value,f1 rows; a step-0 row carries the pre-run value.
void write_trace_csv(const std::string& path, const Trace& trace);

/// One comma-separated array row per snapshot (row 0 = the input array).
/// Requires the run to have recorded snapshots.
void write_heatmap_csv(const std::string& path, const Trace& trace);

/// Value sequence (pre-run value first) parsed back from a trace CSV.
std::vector<double> read_trace_values_csv(const std::string& path);

/// Header line with the generation arguments, then one JSON array per line.
void write_dataset_jsonl(const std::string& path, const Dataset& ds);
Dataset read_dataset_jsonl(const std::string& path);

std::string analysis_report_json(const AnalysisReport& rep);

/// Whitespace-separated numbers.
StateVector parse_state(const std::string& text);
StateVector read_state_file(const std::string& path);
std::string format_state(const StateVector& x);

}  // namespace rlsort
