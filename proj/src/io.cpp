#include "rlsort/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace rlsort {

using nlohmann::json;

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

void write_params_json(const std::string& path, const ParamsFile& pf) {
  json j;
  j["theta"] = {pf.params.theta(0), pf.params.theta(1)};
  j["gamma"] = pf.params.gamma;
  j["seed"] = pf.seed;
  j["provenance"] = pf.provenance;
  auto out = open_out(path);
  out << j.dump(2) << "\n";
}

ParamsFile read_params_json(const std::string& path) {
  auto in = open_in(path);
  json j = json::parse(in);
  ParamsFile pf;
  pf.params.theta(0) = j.at("theta").at(0).get<double>();
  pf.params.theta(1) = j.at("theta").at(1).get<double>();
  pf.params.gamma = j.value("gamma", 0.9);
  pf.seed = j.value("seed", 0ULL);
  pf.provenance = j.value("provenance", "");
  return pf;
}

void write_trace_csv(const std::string& path, const Trace& trace) {
  auto out = open_out(path);
  out << "step,i,j,value,f1\n";
  out << "0,0,0," << fmt(trace.initial_value) << "," << fmt(trace.initial_f1)
      << "\n";
  for (const TraceStep& s : trace.steps) {
    out << s.step << "," << s.i << "," << s.j << "," << fmt(s.value_after)
        << "," << fmt(s.f1_after) << "\n";
  }
}

void write_heatmap_csv(const std::string& path, const Trace& trace) {
  if (!trace.snapshots_enabled)
    throw std::logic_error("heatmap output requires snapshots");
  auto out = open_out(path);
  for (const StateVector& x : trace.snapshots) {
    for (Eigen::Index k = 0; k < x.size(); ++k) {
      if (k) out << ",";
      out << fmt(x(k));
    }
    out << "\n";
  }
}

std::vector<double> read_trace_values_csv(const std::string& path) {
  auto in = open_in(path);
  std::vector<double> values;
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("empty trace file: " + path);
  if (line.rfind("step,", 0) != 0)
    throw std::runtime_error("not a trace CSV (missing header): " + path);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    for (int f = 0; f < 4; ++f) {
      if (!std::getline(ss, field, ','))
        throw std::runtime_error("malformed trace row: " + line);
    }
    values.push_back(std::stod(field));
  }
  return values;
}

void write_dataset_jsonl(const std::string& path, const Dataset& ds) {
  auto out = open_out(path);
  json header;
  header["kind"] = to_string(ds.kind);
  header["dim"] = ds.dim;
  header["count"] = ds.count;
  header["seed"] = ds.seed;
  header["sigma"] = ds.params.sigma;
  header["scale"] = ds.params.scale;
  out << header.dump() << "\n";
  for (const StateVector& x : ds.arrays) {
    json row = json::array();
    for (Eigen::Index k = 0; k < x.size(); ++k) row.push_back(x(k));
    out << row.dump() << "\n";
  }
}

Dataset read_dataset_jsonl(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("empty dataset file: " + path);
  json header = json::parse(line);
  Dataset ds;
  ds.kind = dataset_kind_from_string(header.at("kind").get<std::string>());
  ds.dim = header.at("dim").get<int>();
  ds.count = header.at("count").get<int>();
  ds.seed = header.at("seed").get<std::uint64_t>();
  ds.params.sigma = header.value("sigma", 0.1);
  ds.params.scale = header.value("scale", 1.0);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json row = json::parse(line);
    StateVector x(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) x(k) = row[k].get<double>();
    ds.arrays.push_back(std::move(x));
  }
  if (static_cast<int>(ds.arrays.size()) != ds.count)
    throw std::runtime_error("dataset row count does not match header");
  return ds;
}

std::string analysis_report_json(const AnalysisReport& rep) {
  json j;
  j["k"] = rep.k;
  j["g"] = rep.g;
  j["n"] = rep.n;
  j["w"] = rep.w;
  j["p_term_closed_form"] = rep.p_term_closed_form;
  j["p_term_mc"] = rep.p_term_mc;
  j["p_wrong_action"] = rep.p_wrong_action;
  return j.dump(2);
}

StateVector parse_state(const std::string& text) {
  std::stringstream ss(text);
  std::vector<double> vals;
  double v;
  while (ss >> v) vals.push_back(v);
  if (!ss.eof()) throw std::runtime_error("malformed array input: " + text);
  if (vals.empty()) throw std::runtime_error("empty array input");
  StateVector x(vals.size());
  for (std::size_t k = 0; k < vals.size(); ++k) x(k) = vals[k];
  return x;
}

StateVector read_state_file(const std::string& path) {
  auto in = open_in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_state(ss.str());
}

std::string format_state(const StateVector& x) {
  std::string out;
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    if (k) out += " ";
    out += fmt(x(k));
  }
  return out;
}

}  // namespace rlsort
