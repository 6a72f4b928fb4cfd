#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rlsort/varspace.hpp"

namespace rlsort {

enum class DatasetKind { sorted, reversed, gaussian, random };

std::string to_string(DatasetKind kind);
DatasetKind dataset_kind_from_string(const std::string& name);

/// Knobs for dataset generation. sigma is the Gaussian displacement of the
/// `gaussian` kind; scale multiplies all drawn values (1.0 keeps the raw
/// unit draws, benchmark configs typically use 100 to spread the values).
struct DatasetParams {
  double sigma = 0.1;
  double scale = 1.0;
};

/// A reproducible batch of arrays: regenerating with the same arguments is
/// bit-identical.
struct Dataset {
  DatasetKind kind = DatasetKind::random;
  int dim = 0;
  int count = 0;
  std::uint64_t seed = 0;
  DatasetParams params;
  std::vector<StateVector> arrays;
};

/// sorted / reversed: ascending / descending unit draws. gaussian: sorted
/// unit draws, each perturbed by N(0, sigma), used as-is. random: i.i.d.
/// uniform (0,1). All values are then multiplied by params.scale.
Dataset gen_dataset(DatasetKind kind, int dim, int count, DatasetParams params,
                    std::uint64_t seed);

/// Euclidean distance between an outcome and its reference ordering.
double error_distance(const StateVector& x_out, const StateVector& x_ref);

/// Exact element-wise match with the reliably sorted reference. Judged
/// against ground truth so faulty runs that merely look sorted still fail.
bool success(const StateVector& x_out, const StateVector& x_ref);

struct StatSummary {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation (n-1); 0 when n == 1
  std::size_t n = 0;
};

StatSummary summarize(std::span<const double> values);

}  // namespace rlsort
