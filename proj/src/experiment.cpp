#include "rlsort/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "rlsort/comparator.hpp"

namespace rlsort {

std::string to_string(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::sorted: return "sorted";
    case DatasetKind::reversed: return "reversed";
    case DatasetKind::gaussian: return "gaussian";
    case DatasetKind::random: return "random";
  }
  return "random";
}

DatasetKind dataset_kind_from_string(const std::string& name) {
  if (name == "sorted") return DatasetKind::sorted;
  if (name == "reversed") return DatasetKind::reversed;
  if (name == "gaussian") return DatasetKind::gaussian;
  if (name == "random") return DatasetKind::random;
  throw std::invalid_argument("unknown dataset kind: " + name);
}

namespace {

double unit_draw(std::mt19937_64& rng) {
  double u;
  do {
    u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  } while (u == 0.0);
  return u;
}

// Box-Muller, two unit draws per sample; the sine branch is discarded so
// the draw count per sample stays fixed.
double normal_draw(std::mt19937_64& rng) {
  const double u1 = unit_draw(rng);
  const double u2 = unit_draw(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace

Dataset gen_dataset(DatasetKind kind, int dim, int count, DatasetParams params,
                    std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("dim must be >= 1");
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  if (params.sigma < 0.0) throw std::invalid_argument("sigma must be >= 0");

  Dataset ds{kind, dim, count, seed, params, {}};
  ds.arrays.reserve(count);
  std::mt19937_64 rng(mix64(seed));
  for (int a = 0; a < count; ++a) {
    StateVector x(dim);
    for (int k = 0; k < dim; ++k) x(k) = unit_draw(rng);
    switch (kind) {
      case DatasetKind::sorted:
        std::sort(x.data(), x.data() + dim);
        break;
      case DatasetKind::reversed:
        std::sort(x.data(), x.data() + dim, std::greater<>());
        break;
      case DatasetKind::gaussian:
        std::sort(x.data(), x.data() + dim);
        for (int k = 0; k < dim; ++k) x(k) += params.sigma * normal_draw(rng);
        break;
      case DatasetKind::random:
        break;
    }
    ds.arrays.push_back(x * params.scale);
  }
  return ds;
}

double error_distance(const StateVector& x_out, const StateVector& x_ref) {
  if (x_out.size() != x_ref.size())
    throw std::invalid_argument("error_distance: dimension mismatch");
  return (x_out - x_ref).norm();
}

bool success(const StateVector& x_out, const StateVector& x_ref) {
  if (x_out.size() != x_ref.size())
    throw std::invalid_argument("success: dimension mismatch");
  for (Eigen::Index k = 0; k < x_out.size(); ++k)
    if (x_out(k) != x_ref(k)) return false;
  return true;
}

StatSummary summarize(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("summarize: empty sample");
  StatSummary s;
  s.n = values.size();
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.n);
  if (s.n > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(s.n - 1));
  }
  return s;
}

}  // namespace rlsort
