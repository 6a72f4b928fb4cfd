#include "rlsort/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "rlsort/comparator.hpp"

namespace rlsort {

std::vector<std::size_t> check_monotonic(std::span<const double> values) {
  std::vector<std::size_t> violations;
  for (std::size_t t = 1; t < values.size(); ++t) {
    if (!(values[t] > values[t - 1])) violations.push_back(t);
  }
  return violations;
}

std::vector<std::size_t> check_monotonic(const Trace& trace) {
  std::vector<double> seq;
  seq.reserve(trace.steps.size() + 1);
  seq.push_back(trace.initial_value);
  for (const TraceStep& s : trace.steps) seq.push_back(s.value_after);
  return check_monotonic(std::span<const double>(seq));
}

double lyapunov_w(const StateVector& x, const ValueParams& vp) {
  ReliableComparator truth;
  return -value(x, vp, truth);
}

double termination_prob_closed_form(int d, int k, double p) {
  if (k < 0 || k > d) throw std::out_of_range("k must lie in [0, d]");
  if (p < 0.0 || p > 1.0) throw std::out_of_range("p must lie in [0, 1]");
  double binom = 1.0;
  for (int t = 1; t <= k; ++t)
    binom *= static_cast<double>(d - k + t) / static_cast<double>(t);
  return binom * std::pow(p, k) * std::pow(1.0 - p, d - k);
}

double termination_prob_mc(const StateVector& x, double p, long trials,
                           std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  long accepted = 0;
  for (long t = 0; t < trials; ++t) {
    FaultyComparator cmp(p, derive_seed(seed, {static_cast<std::uint64_t>(t)}));
    if (features(x, cmp).f1 == 0.0) ++accepted;
  }
  return static_cast<double>(accepted) / static_cast<double>(trials);
}

std::array<long, 3> partition_gnw(const StateVector& x,
                                  const ValueParams& vp) {
  ReliableComparator truth;
  const int d = static_cast<int>(x.size());
  long g = 0, n = 0, w = 0;
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      const double dv = (i == j) ? 0.0 : residual(x, i, j, vp, truth);
      if (dv > 0.0)
        ++g;
      else if (dv < 0.0)
        ++w;
      else
        ++n;
    }
  }
  return {g, n, w};
}

double wrong_action_prob(const StateVector& x, const ValueParams& vp,
                         double p_v) {
  if (p_v < 0.0 || p_v > 1.0) throw std::out_of_range("p_V must lie in [0,1]");
  const double d = static_cast<double>(x.size());
  const auto [g, n, w] = partition_gnw(x, vp);
  (void)g;
  (void)n;
  return (static_cast<double>(w) / (d * d * d * d)) * p_v;
}

AnalysisReport analyze_state(const StateVector& x, const ValueParams& vp,
                             double p, double p_v, long trials,
                             std::uint64_t seed) {
  ReliableComparator truth;
  AnalysisReport rep;
  rep.k = static_cast<long>(features(x, truth).f1);
  const auto [g, n, w] = partition_gnw(x, vp);
  rep.g = g;
  rep.n = n;
  rep.w = w;
  rep.p_term_closed_form =
      termination_prob_closed_form(static_cast<int>(x.size()),
                                   static_cast<int>(rep.k), p);
  rep.p_term_mc = termination_prob_mc(x, p, trials, seed);
  rep.p_wrong_action = wrong_action_prob(x, vp, p_v);
  return rep;
}

}  // namespace rlsort
