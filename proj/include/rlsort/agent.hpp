#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rlsort/comparator.hpp"
#include "rlsort/valuation.hpp"
#include "rlsort/varspace.hpp"

namespace rlsort {

enum class TerminationReason { sorted_detected, step_cap, interrupted };

struct TraceStep {
  int step = 0;  // 1-based step number
  int i = 0;
  int j = 0;
  double value_after = 0.0;
  double f1_after = 0.0;
};

/**
 * Per-step record of one sorting run.
 *
 * value_after / f1_after are instrumentation: they are computed with a
 * reliable comparator so that setbacks in faulty runs are measured against
 * ground truth rather than against noisy readings.
 */
struct Trace {
  double initial_value = 0.0;
  double initial_f1 = 0.0;
  std::vector<TraceStep> steps;
  bool snapshots_enabled = false;
  std::vector<StateVector> snapshots;  // [0] = input, [t] = after step t
  TerminationReason terminated_reason = TerminationReason::sorted_detected;
  long moves = 0;  // applied actions with i != j
};

inline long default_step_cap(int dim) { return 10L * dim * dim; }

/**
 * Greedy policy: argmax over all (i,j) in [1..d]^2 of the value change of
 * inserting element i at position j, evaluated through the local residual.
 * Identity pairs score exactly 0 and consume no comparison draws. Ties
 * resolve to the lexicographically smallest (i,j), so the scan is
 * deterministic given the comparator stream.
 */
template <Comparator C>
std::pair<int, int> greedy_action(const StateVector& x, const ValueParams& vp,
                                  C&& cmp) {
  const int d = static_cast<int>(x.size());
  if (d < 2) throw std::invalid_argument("greedy_action needs dim >= 2");
  double best = -std::numeric_limits<double>::infinity();
  int best_i = 1, best_j = 1;
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      const double dv = (i == j) ? 0.0 : residual(x, i, j, vp, cmp);
      if (dv > best) {
        best = dv;
        best_i = i;
        best_j = j;
      }
    }
  }
  return {best_i, best_j};
}

/**
 * Trajectory generation: repeatedly apply the greedy insertion until the
 * comparator reports no displaced pairs. Under faults the report can be
 * wrong in either direction, so a step cap bounds the loop; reaching it is
 * a recorded outcome, not an error. The output is always a permutation of
 * the input regardless of faults.
 */
template <Comparator C>
std::pair<StateVector, Trace> rl_sort(const StateVector& x0,
                                      const ValueParams& vp, C&& cmp,
                                      long step_cap, bool snapshots = false) {
  if (step_cap < 1) throw std::invalid_argument("step_cap must be >= 1");
  StateVector x = x0;
  const int d = static_cast<int>(x.size());

  ReliableComparator truth;
  Trace trace;
  trace.snapshots_enabled = snapshots;
  {
    const FeatureVector f0 = features(x, truth);
    trace.initial_f1 = f0.f1;
    trace.initial_value = vp.theta(0) * f0.f1 + vp.theta(1) * f0.f2;
  }
  if (snapshots) trace.snapshots.push_back(x);

  long steps = 0;
  while (true) {
    if (d < 2 || features(x, cmp).f1 == 0.0) {
      trace.terminated_reason = TerminationReason::sorted_detected;
      break;
    }
    if (steps >= step_cap) {
      trace.terminated_reason = TerminationReason::step_cap;
      break;
    }
    const auto [i, j] = greedy_action(x, vp, cmp);
    if (i != j) {
      list_insert_inplace(x, i, j);
      ++trace.moves;
    }
    ++steps;
    const FeatureVector f = features(x, truth);
    trace.steps.push_back({static_cast<int>(steps), i, j,
                           vp.theta(0) * f.f1 + vp.theta(1) * f.f2, f.f1});
    if (snapshots) trace.snapshots.push_back(x);
  }
  return {std::move(x), std::move(trace)};
}

/// Array as it stood after at_step steps (0 = the input). Requires the run
/// to have recorded snapshots.
inline StateVector interrupt(const Trace& trace, std::size_t at_step) {
  if (!trace.snapshots_enabled)
    throw std::logic_error("interrupt requires snapshots to be enabled");
  if (at_step >= trace.snapshots.size())
    throw std::out_of_range("at_step past end of trace");
  return trace.snapshots[at_step];
}

}  // namespace rlsort
