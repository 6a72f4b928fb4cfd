#pragma once

#include <cmath>
#include <vector>

#include "rlsort/comparator.hpp"
#include "rlsort/varspace.hpp"

namespace rlsort {

/// Result of one instrumented sorting run. Every comparison was routed
/// through the supplied comparator; moves count element placements.
struct SortOutcome {
  StateVector result;
  long moves = 0;
  long comparisons = 0;
  bool capped = false;  // a loop guard fired (possible only under faults)
};

/**
 * Bubble sort: scan and swap adjacent pairs judged out of order, until a
 * full pass swaps nothing. The pass-level termination check rides on the
 * same faulty judgments as the swaps, so under faults the loop can churn
 * for a long time; passes are capped at cap_mult * d and hitting the cap
 * flags the outcome. One swap = one move.
 */
template <Comparator C>
SortOutcome bubble_sort(const StateVector& input, C&& cmp, int cap_mult = 10) {
  SortOutcome out{input, 0, 0, false};
  const int d = static_cast<int>(out.result.size());
  const long pass_cap = static_cast<long>(cap_mult) * d;
  long passes = 0;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int i = 0; i + 1 < d; ++i) {
      ++out.comparisons;
      if (cmp(out.result(i + 1) - out.result(i) < 0.0)) {
        std::swap(out.result(i), out.result(i + 1));
        ++out.moves;
        swapped = true;
      }
    }
    ++passes;
    if (swapped && passes >= pass_cap) {
      out.capped = true;
      break;
    }
  }
  return out;
}

namespace detail {

template <Comparator C>
void quick_sort_rec(std::vector<double>& v, int lo, int hi, C& cmp,
                    SortOutcome& out, int depth, int depth_cap) {
  const int n = hi - lo;
  if (n <= 1) return;
  if (depth >= depth_cap) {
    // Faulty comparisons can skew partitions indefinitely; leave the span.
    out.capped = true;
    return;
  }
  const double pivot = v[lo + n / 2];
  const int pivot_idx = lo + n / 2;
  std::vector<double> less, equal, greater;
  less.reserve(n);
  greater.reserve(n);
  for (int t = lo; t < hi; ++t) {
    if (t == pivot_idx) {
      equal.push_back(v[t]);  // the pivot instance itself is not compared
      ++out.moves;
      continue;
    }
    ++out.comparisons;
    if (cmp(v[t] < pivot)) {
      less.push_back(v[t]);
      ++out.moves;
    } else {
      ++out.comparisons;
      if (cmp(pivot < v[t])) {
        greater.push_back(v[t]);
      } else {
        equal.push_back(v[t]);
      }
      ++out.moves;
    }
  }
  int w = lo;
  for (double e : less) v[w++] = e;
  const int less_hi = w;
  for (double e : equal) v[w++] = e;
  const int greater_lo = w;
  for (double e : greater) v[w++] = e;
  quick_sort_rec(v, lo, less_hi, cmp, out, depth + 1, depth_cap);
  quick_sort_rec(v, greater_lo, hi, cmp, out, depth + 1, depth_cap);
}

}  // namespace detail

/**
 * Three-way quicksort around the middle element: single pass, no
 * re-verification of previously placed sections. Each element repositioned
 * by a partition round (its write into one of the three sublists plus the
 * merge-back) counts one move, so a round over n elements costs n moves.
 * Recursion depth is capped at 4*log2(d) + 8; spans abandoned at the cap
 * flag the outcome (reachable only with faulty comparisons).
 */
template <Comparator C>
SortOutcome quick_sort(const StateVector& input, C&& cmp) {
  SortOutcome out{input, 0, 0, false};
  const int d = static_cast<int>(input.size());
  if (d <= 1) return out;
  std::vector<double> v(input.data(), input.data() + d);
  const int depth_cap =
      static_cast<int>(4.0 * std::log2(static_cast<double>(d))) + 8;
  detail::quick_sort_rec(v, 0, d, cmp, out, 0, depth_cap);
  for (int t = 0; t < d; ++t) out.result(t) = v[t];
  return out;
}

/**
 * Selection sort: find the minimum of the remaining suffix and place it at
 * the suffix's front (an insert, shifting the skipped elements right by
 * one). A move is counted whenever the minimum is not already in place; a
 * strictly descending array therefore costs exactly d-1 moves.
 */
template <Comparator C>
SortOutcome selection_sort(const StateVector& input, C&& cmp) {
  SortOutcome out{input, 0, 0, false};
  const int d = static_cast<int>(out.result.size());
  for (int pos = 1; pos <= d - 1; ++pos) {
    int min_idx = pos;
    for (int t = pos + 1; t <= d; ++t) {
      ++out.comparisons;
      if (cmp(out.result(t - 1) < out.result(min_idx - 1))) min_idx = t;
    }
    if (min_idx != pos) {
      list_insert_inplace(out.result, min_idx, pos);
      ++out.moves;
    }
  }
  return out;
}

}  // namespace rlsort
