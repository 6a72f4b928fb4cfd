#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "rlsort/agent.hpp"
#include "rlsort/valuation.hpp"
#include "rlsort/varspace.hpp"

namespace rlsort {

/// Resiliency snapshot of one array under the learned value function.
struct AnalysisReport {
  long k = 0;   // displaced adjacent pairs, F1(x)
  long g = 0;   // actions with positive residual
  long n = 0;   // actions with zero residual
  long w = 0;   // actions with negative residual
  double p_term_closed_form = 0.0;  // binomial formula, as published
  double p_term_mc = 0.0;           // Monte Carlo estimate of the same event
  double p_wrong_action = 0.0;      // (w / d^4) * p_V
};

/// Indices t (into the given sequence) where values[t] fails to strictly
/// exceed values[t-1]. Empty for reliable runs of the greedy agent.
std::vector<std::size_t> check_monotonic(std::span<const double> values);

/// Trace overload: prepends the pre-run value, so a returned index t means
/// step t failed to improve on its predecessor.
std::vector<std::size_t> check_monotonic(const Trace& trace);

/// Candidate Lyapunov function W = -V: nonnegative when both weights are
/// negative, zero exactly on sorted arrays, and strictly decreasing along
/// reliable greedy trajectories.
double lyapunov_w(const StateVector& x, const ValueParams& vp);

/// Published closed form for the probability that a faulty termination
/// check accepts an array with k displaced pairs: C(d,k) p^k (1-p)^(d-k).
/// Shipped verbatim for reporting; the Monte Carlo estimator below is the
/// route that is asserted against the independence product.
double termination_prob_closed_form(int d, int k, double p);

/// Fraction of `trials` independent faulty feature scans of x that report
/// zero displaced pairs. Converges to p^k (1-p)^(d-1-k).
double termination_prob_mc(const StateVector& x, double p, long trials,
                           std::uint64_t seed);

/// Counts of the improving / neutral / worsening action classes by the
/// sign of the reliable residual over all d^2 insertions.
std::array<long, 3> partition_gnw(const StateVector& x, const ValueParams& vp);

/// Probability that a worsening action wins the argmax, (w / d^4) * p_V,
/// with p_V the caller-supplied category-flip probability.
double wrong_action_prob(const StateVector& x, const ValueParams& vp,
                         double p_v);

/// Full report for one array (p_wrong_action uses p_v; the Monte Carlo
/// term uses `trials` scans seeded from `seed`).
AnalysisReport analyze_state(const StateVector& x, const ValueParams& vp,
                             double p, double p_v, long trials,
                             std::uint64_t seed);

}  // namespace rlsort
