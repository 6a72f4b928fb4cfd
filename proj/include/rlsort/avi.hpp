#pragma once

#include <cstdint>
#include <vector>

#include "rlsort/valuation.hpp"
#include "rlsort/varspace.hpp"

namespace rlsort {

/// Configuration for the value-learning phase.
struct LearnConfig {
  int sample_dim = 6;
  int samples_per_iter = 1000;
  int iterations = 15;
  double gamma = 0.9;
  std::uint64_t seed = 42;
  bool resample_each_iter = true;
};

/// samples_per_iter states with i.i.d. uniform (0,1) coordinates, drawn
/// deterministically from cfg.seed (advance selects the iteration's block).
std::vector<StateVector> sample_states(const LearnConfig& cfg, int advance = 0);

/// One-step lookahead target R(x) + gamma * max over every insertion
/// (identity included) of the current value estimate at the successor.
/// Reliable comparisons throughout.
double bellman_target(const StateVector& x, const ValueParams& vp);

struct LearnResult {
  ValueParams params;
  std::vector<double> residual_rms;  // regression residual per iteration
};

/**
 * Value iteration with the linear feature map: repeatedly computes
 * one-step targets under the current weights and refits the weights by
 * unregularized least squares of targets onto [f1 f2]. Deterministic for
 * a fixed config. Throws if the feature matrix is rank deficient (all
 * samples sorted or otherwise degenerate) with advice to raise the sample
 * count.
 */
LearnResult avi_learn(const LearnConfig& cfg);

}  // namespace rlsort
