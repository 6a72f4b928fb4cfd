#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "rlsort/comparator.hpp"
#include "rlsort/varspace.hpp"

namespace rlsort {

/// Sorting-progress features: f1 counts displaced adjacent pairs,
/// f2 accumulates the squared negative adjacent gaps.
struct FeatureVector {
  double f1 = 0.0;
  double f2 = 0.0;
};

/// Learned value-function weights plus the discount used while learning.
struct ValueParams {
  Eigen::Vector2d theta{0.0, 0.0};
  double gamma = 0.9;

  /// Both weights strictly negative: the hypothesis under which the greedy
  /// agent provably makes monotone progress on reliable comparisons.
  bool stability_precondition() const { return theta(0) < 0.0 && theta(1) < 0.0; }
};

/// Both features over the d-1 adjacent pairs. One comparison per pair
/// decides membership for f1 and f2 together.
template <Comparator C>
FeatureVector features(const StateVector& x, C&& cmp) {
  FeatureVector f;
  const int d = static_cast<int>(x.size());
  for (int i = 1; i < d; ++i) {
    const double gap = x(i) - x(i - 1);
    if (cmp(gap < 0.0)) {
      f.f1 += 1.0;
      f.f2 += gap * gap;
    }
  }
  return f;
}

/// Sum of negative adjacent gaps plus a fixed bonus of 1000 when no pair
/// is judged displaced. Nonpositive for arrays seen as unsorted.
template <Comparator C>
double reward(const StateVector& x, C&& cmp) {
  double r = 0.0;
  int displaced = 0;
  const int d = static_cast<int>(x.size());
  for (int i = 1; i < d; ++i) {
    const double gap = x(i) - x(i - 1);
    if (cmp(gap < 0.0)) {
      r += gap;
      ++displaced;
    }
  }
  if (displaced == 0) r += 1000.0;
  return r;
}

constexpr double kSortedBonus = 1000.0;

/// Linear state value theta^T [f1 f2]; zero exactly when both features are.
template <Comparator C>
double value(const StateVector& x, const ValueParams& vp, C&& cmp) {
  const FeatureVector f = features(x, cmp);
  return vp.theta(0) * f.f1 + vp.theta(1) * f.f2;
}

namespace detail {
/// Value contribution of one adjacent pair (lo before hi). One draw.
template <Comparator C>
inline double pair_value(double lo, double hi, const ValueParams& vp, C& cmp) {
  const double gap = hi - lo;
  if (cmp(gap < 0.0)) return vp.theta(0) + vp.theta(1) * gap * gap;
  return 0.0;
}
}  // namespace detail

/**
 * Change in value from moving element i to position j, computed from the
 * at most six adjacent-pair terms the move creates or destroys instead of
 * rescanning the array. Matches value(list_insert(x,i,j)) - value(x)
 * exactly under a reliable comparator; under a faulty one the two routes
 * draw differently and may disagree.
 *
 * Pair terms are evaluated in a fixed order (removal/creation pairs left
 * to right) so faulty streams replay deterministically.
 */
template <Comparator C>
double residual(const StateVector& x, int i, int j, const ValueParams& vp,
                C&& cmp) {
  const int d = static_cast<int>(x.size());
  detail::require_index(i, d, "source");
  detail::require_index(j, d, "destination");
  if (i == j) return 0.0;
  double dv = 0.0;
  if (i < j) {
    // [.., x_{i-1}, x_{i+1}, .., x_j, x_i, x_{j+1}, ..]
    if (i >= 2)
      dv += detail::pair_value(x(i - 2), x(i), vp, cmp) -
            detail::pair_value(x(i - 2), x(i - 1), vp, cmp);
    dv += detail::pair_value(x(j - 1), x(i - 1), vp, cmp) -
          detail::pair_value(x(i - 1), x(i), vp, cmp);
    if (j <= d - 1)
      dv += detail::pair_value(x(i - 1), x(j), vp, cmp) -
            detail::pair_value(x(j - 1), x(j), vp, cmp);
  } else {
    // [.., x_{j-1}, x_i, x_j, .., x_{i-1}, x_{i+1}, ..]
    if (j >= 2)
      dv += detail::pair_value(x(j - 2), x(i - 1), vp, cmp) -
            detail::pair_value(x(j - 2), x(j - 1), vp, cmp);
    dv += detail::pair_value(x(i - 1), x(j - 1), vp, cmp) -
          detail::pair_value(x(i - 2), x(i - 1), vp, cmp);
    if (i <= d - 1)
      dv += detail::pair_value(x(i - 2), x(i), vp, cmp) -
            detail::pair_value(x(i - 1), x(i), vp, cmp);
  }
  return dv;
}

}  // namespace rlsort
