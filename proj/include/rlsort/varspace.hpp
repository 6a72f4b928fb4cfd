#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>

namespace rlsort {

/// System state: the array being sorted, as a vector in R^d.
using StateVector = Eigen::VectorXd;

enum class ActionKind { insertion, assignment, const_assignment, summation, swap };

/**
 * Dense vector-transformation matrix realizing one program operation.
 *
 * Insertion matrices are permutations; the assignment / constant /
 * summation / swap constructions differ from the identity only in the
 * target row. Indices are 1-based throughout the public API. The dense
 * form exists for tests and analysis; hot paths move elements directly.
 */
struct ActionMatrix {
  ActionKind kind;
  int i = 0;       // source index
  int j = 0;       // destination index (first summand for summation)
  int j2 = 0;      // second summand (summation only)
  double c = 0.0;  // constant factor (const_assignment only)
  int dim = 0;
  Eigen::MatrixXd entries;
};

namespace detail {
inline void require_index(int idx, int dim, const char* what) {
  if (idx < 1 || idx > dim)
    throw std::out_of_range(std::string(what) + " index out of range");
}
}  // namespace detail

/// Removes the element at position i and reinserts it at position j,
/// shifting everything in between; all other relative order is preserved.
/// Reference semantics for the insertion action (1-based indices).
inline StateVector list_insert(const StateVector& x, int i, int j) {
  const int d = static_cast<int>(x.size());
  detail::require_index(i, d, "source");
  detail::require_index(j, d, "destination");
  StateVector y = x;
  double* data = y.data();
  if (i < j) {
    std::rotate(data + (i - 1), data + i, data + j);
  } else if (i > j) {
    std::rotate(data + (j - 1), data + (i - 1), data + i);
  }
  return y;
}

/// In-place variant of list_insert for hot loops.
inline void list_insert_inplace(StateVector& x, int i, int j) {
  double* data = x.data();
  if (i < j) {
    std::rotate(data + (i - 1), data + i, data + j);
  } else if (i > j) {
    std::rotate(data + (j - 1), data + (i - 1), data + i);
  }
}

/// Permutation matrix M with M*x == list_insert(x, i, j).
inline ActionMatrix insertion_matrix(int i, int j, int d) {
  detail::require_index(i, d, "source");
  detail::require_index(j, d, "destination");
  ActionMatrix m{ActionKind::insertion, i, j, 0, 0.0, d,
                 Eigen::MatrixXd::Zero(d, d)};
  // Row r of M selects the input coordinate that lands at output slot r.
  for (int r = 1; r <= d; ++r) {
    int src = r;
    if (r == j) {
      src = i;
    } else if (i < j && r >= i && r < j) {
      src = r + 1;
    } else if (i > j && r > j && r <= i) {
      src = r - 1;
    }
    m.entries(r - 1, src - 1) = 1.0;
  }
  return m;
}

/// Assignment x_i <- x_j; identity except row i, which picks column j.
inline ActionMatrix assignment_matrix(int i, int j, int d) {
  detail::require_index(i, d, "target");
  detail::require_index(j, d, "source");
  ActionMatrix m{ActionKind::assignment, i, j, 0, 0.0, d,
                 Eigen::MatrixXd::Identity(d, d)};
  m.entries(i - 1, i - 1) = 0.0;
  m.entries(i - 1, j - 1) = 1.0;
  return m;
}

/// Constant scaling of one slot, x_i <- c * x_i (m_{i,i} = c).
inline ActionMatrix const_assignment_matrix(int i, double c, int d) {
  detail::require_index(i, d, "target");
  ActionMatrix m{ActionKind::const_assignment, i, i, 0, c, d,
                 Eigen::MatrixXd::Identity(d, d)};
  m.entries(i - 1, i - 1) = c;
  return m;
}

/// Two-variable summation x_i <- x_{j1} + x_{j2}.
inline ActionMatrix summation_matrix(int i, int j1, int j2, int d) {
  detail::require_index(i, d, "target");
  detail::require_index(j1, d, "first summand");
  detail::require_index(j2, d, "second summand");
  ActionMatrix m{ActionKind::summation, i, j1, j2, 0.0, d,
                 Eigen::MatrixXd::Identity(d, d)};
  m.entries(i - 1, i - 1) = 0.0;
  m.entries(i - 1, j1 - 1) += 1.0;
  m.entries(i - 1, j2 - 1) += 1.0;
  return m;
}

/// Exchange of x_i and x_j.
inline ActionMatrix swap_matrix(int i, int j, int d) {
  detail::require_index(i, d, "first");
  detail::require_index(j, d, "second");
  ActionMatrix m{ActionKind::swap, i, j, 0, 0.0, d,
                 Eigen::MatrixXd::Identity(d, d)};
  m.entries(i - 1, i - 1) = 0.0;
  m.entries(j - 1, j - 1) = 0.0;
  m.entries(i - 1, j - 1) = 1.0;
  m.entries(j - 1, i - 1) = 1.0;
  if (i == j) m.entries(i - 1, i - 1) = 1.0;
  return m;
}

/// One step of the controlled system: x' = M x.
inline StateVector apply(const ActionMatrix& m, const StateVector& x) {
  if (m.dim != static_cast<int>(x.size()))
    throw std::invalid_argument("action/state dimension mismatch");
  return m.entries * x;
}

}  // namespace rlsort
