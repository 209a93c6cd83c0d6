#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "sdepthlab/errors.hpp"

namespace sdepthlab {

using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Exact feasibility of { x >= 0 : A x = b } by phase-one simplex.
///
/// One artificial variable per row, maximize minus their sum; the system is
/// feasible iff the optimum is zero. Bland's smallest-index rule for both the
/// entering and the leaving variable, so the method terminates on every input
/// despite degeneracy. All arithmetic is rational, no tolerances anywhere.
inline bool feasibleEqNonneg(RationalMatrix A, RationalVector b) {
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  if (b.size() != m) throw PreconditionError("rhs dimension mismatch");

  for (Eigen::Index i = 0; i < m; ++i) {
    if (b[i] < 0) {
      A.row(i) = -A.row(i);
      b[i] = -b[i];
    }
  }

  // Tableau: m constraint rows then the objective row; columns are the n
  // original variables, m artificials, and the rhs. Row i starts with the
  // artificial a_i basic, so the objective row (which encodes
  // w + sum(artificials) = 0 for w = -sum(artificials)) is priced out by
  // subtracting every constraint row.
  const Eigen::Index cols = n + m + 1;
  RationalMatrix T = RationalMatrix::Zero(m + 1, cols);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) T(i, j) = A(i, j);
    T(i, n + i) = 1;
    T(i, cols - 1) = b[i];
  }
  for (Eigen::Index i = 0; i < m; ++i) T(m, n + i) = 1;
  for (Eigen::Index i = 0; i < m; ++i) T.row(m) -= T.row(i);

  std::vector<Eigen::Index> basic(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) basic[static_cast<std::size_t>(i)] = n + i;

  while (true) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < cols - 1; ++j) {
      if (T(m, j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    Rational bestRatio = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (T(i, enter) <= 0) continue;
      Rational ratio = T(i, cols - 1) / T(i, enter);
      if (leave < 0 || ratio < bestRatio ||
          (ratio == bestRatio &&
           basic[static_cast<std::size_t>(i)] < basic[static_cast<std::size_t>(leave)])) {
        leave = i;
        bestRatio = ratio;
      }
    }
    if (leave < 0) throw Error("phase-one objective unbounded");

    Rational pivot = T(leave, enter);
    T.row(leave) /= pivot;
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == leave) continue;
      Rational f = T(i, enter);
      if (f != 0) T.row(i) -= f * T.row(leave);
    }
    basic[static_cast<std::size_t>(leave)] = enter;
  }

  return T(m, cols - 1) == 0;
}

/// Rank over the rationals by Gaussian elimination with exact arithmetic.
inline int rationalRank(RationalMatrix M) {
  const Eigen::Index rows = M.rows();
  const Eigen::Index cols = M.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (M(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) M.row(p).swap(M.row(r));
    Rational lead = M(r, c);
    M.row(r) /= lead;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r) continue;
      Rational f = M(i, c);
      if (f != 0) M.row(i) -= f * M.row(r);
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace sdepthlab
