#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <limits>

#include "sdepthlab/errors.hpp"

namespace sdepthlab {

/// Exponents are arbitrary-precision integers: powers of an ideal multiply
/// exponents, and nothing here should ever overflow silently.
using Exponent = boost::multiprecision::cpp_int;

/// A monomial x1^a1 * ... * xn^an is its dense exponent vector (a1, ..., an).
using Monomial = Eigen::Matrix<Exponent, Eigen::Dynamic, 1>;

/// b is divisible by a, i.e. a <= b componentwise.
template <typename A, typename B>
bool divides(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return (a.array() <= b.array()).all();
}

template <typename A, typename B>
auto gcdOf(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a.cwiseMin(b);
}

template <typename A, typename B>
auto lcmOf(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a.cwiseMax(b);
}

template <typename A>
auto totalDegree(const Eigen::MatrixBase<A>& a) {
  return a.sum();
}

template <typename A>
bool isConstantOne(const Eigen::MatrixBase<A>& a) {
  return (a.array() == 0).all();
}

/// Plain lexicographic order on exponent vectors, first coordinate dominant.
template <typename A, typename B>
bool lexLess(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

/// Graded lexicographic order: total degree first, then lex.
template <typename A, typename B>
bool gradedLexLess(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  auto da = totalDegree(a);
  auto db = totalDegree(b);
  if (da != db) return da < db;
  return lexLess(a, b);
}

inline Monomial constantOne(int n) { return Monomial::Zero(n); }

/// Checked narrowing used by the lattice engines and the JSON layer; the
/// objects in scope are desk scale, so a miss indicates misuse.
inline std::int64_t toInt64(const Exponent& e) {
  if (e < std::numeric_limits<std::int64_t>::min() ||
      e > std::numeric_limits<std::int64_t>::max()) {
    throw PreconditionError("exponent does not fit in 64 bits: " + e.str());
  }
  return e.convert_to<std::int64_t>();
}

}  // namespace sdepthlab
