#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "sdepthlab/errors.hpp"
#include "sdepthlab/exponents.hpp"
#include "sdepthlab/monomial_ideal.hpp"
#include "sdepthlab/rational_kernel.hpp"

namespace sdepthlab {

/// Witness that u falls in the integral closure: u^k lands in I^k.
struct ClosureCertificate {
  Monomial u;
  int k = 1;
};

/// Is a in the Newton polyhedron conv{generator exponents} + R_{>=0}^n?
/// Solved as exact feasibility of lambda >= 0, slack s >= 0 with
/// sum(lambda) = 1 and V^T lambda + s = a.
inline bool npMember(const MonomialIdeal& ideal, const Monomial& a) {
  if (ideal.isZero()) throw PreconditionError("Newton polyhedron of the zero ideal is empty");
  if (a.size() != ideal.vars()) throw PreconditionError("monomial dimension mismatch");
  if ((a.array() < 0).any()) throw PreconditionError("negative exponent");
  if (ideal.contains(a)) return true;

  const auto& gens = ideal.gens();
  const Eigen::Index m = static_cast<Eigen::Index>(gens.size());
  const Eigen::Index n = ideal.vars();
  RationalMatrix A = RationalMatrix::Zero(n + 1, m + n);
  RationalVector b = RationalVector::Zero(n + 1);
  for (Eigen::Index i = 0; i < m; ++i) A(0, i) = 1;
  b[0] = 1;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) {
      A(j + 1, i) = Rational(gens[static_cast<std::size_t>(i)][j]);
    }
    A(j + 1, m + j) = 1;
    b[j + 1] = Rational(a[j]);
  }
  return feasibleEqNonneg(std::move(A), std::move(b));
}

namespace detail {

/// All lattice points of [0, box], graded-lex sorted. Guarded because the
/// closure enumeration is exponential in the variable count by nature.
inline std::vector<Monomial> boxPoints(const Monomial& box, const Exponent& minDegree) {
  Exponent size = 1;
  for (Eigen::Index j = 0; j < box.size(); ++j) size *= box[j] + 1;
  if (size > 4'000'000) {
    throw PreconditionError("generator box is too large to enumerate");
  }
  std::vector<Monomial> points;
  Monomial a = Monomial::Zero(box.size());
  while (true) {
    if (totalDegree(a) >= minDegree) points.push_back(a);
    Eigen::Index j = box.size() - 1;
    while (j >= 0 && a[j] == box[j]) a[j--] = 0;
    if (j < 0) break;
    ++a[j];
  }
  std::sort(points.begin(), points.end(), [](const Monomial& x, const Monomial& y) {
    return gradedLexLess(x, y);
  });
  return points;
}

}  // namespace detail

/// Minimal generators of the integral closure: the divisibility-minimal
/// lattice points of the Newton polyhedron. Minimal generators fit in the
/// componentwise generator box (a point sticking out in coordinate j stays
/// in the polyhedron after subtracting e_j, so it is not minimal), which
/// makes box enumeration complete. Graded-lex order with divisibility
/// pruning keeps the accepted set minimal as discovered.
inline MonomialIdeal integralClosure(const MonomialIdeal& ideal) {
  if (ideal.isZero() || ideal.isUnit()) return ideal;

  Exponent minDegree = totalDegree(ideal.gens().front());
  for (const Monomial& g : ideal.gens()) minDegree = std::min(minDegree, totalDegree(g));

  std::vector<Monomial> closureGens;
  for (const Monomial& candidate : detail::boxPoints(ideal.exponentBound(), minDegree)) {
    bool dominated = std::any_of(closureGens.begin(), closureGens.end(), [&](const Monomial& g) {
      return divides(g, candidate);
    });
    if (!dominated && npMember(ideal, candidate)) closureGens.push_back(candidate);
  }
  return MonomialIdeal(ideal.context(), std::move(closureGens));
}

inline bool isIntegrallyClosed(const MonomialIdeal& ideal) {
  return integralClosure(ideal) == ideal;
}

/// Least k >= 1 with u^k in I^k. Requires u in the closure, which is what
/// guarantees the upward search terminates.
inline int closureExponent(const MonomialIdeal& ideal, const Monomial& u, long maxSteps = 0) {
  if (!npMember(ideal, u)) {
    throw PreconditionError("monomial lies outside the integral closure");
  }
  MonomialIdeal pow = ideal;
  for (int k = 1;; ++k) {
    if (maxSteps > 0 && k > maxSteps) {
      throw Error("closure exponent search exceeded the step limit");
    }
    if (pow.contains(u * Exponent(k))) return k;
    pow = multiply(pow, ideal);
  }
}

/// lcm of the closure exponents of the minimal generators of the closure.
/// For this k, membership in the closure matches u^k in I^k for every u.
inline int uniformExponent(const MonomialIdeal& ideal, long maxSteps = 0) {
  if (ideal.isZero()) throw PreconditionError("uniform exponent of the zero ideal is undefined");
  const MonomialIdeal closure = integralClosure(ideal);
  long long k = 1;
  for (const Monomial& u : closure.gens()) {
    k = std::lcm(k, static_cast<long long>(closureExponent(ideal, u, maxSteps)));
  }
  return static_cast<int>(k);
}

inline std::vector<ClosureCertificate> closureCertificates(const MonomialIdeal& ideal,
                                                           long maxSteps = 0) {
  const MonomialIdeal closure = integralClosure(ideal);
  std::vector<ClosureCertificate> certs;
  for (const Monomial& u : closure.gens()) {
    certs.push_back({u, closureExponent(ideal, u, maxSteps)});
  }
  return certs;
}

/// Checks I^k integrally closed for k = 1..K; reports the first failure.
struct NormalityReport {
  bool normal = true;
  int firstFailing = 0;
};

inline NormalityReport isNormalUpTo(const MonomialIdeal& ideal, int K) {
  if (K < 1) throw PreconditionError("horizon must be at least 1");
  if (ideal.isZero() || ideal.isUnit()) return {true, 0};
  MonomialIdeal pow = ideal;
  for (int k = 1; k <= K; ++k) {
    if (!isIntegrallyClosed(pow)) return {false, k};
    if (k < K) pow = multiply(pow, ideal);
  }
  return {true, 0};
}

}  // namespace sdepthlab
