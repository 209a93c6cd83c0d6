#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sdepthlab/errors.hpp"
#include "sdepthlab/exponents.hpp"
#include "sdepthlab/monomial_ideal.hpp"

namespace sdepthlab {

/// Which module a poset or decomposition describes: I/J (with J possibly
/// zero) or the residue ring S/I.
enum class Mode { quotient, residue };

/// The space t*K[Z]: monomials matching t exactly off Z and dominating t
/// on Z. Z holds 0-based variable indices, sorted.
struct StanleySpace {
  Monomial t;
  std::vector<int> Z;

  bool contains(const Monomial& u) const {
    for (Eigen::Index j = 0; j < t.size(); ++j) {
      bool free = std::binary_search(Z.begin(), Z.end(), static_cast<int>(j));
      if (free ? (u[j] < t[j]) : (u[j] != t[j])) return false;
    }
    return true;
  }

  friend bool operator==(const StanleySpace& a, const StanleySpace& b) {
    return a.t == b.t && a.Z == b.Z;
  }
};

struct StanleyDecomposition {
  Mode mode;
  MonomialIdeal numerator;
  MonomialIdeal denominator;
  std::vector<StanleySpace> spaces;
};

/// min |Z_i| over the spaces.
inline int sdepthOf(const StanleyDecomposition& D) {
  if (D.spaces.empty()) throw PreconditionError("decomposition has no spaces");
  std::size_t best = D.spaces.front().Z.size();
  for (const StanleySpace& s : D.spaces) best = std::min(best, s.Z.size());
  return static_cast<int>(best);
}

/// Number of coordinates where b meets the ceiling g.
inline int rho(const Monomial& b, const Monomial& g) {
  if (b.size() != g.size()) throw PreconditionError("dimension mismatch");
  if (!divides(b, g)) throw PreconditionError("point exceeds the ceiling");
  int count = 0;
  for (Eigen::Index j = 0; j < g.size(); ++j) {
    if (b[j] == g[j]) ++count;
  }
  return count;
}

/// The finite poset of lattice points a <= g that represent the module's
/// monomials: a in I \ J for quotient mode, a not in I for residue mode.
/// Points are addressed by row-major linear index, so index order is lex
/// order with coordinate 0 most significant.
class CharacteristicPoset {
public:
  CharacteristicPoset(MonomialIdeal I, MonomialIdeal J, Mode mode)
      : mode_(mode), numerator_(std::move(I)), denominator_(std::move(J)) {
    requireSameContext(numerator_, denominator_);
    if (mode_ == Mode::quotient && !isSubsetOf(denominator_, numerator_)) {
      throw PreconditionError("denominator is not contained in the numerator");
    }
    if (mode_ == Mode::residue && !denominator_.isZero()) {
      throw PreconditionError("residue mode takes a single ideal");
    }

    Monomial g = numerator_.exponentBound().cwiseMax(denominator_.exponentBound());
    g_ = g;
    const int n = numerator_.vars();
    dims_.resize(static_cast<std::size_t>(n));
    gInt_.resize(static_cast<std::size_t>(n));
    long long size = 1;
    for (int j = 0; j < n; ++j) {
      gInt_[static_cast<std::size_t>(j)] = toInt64(g[j]);
      dims_[static_cast<std::size_t>(j)] = gInt_[static_cast<std::size_t>(j)] + 1;
      if (size > kMaxBox / dims_[static_cast<std::size_t>(j)]) {
        throw PreconditionError("poset box is too large to enumerate");
      }
      size *= dims_[static_cast<std::size_t>(j)];
    }
    strides_.assign(static_cast<std::size_t>(n), 1);
    for (int j = n - 2; j >= 0; --j) {
      strides_[static_cast<std::size_t>(j)] =
          strides_[static_cast<std::size_t>(j + 1)] * dims_[static_cast<std::size_t>(j + 1)];
    }
    boxSize_ = size;

    inPoset_.assign(static_cast<std::size_t>(size), 0);
    Monomial a = Monomial::Zero(n);
    for (long long idx = 0; idx < size; ++idx) {
      bool member = mode_ == Mode::quotient
                        ? numerator_.contains(a) && !denominator_.contains(a)
                        : !numerator_.contains(a);
      if (member) {
        inPoset_[static_cast<std::size_t>(idx)] = 1;
        points_.push_back(idx);
      }
      int j = n - 1;
      while (j >= 0 && a[j] == g[j]) a[j--] = 0;
      if (j >= 0) ++a[j];
    }
  }

  Mode mode() const { return mode_; }
  const MonomialIdeal& numerator() const { return numerator_; }
  const MonomialIdeal& denominator() const { return denominator_; }
  const Monomial& g() const { return g_; }
  int vars() const { return numerator_.vars(); }
  long long boxSize() const { return boxSize_; }
  const std::vector<long long>& dims() const { return dims_; }
  const std::vector<long long>& gInt() const { return gInt_; }
  const std::vector<long long>& strides() const { return strides_; }

  /// Poset points as sorted linear indices (= lex order on exponents).
  const std::vector<long long>& points() const { return points_; }
  bool empty() const { return points_.empty(); }

  bool inPoset(long long idx) const { return inPoset_[static_cast<std::size_t>(idx)] != 0; }

  void decode(long long idx, std::vector<long long>& out) const {
    out.resize(dims_.size());
    for (std::size_t j = 0; j < dims_.size(); ++j) {
      out[j] = idx / strides_[j];
      idx %= strides_[j];
    }
  }

  Monomial decodeMonomial(long long idx) const {
    Monomial m(static_cast<Eigen::Index>(dims_.size()));
    for (std::size_t j = 0; j < dims_.size(); ++j) {
      m[static_cast<Eigen::Index>(j)] = Exponent(idx / strides_[j]);
      idx %= strides_[j];
    }
    return m;
  }

  long long encode(const std::vector<long long>& a) const {
    long long idx = 0;
    for (std::size_t j = 0; j < a.size(); ++j) idx += a[j] * strides_[j];
    return idx;
  }

  int rhoOf(long long idx) const {
    int count = 0;
    for (std::size_t j = 0; j < dims_.size(); ++j) {
      long long c = idx / strides_[j];
      idx %= strides_[j];
      if (c == gInt_[j]) ++count;
    }
    return count;
  }

private:
  static constexpr long long kMaxBox = 4'000'000;

  Mode mode_;
  MonomialIdeal numerator_;
  MonomialIdeal denominator_;
  Monomial g_;
  std::vector<long long> dims_;
  std::vector<long long> gInt_;
  std::vector<long long> strides_;
  std::vector<std::uint8_t> inPoset_;
  std::vector<long long> points_;
  long long boxSize_ = 0;
};

inline CharacteristicPoset characteristicPoset(const MonomialIdeal& I, const MonomialIdeal& J) {
  return CharacteristicPoset(I, J, Mode::quotient);
}

inline CharacteristicPoset idealPoset(const MonomialIdeal& I) {
  return CharacteristicPoset(I, zeroIdeal(I.context()), Mode::quotient);
}

inline CharacteristicPoset residuePoset(const MonomialIdeal& I) {
  return CharacteristicPoset(I, zeroIdeal(I.context()), Mode::residue);
}

/// A lattice interval [lower, upper], both ends inclusive and inside the
/// poset it partitions.
struct Interval {
  Monomial lower;
  Monomial upper;
};

struct IntervalPartition {
  std::vector<Interval> intervals;
};

namespace detail {

/// Walks every lattice point of [lo, hi] (int64 coordinates), calling f with
/// the current point. f returns false to abort the walk.
template <typename F>
bool walkBox(const std::vector<long long>& lo, const std::vector<long long>& hi, F&& f) {
  std::vector<long long> a = lo;
  const std::size_t n = lo.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (lo[j] > hi[j]) return true;
  }
  while (true) {
    if (!f(a)) return false;
    std::size_t j = n;
    while (j > 0 && a[j - 1] == hi[j - 1]) {
      a[j - 1] = lo[j - 1];
      --j;
    }
    if (j == 0) return true;
    ++a[j - 1];
  }
}

}  // namespace detail

/// Expands an interval partition of the poset into the Stanley spaces it
/// denotes: an interval [c, d] with saturated set Z(d) = {j : d_j = g_j}
/// contributes x^a K[Z(d)] for every a in [c, d] frozen at c on Z(d).
/// The partition is validated first: intervals must lie inside the poset,
/// be pairwise disjoint, and cover every point.
inline StanleyDecomposition partitionToDecomposition(const IntervalPartition& partition,
                                                     const CharacteristicPoset& poset) {
  const std::size_t n = poset.dims().size();
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(poset.boxSize()), 0);
  long long covered = 0;

  std::vector<StanleySpace> spaces;
  std::vector<long long> lo(n), hi(n);
  for (const Interval& interval : partition.intervals) {
    if (interval.lower.size() != static_cast<Eigen::Index>(n) ||
        interval.upper.size() != static_cast<Eigen::Index>(n)) {
      throw PreconditionError("interval dimension mismatch");
    }
    if ((interval.lower.array() < 0).any()) {
      throw PreconditionError("negative exponent in interval");
    }
    if (!divides(interval.lower, interval.upper)) {
      throw PreconditionError("interval endpoints are out of order");
    }
    if (!divides(interval.upper, poset.g())) {
      throw PreconditionError("interval exceeds the poset ceiling");
    }
    for (std::size_t j = 0; j < n; ++j) {
      lo[j] = toInt64(interval.lower[static_cast<Eigen::Index>(j)]);
      hi[j] = toInt64(interval.upper[static_cast<Eigen::Index>(j)]);
    }
    bool ok = detail::walkBox(lo, hi, [&](const std::vector<long long>& a) {
      long long idx = poset.encode(a);
      if (!poset.inPoset(idx) || seen[static_cast<std::size_t>(idx)]) return false;
      seen[static_cast<std::size_t>(idx)] = 1;
      ++covered;
      return true;
    });
    if (!ok) {
      throw PreconditionError("intervals overlap or leave the poset");
    }

    std::vector<int> Z;
    for (std::size_t j = 0; j < n; ++j) {
      if (hi[j] == poset.gInt()[j]) Z.push_back(static_cast<int>(j));
    }
    // Roots range over the interval's free coordinates only.
    std::vector<long long> rootLo = lo, rootHi = hi;
    for (int j : Z) rootHi[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)];
    detail::walkBox(rootLo, rootHi, [&](const std::vector<long long>& a) {
      Monomial t(static_cast<Eigen::Index>(n));
      for (std::size_t j = 0; j < n; ++j) t[static_cast<Eigen::Index>(j)] = Exponent(a[j]);
      spaces.push_back({std::move(t), Z});
      return true;
    });
  }
  if (covered != static_cast<long long>(poset.points().size())) {
    throw PreconditionError("partition does not cover the poset");
  }
  return {poset.mode(), poset.numerator(), poset.denominator(), std::move(spaces)};
}

inline constexpr long long kMaxVerifyBox = 8'000'000;

/// Outcome of checking a claimed decomposition inside its verification box.
struct VerificationResult {
  bool ok = true;
  /// "", "uncovered", "double-covered", or "escaping".
  std::string issue;
  Monomial where;
  std::vector<std::size_t> spaceIndices;

  explicit operator bool() const { return ok; }
};

/// Exhaustive check inside the box spanned by all space roots and both
/// generator bounds, enlarged by `margin`: every module monomial must lie in
/// exactly one space and no space may reach outside the module. Reports the
/// lex-least offending point. Verdicts, not exceptions; only malformed input
/// (dimension or index errors) throws.
inline VerificationResult verifyDecomposition(const StanleyDecomposition& D, int margin = 1) {
  if (margin < 0) throw PreconditionError("margin must be non-negative");
  requireSameContext(D.numerator, D.denominator);
  if (D.mode == Mode::residue && !D.denominator.isZero()) {
    throw PreconditionError("residue mode takes a single ideal");
  }
  const int n = D.numerator.vars();
  for (const StanleySpace& s : D.spaces) {
    if (s.t.size() != n) throw PreconditionError("space dimension mismatch");
    if ((s.t.array() < 0).any()) throw PreconditionError("negative exponent in space root");
    for (std::size_t i = 0; i < s.Z.size(); ++i) {
      if (s.Z[i] < 0 || s.Z[i] >= n) throw PreconditionError("space variable index out of range");
      if (i > 0 && s.Z[i] <= s.Z[i - 1]) throw PreconditionError("space variables must ascend");
    }
  }

  Monomial bound = D.numerator.exponentBound().cwiseMax(D.denominator.exponentBound());
  for (const StanleySpace& s : D.spaces) bound = bound.cwiseMax(s.t);
  bound = bound + Monomial::Constant(n, Exponent(margin));

  long long size = 1;
  std::vector<long long> lo(static_cast<std::size_t>(n), 0);
  std::vector<long long> hi(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    hi[static_cast<std::size_t>(j)] = toInt64(bound[j]);
    if (size > kMaxVerifyBox / (hi[static_cast<std::size_t>(j)] + 1)) {
      throw Error("verification box is too large to enumerate");
    }
    size *= hi[static_cast<std::size_t>(j)] + 1;
  }

  VerificationResult result;
  Monomial u(n);
  detail::walkBox(lo, hi, [&](const std::vector<long long>& a) {
    for (int j = 0; j < n; ++j) u[j] = Exponent(a[static_cast<std::size_t>(j)]);
    bool member = D.mode == Mode::quotient
                      ? D.numerator.contains(u) && !D.denominator.contains(u)
                      : !D.numerator.contains(u);
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < D.spaces.size(); ++i) {
      if (D.spaces[i].contains(u)) hits.push_back(i);
    }
    if (!member && !hits.empty()) {
      result = {false, "escaping", u, std::move(hits)};
      return false;
    }
    if (member && hits.empty()) {
      result = {false, "uncovered", u, {}};
      return false;
    }
    if (member && hits.size() > 1) {
      result = {false, "double-covered", u, std::move(hits)};
      return false;
    }
    return true;
  });
  return result;
}

}  // namespace sdepthlab
