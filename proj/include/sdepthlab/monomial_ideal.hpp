#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "sdepthlab/errors.hpp"
#include "sdepthlab/exponents.hpp"

namespace sdepthlab {

/// The ambient polynomial ring, reduced to what matters computationally:
/// a variable count and display names. Coefficients play no role anywhere.
class VariableContext {
public:
  explicit VariableContext(int n, std::vector<std::string> names = {})
      : n_(n), names_(std::move(names)) {
    if (n < 1) throw PreconditionError("variable count must be at least 1");
    if (names_.empty()) {
      names_.reserve(static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) names_.push_back("x" + std::to_string(i));
    }
    if (static_cast<int>(names_.size()) != n) {
      throw PreconditionError("expected " + std::to_string(n) + " variable names");
    }
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw PreconditionError("variable names must be distinct");
    }
  }

  int size() const { return n_; }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const VariableContext& a, const VariableContext& b) {
    return a.n_ == b.n_;
  }

private:
  int n_;
  std::vector<std::string> names_;
};

/// A monomial prime ideal, i.e. a subset of the variables. The empty subset
/// encodes the zero prime. Indices are 0-based here; the text/JSON layer is
/// 1-based.
class MonomialPrime {
public:
  MonomialPrime() = default;
  explicit MonomialPrime(std::vector<int> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  }

  const std::vector<int>& vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  bool containsVar(int i) const {
    return std::binary_search(vars_.begin(), vars_.end(), i);
  }

  friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) {
    return a.vars_ == b.vars_;
  }
  friend bool operator<(const MonomialPrime& a, const MonomialPrime& b) {
    return a.vars_ < b.vars_;
  }

private:
  std::vector<int> vars_;
};

/// A monomial ideal, held as its unique minimal monomial generating set.
/// The empty set is the zero ideal, {1} the unit ideal. Generators are kept
/// pairwise incomparable under divisibility and lex-descending, so equal
/// ideals compare equal structurally.
class MonomialIdeal {
public:
  /// The zero ideal.
  explicit MonomialIdeal(VariableContext ctx) : ctx_(std::move(ctx)) {}

  /// Minimalizes: keeps the divisibility-minimal subset of `gens`.
  MonomialIdeal(VariableContext ctx, std::vector<Monomial> gens)
      : ctx_(std::move(ctx)) {
    const int n = ctx_.size();
    for (const Monomial& g : gens) {
      if (g.size() != n) throw PreconditionError("monomial dimension mismatch");
      if ((g.array() < 0).any()) throw PreconditionError("negative exponent");
    }
    // Scan by increasing degree. A divisor of the same degree is the monomial
    // itself, and duplicates sit adjacent after sorting, so each candidate
    // only needs testing against kept generators of strictly smaller degree.
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      return gradedLexLess(a, b);
    });
    std::vector<Exponent> keptDegrees;
    std::size_t cutoff = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i > 0 && gens[i] == gens[i - 1]) continue;
      const Exponent degree = totalDegree(gens[i]);
      while (cutoff < keptDegrees.size() && keptDegrees[cutoff] < degree) ++cutoff;
      bool redundant = false;
      for (std::size_t j = 0; j < cutoff; ++j) {
        if (divides(gens_[j], gens[i])) {
          redundant = true;
          break;
        }
      }
      if (!redundant) {
        gens_.push_back(gens[i]);
        keptDegrees.push_back(degree);
      }
    }
    std::sort(gens_.begin(), gens_.end(), [](const Monomial& a, const Monomial& b) {
      return lexLess(b, a);
    });
  }

  const VariableContext& context() const { return ctx_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  int vars() const { return ctx_.size(); }

  bool isZero() const { return gens_.empty(); }
  bool isUnit() const { return gens_.size() == 1 && isConstantOne(gens_.front()); }
  bool isProper() const { return !isZero() && !isUnit(); }

  /// Membership: some generator divides u.
  bool contains(const Monomial& u) const {
    if (u.size() != ctx_.size()) throw PreconditionError("monomial dimension mismatch");
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return divides(g, u); });
  }

  /// Componentwise max of generator exponents (zero vector for the zero
  /// ideal). Every minimal generator of the integral closure fits under it.
  Monomial exponentBound() const {
    Monomial g = Monomial::Zero(ctx_.size());
    for (const Monomial& v : gens_) g = g.cwiseMax(v);
    return g;
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.vars() == b.vars() && a.gens_ == b.gens_;
  }

private:
  VariableContext ctx_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal zeroIdeal(const VariableContext& ctx) { return MonomialIdeal(ctx); }

inline MonomialIdeal unitIdeal(const VariableContext& ctx) {
  return MonomialIdeal(ctx, {constantOne(ctx.size())});
}

/// Divisibility-minimal subset of an explicit generating set.
inline MonomialIdeal minimalize(std::vector<Monomial> gens, const VariableContext& ctx) {
  return MonomialIdeal(ctx, std::move(gens));
}

inline void requireSameContext(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars()) throw PreconditionError("ideals live in different rings");
}

/// Generator-wise inclusion test: J is contained in I iff every generator of
/// J is a member of I.
inline bool isSubsetOf(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  requireSameContext(inner, outer);
  return std::all_of(inner.gens().begin(), inner.gens().end(),
                     [&](const Monomial& g) { return outer.contains(g); });
}

inline MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  requireSameContext(a, b);
  std::vector<Monomial> products;
  products.reserve(a.gens().size() * b.gens().size());
  for (const Monomial& u : a.gens()) {
    for (const Monomial& v : b.gens()) products.push_back(u + v);
  }
  return MonomialIdeal(a.context(), std::move(products));
}

/// I^k for k >= 1.
inline MonomialIdeal power(const MonomialIdeal& ideal, int k) {
  if (k < 1) throw PreconditionError("power exponent must be at least 1");
  MonomialIdeal result = ideal;
  for (int i = 1; i < k; ++i) result = multiply(result, ideal);
  return result;
}

/// Colon ideal (I : c) = ({ g / gcd(g, c) : g in G(I) }).
inline MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& c) {
  if (c.size() != ideal.vars()) throw PreconditionError("monomial dimension mismatch");
  std::vector<Monomial> quotients;
  quotients.reserve(ideal.gens().size());
  for (const Monomial& g : ideal.gens()) quotients.push_back(g - gcdOf(g, c));
  return MonomialIdeal(ideal.context(), std::move(quotients));
}

/// Radical: squarefree supports of the generators, minimalized.
inline MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> supports;
  supports.reserve(ideal.gens().size());
  for (const Monomial& g : ideal.gens()) {
    supports.push_back(g.unaryExpr([](const Exponent& e) { return Exponent(e > 0 ? 1 : 0); }));
  }
  return MonomialIdeal(ideal.context(), std::move(supports));
}

/// Edge ideal (x_i x_j : {i, j} an edge), 1-based vertex indices.
inline MonomialIdeal edgeIdeal(int n, const std::vector<std::pair<int, int>>& edges) {
  VariableContext ctx(n);
  std::vector<Monomial> gens;
  gens.reserve(edges.size());
  for (auto [i, j] : edges) {
    if (i < 1 || j < 1 || i > n || j > n) throw PreconditionError("edge index out of range");
    if (i == j) throw PreconditionError("loops are not allowed");
    Monomial m = Monomial::Zero(n);
    m[i - 1] = 1;
    m[j - 1] = 1;
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(ctx, std::move(gens));
}

/// Number of minimal generators.
inline std::size_t numGenerators(const MonomialIdeal& ideal) { return ideal.gens().size(); }

}  // namespace sdepthlab
