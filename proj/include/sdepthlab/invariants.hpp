#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "sdepthlab/errors.hpp"
#include "sdepthlab/monomial_ideal.hpp"
#include "sdepthlab/newton.hpp"
#include "sdepthlab/rational_kernel.hpp"
#include "sdepthlab/sdepth.hpp"

namespace sdepthlab {

inline std::size_t mu(const MonomialIdeal& ideal) { return ideal.gens().size(); }

namespace detail {

inline bool coversAllSupports(const std::vector<std::vector<int>>& supports,
                              const std::vector<int>& chosen) {
  return std::all_of(supports.begin(), supports.end(), [&](const std::vector<int>& sup) {
    return std::any_of(sup.begin(), sup.end(), [&](int v) {
      return std::binary_search(chosen.begin(), chosen.end(), v);
    });
  });
}

inline bool findCover(const std::vector<std::vector<int>>& supports,
                      const std::vector<int>& universe, std::size_t target,
                      std::size_t from, std::vector<int>& chosen) {
  if (chosen.size() == target) return coversAllSupports(supports, chosen);
  for (std::size_t i = from; i < universe.size(); ++i) {
    chosen.push_back(universe[i]);
    if (findCover(supports, universe, target, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// Minimum number of variables meeting every generator's support: the
/// height of the ideal, found as an exhaustive minimum vertex cover of the
/// support hypergraph.
inline int height(const MonomialIdeal& ideal) {
  if (!ideal.isProper()) throw PreconditionError("height needs a proper nonzero ideal");
  std::vector<std::vector<int>> supports;
  std::vector<int> universe;
  for (const Monomial& g : ideal.gens()) {
    std::vector<int> sup;
    for (Eigen::Index j = 0; j < g.size(); ++j) {
      if (g[j] > 0) sup.push_back(static_cast<int>(j));
    }
    supports.push_back(std::move(sup));
  }
  for (const auto& sup : supports) universe.insert(universe.end(), sup.begin(), sup.end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

  std::vector<int> chosen;
  for (std::size_t target = 1; target <= universe.size(); ++target) {
    chosen.clear();
    if (detail::findCover(supports, universe, target, 0, chosen)) {
      return static_cast<int>(target);
    }
  }
  throw Error("no vertex cover found");
}

struct ReductionResult {
  bool reduces = false;
  int t = 0;
};

/// Least t <= tMax with J * I^t = I^{t+1}, if any.
inline ReductionResult isReduction(const MonomialIdeal& J, const MonomialIdeal& I, int tMax) {
  if (tMax < 1) throw PreconditionError("horizon must be at least 1");
  if (!isSubsetOf(J, I)) throw PreconditionError("candidate reduction is not contained in the ideal");
  MonomialIdeal It = I;
  for (int t = 1; t <= tMax; ++t) {
    MonomialIdeal next = multiply(It, I);
    if (multiply(J, It) == next) return {true, t};
    It = std::move(next);
  }
  return {false, 0};
}

enum class SpreadMethod { equigeneratedRank, hilbertDifferences, undetermined };

inline std::string spreadMethodName(SpreadMethod m) {
  switch (m) {
    case SpreadMethod::equigeneratedRank: return "equigenerated-rank";
    case SpreadMethod::hilbertDifferences: return "hilbert-differences";
    default: return "undetermined";
  }
}

/// How an analytic-spread value was obtained. `value` is meaningful unless
/// the method is `undetermined`; the mu sequence and window are filled when
/// the Hilbert-difference route ran.
struct SpreadCertificate {
  SpreadMethod method = SpreadMethod::undetermined;
  int value = 0;
  std::vector<long long> muSequence;
  int degree = -1;
  int windowStart = 0;
  int horizon = 0;
};

inline bool isEquigenerated(const MonomialIdeal& ideal) {
  if (ideal.gens().empty()) return false;
  const Exponent d = totalDegree(ideal.gens().front());
  return std::all_of(ideal.gens().begin(), ideal.gens().end(),
                     [&](const Monomial& g) { return totalDegree(g) == d; });
}

namespace detail {

constexpr int kSpreadWindow = 3;

/// Degree detection on mu(I^k): iterate finite differences until the
/// trailing window of three entries is constant; the minimal such order is
/// the degree of the eventual polynomial and the spread is one more.
inline SpreadCertificate spreadFromDifferences(const MonomialIdeal& ideal, int K, int ht) {
  SpreadCertificate cert;
  cert.horizon = K;
  MonomialIdeal pow = ideal;
  for (int k = 1; k <= K; ++k) {
    cert.muSequence.push_back(static_cast<long long>(mu(pow)));
    if (k < K) pow = multiply(pow, ideal);
  }
  std::vector<long long> diff = cert.muSequence;
  for (int d = 0; static_cast<int>(diff.size()) >= kSpreadWindow; ++d) {
    bool stable = true;
    for (std::size_t i = diff.size() - kSpreadWindow; i + 1 < diff.size(); ++i) {
      if (diff[i] != diff[i + 1]) stable = false;
    }
    if (stable) {
      int value = d + 1;
      if (value < ht || value > ideal.vars()) return cert;
      cert.method = SpreadMethod::hilbertDifferences;
      cert.value = value;
      cert.degree = d;
      cert.windowStart = static_cast<int>(diff.size()) - kSpreadWindow + 1;
      return cert;
    }
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  return cert;
}

}  // namespace detail

/// Forces the Hilbert-difference route regardless of generator degrees.
inline SpreadCertificate analyticSpreadHilbert(const MonomialIdeal& ideal, int K = 8) {
  if (!ideal.isProper()) throw PreconditionError("analytic spread needs a proper nonzero ideal");
  if (K < 4) throw PreconditionError("horizon must be at least 4");
  return detail::spreadFromDifferences(ideal, K, height(ideal));
}

/// Analytic spread with a certificate. Equigenerated ideals take the exact
/// rank route (the fibre ring is a semigroup ring on the generator
/// exponents); everything else goes through mu(I^k) finite differences and
/// may honestly come back undetermined within the horizon.
inline SpreadCertificate analyticSpread(const MonomialIdeal& ideal, int K = 8) {
  if (!ideal.isProper()) throw PreconditionError("analytic spread needs a proper nonzero ideal");
  if (K < 4) throw PreconditionError("horizon must be at least 4");
  const int ht = height(ideal);
  if (isEquigenerated(ideal)) {
    RationalMatrix M(static_cast<Eigen::Index>(ideal.gens().size()), ideal.vars());
    for (std::size_t i = 0; i < ideal.gens().size(); ++i) {
      for (Eigen::Index j = 0; j < ideal.vars(); ++j) {
        M(static_cast<Eigen::Index>(i), j) = Rational(ideal.gens()[i][j]);
      }
    }
    SpreadCertificate cert;
    cert.method = SpreadMethod::equigeneratedRank;
    cert.value = rationalRank(std::move(M));
    cert.horizon = K;
    if (cert.value < ht || cert.value > ideal.vars()) {
      throw Error("rank certificate violates height bounds");
    }
    return cert;
  }
  return detail::spreadFromDifferences(ideal, K, ht);
}

/// One scanned instance of the closed-ideal Stanley depth inequalities:
/// sdepth(S/I) >= n - l and sdepth(I) >= n - l + 1.
struct ConjectureReport {
  int n = 0;
  int ell = 0;
  int sdepthResidue = 0;
  int sdepthIdeal = 0;
  bool residueHolds = false;
  bool idealHolds = false;
  bool counterexample = false;
  SpreadCertificate spread;
};

inline ConjectureReport conjectureCheck(const MonomialIdeal& ideal, int K = 8,
                                        const SearchLimits& limits = {}) {
  if (!ideal.isProper()) throw PreconditionError("the scanner needs a proper nonzero ideal");
  if (!isIntegrallyClosed(ideal)) {
    throw PreconditionError("the inequalities are only claimed for integrally closed ideals");
  }
  ConjectureReport report;
  report.n = ideal.vars();
  report.spread = analyticSpread(ideal, K);
  if (report.spread.method == SpreadMethod::undetermined) {
    throw PreconditionError("analytic spread undetermined within the horizon");
  }
  report.ell = report.spread.value;

  SdepthResult residue = sdepthOfResidue(ideal, limits);
  SdepthResult asIdeal = sdepthOfIdeal(ideal, limits);
  if (!residue.exact || !asIdeal.exact) {
    throw Error("Stanley depth search hit its limits; verdict would be unsound");
  }
  report.sdepthResidue = residue.value;
  report.sdepthIdeal = asIdeal.value;
  report.residueHolds = report.sdepthResidue >= report.n - report.ell;
  report.idealHolds = report.sdepthIdeal >= report.n - report.ell + 1;
  report.counterexample = !(report.residueHolds && report.idealHolds);
  return report;
}

}  // namespace sdepthlab
