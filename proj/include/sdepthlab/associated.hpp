#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sdepthlab/errors.hpp"
#include "sdepthlab/monomial_ideal.hpp"
#include "sdepthlab/newton.hpp"

namespace sdepthlab {

namespace detail {

inline void requireWitnessBox(const Monomial& cap) {
  Exponent size = 1;
  for (Eigen::Index j = 0; j < cap.size(); ++j) size *= cap[j] + 1;
  if (size > 2'000'000) throw PreconditionError("witness box is too large to enumerate");
}

/// Is the ideal a monomial prime? True when every generator is a single
/// variable to the first power.
inline std::optional<MonomialPrime> asPrime(const MonomialIdeal& ideal) {
  std::vector<int> vars;
  for (const Monomial& g : ideal.gens()) {
    int supportVar = -1;
    for (Eigen::Index j = 0; j < g.size(); ++j) {
      if (g[j] == 0) continue;
      if (g[j] != 1 || supportVar >= 0) return std::nullopt;
      supportVar = static_cast<int>(j);
    }
    if (supportVar < 0) return std::nullopt;
    vars.push_back(supportVar);
  }
  if (vars.empty()) return std::nullopt;
  return MonomialPrime(std::move(vars));
}

}  // namespace detail

/// Associated primes of S/I: monomial primes of the form (I : c) for a
/// monomial witness c. Capping c at the componentwise generator maximum is
/// exhaustive, since gcd(g, c) never looks above g's own exponents.
inline std::vector<MonomialPrime> assPrimes(const MonomialIdeal& ideal) {
  if (!ideal.isProper()) throw PreconditionError("associated primes need a proper nonzero ideal");
  std::set<MonomialPrime> found;
  const Monomial cap = ideal.exponentBound();
  detail::requireWitnessBox(cap);
  const Eigen::Index n = ideal.vars();
  Monomial c = Monomial::Zero(n);
  while (true) {
    if (auto prime = detail::asPrime(colon(ideal, c))) found.insert(*prime);
    Eigen::Index j = n - 1;
    while (j >= 0 && c[j] == cap[j]) c[j--] = 0;
    if (j < 0) break;
    ++c[j];
  }
  return {found.begin(), found.end()};
}

/// Lex-least capped witness c with colon(I, c) = P, if P is associated.
inline std::optional<Monomial> assWitness(const MonomialIdeal& ideal, const MonomialPrime& P) {
  if (!ideal.isProper()) throw PreconditionError("associated primes need a proper nonzero ideal");
  const Monomial cap = ideal.exponentBound();
  detail::requireWitnessBox(cap);
  const Eigen::Index n = ideal.vars();
  Monomial c = Monomial::Zero(n);
  while (true) {
    if (auto prime = detail::asPrime(colon(ideal, c)); prime && *prime == P) return c;
    Eigen::Index j = n - 1;
    while (j >= 0 && c[j] == cap[j]) c[j--] = 0;
    if (j < 0) break;
    ++c[j];
  }
  return std::nullopt;
}

/// An ideal moved to the subring on P's variables, with the index map back
/// to the original ring: varMap[i] is the original 0-based index of the
/// i-th variable of the localized context.
struct LocalizedIdeal {
  MonomialIdeal ideal;
  std::vector<int> varMap;
};

/// Substitutes 1 for every variable outside P and re-indexes into the
/// smaller ring S(P).
inline LocalizedIdeal localize(const MonomialIdeal& ideal, const MonomialPrime& P) {
  if (P.size() == 0) throw PreconditionError("localization needs a nonempty prime");
  for (int v : P.vars()) {
    if (v < 0 || v >= ideal.vars()) throw PreconditionError("prime variable out of range");
  }
  std::vector<int> varMap = P.vars();
  std::vector<std::string> names;
  names.reserve(varMap.size());
  for (int v : varMap) names.push_back(ideal.context().name(v));
  VariableContext ctx(static_cast<int>(varMap.size()), std::move(names));

  std::vector<Monomial> gens;
  gens.reserve(ideal.gens().size());
  for (const Monomial& g : ideal.gens()) {
    Monomial image(static_cast<Eigen::Index>(varMap.size()));
    for (std::size_t i = 0; i < varMap.size(); ++i) {
      image[static_cast<Eigen::Index>(i)] = g[varMap[i]];
    }
    gens.push_back(std::move(image));
  }
  return {MonomialIdeal(ctx, std::move(gens)), std::move(varMap)};
}

/// Checks closure(I(P)) = closure(I)(P), which holds for every monomial
/// ideal; false flags a genuine implementation or theory discrepancy.
inline bool localizationCommutesWithClosure(const MonomialIdeal& ideal, const MonomialPrime& P) {
  if (ideal.isZero()) throw PreconditionError("closure localization needs a nonzero ideal");
  MonomialIdeal left = integralClosure(localize(ideal, P).ideal);
  MonomialIdeal right = localize(integralClosure(ideal), P).ideal;
  return left == right;
}

/// Associated primes of S/I^k and S/closure(I^k) for k = 1..K, with
/// empirically detected stabilization. stableAt is the least index from
/// which the chain is constant through K; the chain counts as stabilized
/// within the horizon only when that index is strictly below K (a constant
/// tail of length one proves nothing).
struct AssChainReport {
  int K = 0;
  std::vector<std::vector<MonomialPrime>> powers;
  std::vector<std::vector<MonomialPrime>> closures;
  int stablePowersAt = 0;
  int stableClosuresAt = 0;
  bool powersStabilized = false;
  bool closuresStabilized = false;
  bool closuresAscending = true;
};

namespace detail {

inline int stabilizationIndex(const std::vector<std::vector<MonomialPrime>>& chain) {
  int m = static_cast<int>(chain.size());
  while (m > 1 && chain[static_cast<std::size_t>(m - 2)] == chain.back()) --m;
  return m;
}

inline bool primeSubset(const std::vector<MonomialPrime>& a, const std::vector<MonomialPrime>& b) {
  return std::all_of(a.begin(), a.end(), [&](const MonomialPrime& p) {
    return std::find(b.begin(), b.end(), p) != b.end();
  });
}

}  // namespace detail

inline AssChainReport assChain(const MonomialIdeal& ideal, int K) {
  if (K < 1) throw PreconditionError("horizon must be at least 1");
  if (!ideal.isProper()) throw PreconditionError("chains need a proper nonzero ideal");
  AssChainReport report;
  report.K = K;
  MonomialIdeal pow = ideal;
  for (int k = 1; k <= K; ++k) {
    report.powers.push_back(assPrimes(pow));
    report.closures.push_back(assPrimes(integralClosure(pow)));
    if (k < K) pow = multiply(pow, ideal);
  }
  report.stablePowersAt = detail::stabilizationIndex(report.powers);
  report.stableClosuresAt = detail::stabilizationIndex(report.closures);
  report.powersStabilized = report.stablePowersAt < K;
  report.closuresStabilized = report.stableClosuresAt < K;
  for (int k = 0; k + 1 < K; ++k) {
    if (!detail::primeSubset(report.closures[static_cast<std::size_t>(k)],
                             report.closures[static_cast<std::size_t>(k + 1)])) {
      report.closuresAscending = false;
    }
  }
  return report;
}

enum class RatliffVerdict { holds, fails, inconclusive };

struct RatliffResult {
  RatliffVerdict verdict = RatliffVerdict::inconclusive;
  AssChainReport chain;
};

/// Within-horizon test of the inclusion of the stabilized closure-chain set
/// in the stabilized power-chain set. Inconclusive unless both chains
/// repeat their final set at least once inside the horizon.
inline RatliffResult ratliffCheck(const MonomialIdeal& ideal, int K) {
  RatliffResult result;
  result.chain = assChain(ideal, K);
  if (!result.chain.powersStabilized || !result.chain.closuresStabilized) {
    result.verdict = RatliffVerdict::inconclusive;
    return result;
  }
  result.verdict = detail::primeSubset(result.chain.closures.back(), result.chain.powers.back())
                       ? RatliffVerdict::holds
                       : RatliffVerdict::fails;
  return result;
}

}  // namespace sdepthlab
