#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "sdepthlab/errors.hpp"
#include "sdepthlab/monomial_ideal.hpp"
#include "sdepthlab/newton.hpp"

namespace sdepthlab {

/// Seeded generator recipe. Same spec, same ideal, on every platform: draws
/// go through a rejection-sampled uniform on raw mt19937_64 output rather
/// than the standard distributions, whose streams vary across library
/// implementations.
struct RandomIdealSpec {
  std::uint64_t seed = 1;
  int n = 3;
  int maxExponent = 3;
  int minGens = 2;
  int maxGens = 4;
  bool equigenerated = false;
  bool squarefree = false;
  bool integrallyCloseAfter = false;
};

namespace detail {

inline std::uint64_t uniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

inline int uniformInt(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(uniformBelow(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace detail

inline MonomialIdeal randomIdeal(const RandomIdealSpec& spec) {
  if (spec.n < 1) throw PreconditionError("need at least one variable");
  if (spec.maxExponent < 1) throw PreconditionError("max exponent must be at least 1");
  if (spec.minGens < 1 || spec.maxGens < spec.minGens) {
    throw PreconditionError("bad generator count range");
  }
  if (spec.equigenerated && spec.integrallyCloseAfter) {
    throw PreconditionError(
        "equigenerated + integrally-close-after is unsupported: closing does not "
        "preserve the single-degree guarantee");
  }

  std::mt19937_64 rng(spec.seed);
  const int maxE = spec.squarefree ? 1 : spec.maxExponent;

  // The requested count applies to the minimal generating set, so redraw
  // whenever minimalization collapses the sample below the range.
  long long attempts = 0;
  while (true) {
    if (++attempts > 10'000) throw Error("random ideal sampling stalled");
    const int count = detail::uniformInt(rng, spec.minGens, spec.maxGens);
    std::vector<Monomial> gens;
    Exponent targetDegree = -1;
    long long draws = 0;
    while (static_cast<int>(gens.size()) < count) {
      if (++draws > 10'000'000) throw Error("random ideal sampling stalled");
      Monomial m(spec.n);
      for (int j = 0; j < spec.n; ++j) m[j] = Exponent(detail::uniformInt(rng, 0, maxE));
      if (isConstantOne(m)) continue;
      if (spec.equigenerated) {
        if (targetDegree < 0) {
          targetDegree = totalDegree(m);
        } else if (totalDegree(m) != targetDegree) {
          continue;
        }
      }
      gens.push_back(std::move(m));
    }
    MonomialIdeal ideal(VariableContext(spec.n), std::move(gens));
    if (static_cast<int>(numGenerators(ideal)) < spec.minGens) continue;
    if (spec.integrallyCloseAfter) ideal = integralClosure(ideal);
    return ideal;
  }
}

/// A uniformly drawn nonempty variable subset.
inline MonomialPrime randomPrime(std::mt19937_64& rng, int n) {
  while (true) {
    std::vector<int> vars;
    for (int j = 0; j < n; ++j) {
      if (detail::uniformBelow(rng, 2) == 1) vars.push_back(j);
    }
    if (!vars.empty()) return MonomialPrime(std::move(vars));
  }
}

/// A uniformly drawn forest on n vertices: each vertex beyond the first
/// either starts a new component or attaches to an earlier vertex. Returns
/// the edge list (1-based); p = n - edges.size() components.
inline std::vector<std::pair<int, int>> randomForest(std::mt19937_64& rng, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= n; ++v) {
    int parent = detail::uniformInt(rng, 0, v - 1);
    if (parent >= 1) edges.push_back({parent, v});
  }
  return edges;
}

}  // namespace sdepthlab
