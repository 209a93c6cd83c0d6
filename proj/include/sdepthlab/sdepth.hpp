#pragma once

#include <algorithm>
#include <chrono>
#include <utility>
#include <vector>

#include "sdepthlab/errors.hpp"
#include "sdepthlab/poset.hpp"

namespace sdepthlab {

/// Caps for the exponential interval-partition search. Zero means unbounded.
struct SearchLimits {
  long long maxSteps = 0;
  double timeoutSeconds = 0;
};

/// Search outcome. When a limit cuts the search short, `exact` is false and
/// `value` is the best certified lower bound; the witness always attains
/// `value`.
struct SdepthResult {
  int value = 0;
  bool exact = true;
  IntervalPartition witness;
  long long steps = 0;
};

namespace detail {

/// Branch and bound over interval partitions of a characteristic poset.
///
/// The lex-least uncovered point is forced as the next lower endpoint: any
/// partition's interval through that point has a lower endpoint that is a
/// componentwise-smaller poset point, hence lex-smaller, hence the point
/// itself. Branching over all admissible upper endpoints therefore reaches
/// every partition. Candidates are tried by decreasing rho so strong
/// incumbents arrive early; a branch is cut when it can no longer strictly
/// beat the incumbent.
class SdepthSearch {
public:
  SdepthSearch(const CharacteristicPoset& poset, const SearchLimits& limits)
      : poset_(poset), limits_(limits) {
    if (poset_.empty()) throw PreconditionError("the module is zero");
  }

  SdepthResult run() {
    covered_.assign(static_cast<std::size_t>(poset_.boxSize()), 0);

    // Singleton partition as the initial incumbent: always valid, so the
    // search returns a certified bound even when limits strike immediately.
    best_ = poset_.vars() + 1;
    for (long long p : poset_.points()) best_ = std::min(best_, poset_.rhoOf(p));
    bestWitness_.clear();
    for (long long p : poset_.points()) bestWitness_.push_back({p, p});

    // Static cap per point: the best rho any interval through the point can
    // reach, ignoring covering. The min cap over uncovered points bounds
    // every completion, which settles "prove the value is optimal" branches
    // without enumerating cover permutations.
    staticCap_.assign(static_cast<std::size_t>(poset_.boxSize()), 0);
    int ceiling = poset_.vars() + 1;
    for (long long p : poset_.points()) {
      int cap = 0;
      for (auto [rhoD, d] : admissibleUppers(p)) cap = std::max(cap, rhoD);
      staticCap_[static_cast<std::size_t>(p)] = cap;
      ceiling = std::min(ceiling, cap);
    }

    startTime_ = std::chrono::steady_clock::now();
    if (best_ < ceiling) dfs(0, poset_.vars() + 1);

    SdepthResult result;
    result.value = best_;
    result.exact = !limitHit_;
    result.steps = steps_;
    for (auto [lo, hi] : bestWitness_) {
      result.witness.intervals.push_back(
          {poset_.decodeMonomial(lo), poset_.decodeMonomial(hi)});
    }
    return result;
  }

private:
  bool outOfBudget() {
    ++steps_;
    if (limits_.maxSteps > 0 && steps_ > limits_.maxSteps) limitHit_ = true;
    if (!limitHit_ && limits_.timeoutSeconds > 0 && (steps_ & 1023) == 0) {
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - startTime_;
      if (elapsed.count() > limits_.timeoutSeconds) limitHit_ = true;
    }
    return limitHit_;
  }

  void dfs(std::size_t cursor, int curMin) {
    if (outOfBudget()) return;

    const auto& points = poset_.points();
    while (cursor < points.size() && covered_[static_cast<std::size_t>(points[cursor])]) {
      ++cursor;
    }
    if (cursor == points.size()) {
      if (curMin > best_) {
        best_ = curMin;
        bestWitness_ = stack_;
      }
      return;
    }
    if (curMin <= best_) return;
    for (std::size_t i = cursor; i < points.size(); ++i) {
      const std::size_t p = static_cast<std::size_t>(points[i]);
      if (!covered_[p] && staticCap_[p] <= best_) return;
    }

    const long long anchor = points[cursor];
    std::vector<std::pair<int, long long>> candidates = admissibleUppers(anchor);
    std::sort(candidates.begin(), candidates.end(),
              [](const std::pair<int, long long>& x, const std::pair<int, long long>& y) {
                return x.first != y.first ? x.first > y.first : x.second < y.second;
              });

    std::vector<long long> cells;
    for (auto [rhoD, d] : candidates) {
      if (std::min(curMin, rhoD) <= best_) break;
      cells.clear();
      collectBox(anchor, d, cells);
      for (long long c : cells) covered_[static_cast<std::size_t>(c)] = 1;
      stack_.push_back({anchor, d});
      dfs(cursor + 1, std::min(curMin, rhoD));
      stack_.pop_back();
      for (long long c : cells) covered_[static_cast<std::size_t>(c)] = 0;
      if (limitHit_) return;
    }
  }

  /// All d >= anchor whose full box [anchor, d] stays inside the poset and
  /// clear of covered points. Lex-ascending dynamic program: d qualifies iff
  /// d itself does and every d - e_j with d_j > anchor_j qualifies.
  std::vector<std::pair<int, long long>> admissibleUppers(long long anchor) {
    const std::size_t n = poset_.dims().size();
    poset_.decode(anchor, lo_);
    hi_.resize(n);
    subDims_.resize(n);
    subStrides_.assign(n, 1);
    long long subSize = 1;
    for (std::size_t j = 0; j < n; ++j) {
      hi_[j] = poset_.gInt()[j];
      subDims_[j] = hi_[j] - lo_[j] + 1;
    }
    for (std::size_t j = n - 1; j > 0; --j) subStrides_[j - 1] = subStrides_[j] * subDims_[j];
    for (std::size_t j = 0; j < n; ++j) subSize *= subDims_[j];
    admissible_.assign(static_cast<std::size_t>(subSize), 0);

    std::vector<std::pair<int, long long>> candidates;
    walkBox(lo_, hi_, [&](const std::vector<long long>& d) {
      long long idx = poset_.encode(d);
      if (covered_[static_cast<std::size_t>(idx)] || !poset_.inPoset(idx)) return true;
      long long sub = 0;
      for (std::size_t j = 0; j < n; ++j) sub += (d[j] - lo_[j]) * subStrides_[j];
      for (std::size_t j = 0; j < n; ++j) {
        if (d[j] > lo_[j] && !admissible_[static_cast<std::size_t>(sub - subStrides_[j])]) {
          return true;
        }
      }
      admissible_[static_cast<std::size_t>(sub)] = 1;
      candidates.push_back({poset_.rhoOf(idx), idx});
      return true;
    });
    return candidates;
  }

  void collectBox(long long loIdx, long long hiIdx, std::vector<long long>& out) {
    poset_.decode(loIdx, lo_);
    poset_.decode(hiIdx, hi_);
    walkBox(lo_, hi_, [&](const std::vector<long long>& a) {
      out.push_back(poset_.encode(a));
      return true;
    });
  }

  const CharacteristicPoset& poset_;
  SearchLimits limits_;
  std::vector<std::uint8_t> covered_;
  std::vector<int> staticCap_;
  std::vector<std::uint8_t> admissible_;
  std::vector<long long> lo_, hi_, subDims_, subStrides_;
  std::vector<std::pair<long long, long long>> stack_;
  std::vector<std::pair<long long, long long>> bestWitness_;
  int best_ = 0;
  long long steps_ = 0;
  bool limitHit_ = false;
  std::chrono::steady_clock::time_point startTime_;
};

}  // namespace detail

/// Max over interval partitions of the min interval rho; the witness
/// partition attains the value. Rejects the zero module.
inline SdepthResult sdepthExact(const CharacteristicPoset& poset, const SearchLimits& limits = {}) {
  return detail::SdepthSearch(poset, limits).run();
}

inline SdepthResult sdepthExact(const MonomialIdeal& I, const MonomialIdeal& J,
                                const SearchLimits& limits = {}) {
  return sdepthExact(CharacteristicPoset(I, J, Mode::quotient), limits);
}

/// Stanley depth of the ideal I viewed as a module (I/0).
inline SdepthResult sdepthOfIdeal(const MonomialIdeal& I, const SearchLimits& limits = {}) {
  return sdepthExact(idealPoset(I), limits);
}

/// Stanley depth of S/I.
inline SdepthResult sdepthOfResidue(const MonomialIdeal& I, const SearchLimits& limits = {}) {
  return sdepthExact(residuePoset(I), limits);
}

}  // namespace sdepthlab
