#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sdepthlab/errors.hpp"
#include "sdepthlab/newton.hpp"
#include "sdepthlab/poset.hpp"

namespace sdepthlab {

/// Root of the k-th power fiber of the space t*K[Z]: the gcd of all
/// monomials u with u^k in t*K[Z]. Such u satisfy k*u_j = t_j off Z and
/// k*u_j >= t_j on Z, so the set is empty exactly when k fails to divide
/// some off-Z exponent; otherwise the gcd has u_j = t_j/k off Z and
/// u_j = ceil(t_j/k) on Z, and itself lies in the fiber.
inline std::optional<Monomial> fiberRoot(const Monomial& t, const std::vector<int>& Z, int k) {
  if (k < 1) throw PreconditionError("power exponent must be at least 1");
  if ((t.array() < 0).any()) throw PreconditionError("negative exponent");
  Monomial u(t.size());
  const Exponent kk(k);
  for (Eigen::Index j = 0; j < t.size(); ++j) {
    bool free = std::binary_search(Z.begin(), Z.end(), static_cast<int>(j));
    if (free) {
      u[j] = (t[j] + kk - 1) / kk;
    } else {
      if (t[j] % kk != 0) return std::nullopt;
      u[j] = t[j] / kk;
    }
  }
  return u;
}

/// What happened to one input space during a transfer.
struct SpaceOutcome {
  StanleySpace space;
  bool kept = false;
  Monomial root;
};

struct TransferReport {
  int k = 1;
  int s = 1;
  int inputSdepth = 0;
  int outputSdepth = 0;
  StanleyDecomposition output;
  std::vector<SpaceOutcome> outcomes;
};

namespace detail {

inline TransferReport transferSpaces(const std::vector<StanleySpace>& spaces, int k, Mode mode,
                                     MonomialIdeal numerator, MonomialIdeal denominator) {
  StanleyDecomposition output{mode, std::move(numerator), std::move(denominator), {}};
  std::vector<SpaceOutcome> outcomes;
  std::size_t minZ = spaces.empty() ? 0 : spaces.front().Z.size();
  for (const StanleySpace& s : spaces) {
    minZ = std::min(minZ, s.Z.size());
    std::optional<Monomial> root = fiberRoot(s.t, s.Z, k);
    SpaceOutcome outcome{s, root.has_value(), Monomial()};
    if (root) {
      outcome.root = *root;
      output.spaces.push_back({*root, s.Z});
    }
    outcomes.push_back(std::move(outcome));
  }
  int outputSdepth = output.spaces.empty() ? 0 : sdepthOf(output);
  return {k, 1, static_cast<int>(minZ), outputSdepth, std::move(output), std::move(outcomes)};
}

}  // namespace detail

/// Transfers a Stanley decomposition of closure(I^k)/closure(J^k) to one of
/// closure(I)/closure(J): each space either maps to its fiber root with the
/// same Z or is dropped when its fiber is empty. The input is verified
/// before transforming; a decomposition that fails to tile the source module
/// is rejected. Residue mode runs the parallel S/closure(I^k) construction.
inline TransferReport transfer(const std::vector<StanleySpace>& spaces, const MonomialIdeal& I,
                               const MonomialIdeal& J, int k, Mode mode = Mode::quotient,
                               int margin = 1) {
  if (k < 1) throw PreconditionError("power exponent must be at least 1");
  requireSameContext(I, J);
  MonomialIdeal sourceNum = integralClosure(power(I, k));
  MonomialIdeal sourceDen = J.isZero() ? J : integralClosure(power(J, k));
  StanleyDecomposition input{mode, std::move(sourceNum), std::move(sourceDen), spaces};
  VerificationResult check = verifyDecomposition(input, margin);
  if (!check.ok) {
    throw PreconditionError("input decomposition fails verification: " + check.issue);
  }
  return detail::transferSpaces(spaces, k, mode, integralClosure(I),
                                J.isZero() ? J : integralClosure(J));
}

/// Transfers a Stanley decomposition of I1^{sk}/I2^{sk} directly to
/// closure(I1)/closure(I2). k must be a common multiple of the uniform
/// exponents of the two ideals, which is the hypothesis that makes every
/// surviving root land in the closure. Spaces map through fiberRoot with
/// exponent s*k.
inline TransferReport transferFromPower(const std::vector<StanleySpace>& spaces,
                                        const MonomialIdeal& I1, const MonomialIdeal& I2, int s,
                                        int k, Mode mode = Mode::quotient, int margin = 1) {
  if (s < 1) throw PreconditionError("power multiplier must be at least 1");
  if (k < 1) throw PreconditionError("power exponent must be at least 1");
  requireSameContext(I1, I2);
  if (!I1.isZero() && k % uniformExponent(I1) != 0) {
    throw PreconditionError("k is not a multiple of the uniform exponent of the numerator");
  }
  if (!I2.isZero() && k % uniformExponent(I2) != 0) {
    throw PreconditionError("k is not a multiple of the uniform exponent of the denominator");
  }
  MonomialIdeal sourceNum = I1.isZero() ? I1 : power(I1, s * k);
  MonomialIdeal sourceDen = I2.isZero() ? I2 : power(I2, s * k);
  StanleyDecomposition input{mode, std::move(sourceNum), std::move(sourceDen), spaces};
  VerificationResult check = verifyDecomposition(input, margin);
  if (!check.ok) {
    throw PreconditionError("input decomposition fails verification: " + check.issue);
  }
  TransferReport report = detail::transferSpaces(spaces, s * k, mode, integralClosure(I1),
                                                 I2.isZero() ? I2 : integralClosure(I2));
  report.k = k;
  report.s = s;
  return report;
}

}  // namespace sdepthlab
