#include <optional>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

using namespace sdepthlab;

namespace {

bool sameRoot(const std::optional<Monomial>& a, const std::optional<Monomial>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || *a == *b;
}

}  // namespace

TEST_CASE("fiber root closed form matches the box-scan oracle exhaustively") {
  const std::vector<std::vector<int>> zSets{{}, {0}, {1}, {0, 1}};
  Monomial t(2);
  for (long long a = 0; a <= 4; ++a) {
    for (long long b = 0; b <= 4; ++b) {
      t[0] = a;
      t[1] = b;
      for (const auto& Z : zSets) {
        for (int k = 1; k <= 3; ++k) {
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(k);
          CHECK(sameRoot(fiberRoot(t, Z, k), oracles::fiberRootByScan(t, Z, k)));
        }
      }
    }
  }
}

TEST_CASE("fiber root closed form matches the oracle on random triples") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3;
    Monomial t(n);
    std::vector<int> Z;
    for (int j = 0; j < n; ++j) {
      t[j] = Exponent(static_cast<long long>(rng() % 6));
      if (rng() % 2 == 1) Z.push_back(j);
    }
    const int k = 1 + static_cast<int>(rng() % 4);
    CAPTURE(trial);
    CHECK(sameRoot(fiberRoot(t, Z, k), oracles::fiberRootByScan(t, Z, k)));
  }
}

TEST_CASE("fiber root golden values") {
  Monomial t44 = parseMonomialText("x1^4*x2^4", 3);
  auto r44 = fiberRoot(t44, {0, 1}, 2);
  REQUIRE(r44.has_value());
  CHECK(*r44 == parseMonomialText("x1^2*x2^2", 3));

  CHECK_FALSE(fiberRoot(parseMonomialText("x1^4*x2^4*x3", 3), {0, 1}, 2).has_value());

  auto r422 = fiberRoot(parseMonomialText("x1^4*x2^2*x3^2", 3), {0, 1}, 2);
  REQUIRE(r422.has_value());
  CHECK(*r422 == parseMonomialText("x1^2*x2*x3", 3));

  // The root itself lies in the fiber: its k-th power sits in the space.
  StanleySpace space{parseMonomialText("x1^4*x2^2*x3^2", 3), {0, 1}};
  CHECK(space.contains(*r422 * Exponent(2)));

  CHECK_THROWS_AS(fiberRoot(t44, {0, 1}, 0), PreconditionError);
  Monomial negative = Monomial::Zero(2);
  negative[0] = -1;
  CHECK_THROWS_AS(fiberRoot(negative, {}, 2), PreconditionError);
}

TEST_CASE("transfer maps a power decomposition onto the closure") {
  MonomialIdeal I = parseIdealText("x1^2", 1);
  std::vector<StanleySpace> spaces{{parseMonomialText("x1^4", 1), {0}}};
  TransferReport r = transfer(spaces, I, zeroIdeal(I.context()), 2);
  CHECK(r.k == 2);
  CHECK(r.inputSdepth == 1);
  CHECK(r.outputSdepth == 1);
  REQUIRE(r.output.spaces.size() == 1);
  CHECK(r.output.spaces[0].t[0] == 2);
  CHECK(r.output.numerator == integralClosure(I));
  CHECK(verifyDecomposition(r.output).ok);
  REQUIRE(r.outcomes.size() == 1);
  CHECK(r.outcomes[0].kept);

  std::vector<StanleySpace> wrong{{parseMonomialText("x1^5", 1), {0}}};
  CHECK_THROWS_AS(transfer(wrong, I, zeroIdeal(I.context()), 2), PreconditionError);
  CHECK_THROWS_AS(transfer(spaces, I, zeroIdeal(I.context()), 0), PreconditionError);
}

TEST_CASE("transfer from a plain power requires a uniform-exponent multiple") {
  MonomialIdeal I0 = parseIdealText("x1^2*x2^2, x1^2*x3^2, x2^2*x3^2");
  std::vector<StanleySpace> spaces{{parseMonomialText("x1^2*x2^2", 3), {0, 1, 2}}};
  CHECK_THROWS_AS(transferFromPower(spaces, I0, zeroIdeal(I0.context()), 1, 1),
                  PreconditionError);

  MonomialIdeal P = parseIdealText("x1^2", 1);
  std::vector<StanleySpace> four{{parseMonomialText("x1^4", 1), {0}}};
  TransferReport r = transferFromPower(four, P, zeroIdeal(P.context()), 2, 1);
  CHECK(r.k == 1);
  CHECK(r.s == 2);
  REQUIRE(r.output.spaces.size() == 1);
  CHECK(r.output.spaces[0].t[0] == 2);
  CHECK(verifyDecomposition(r.output).ok);
  CHECK_THROWS_AS(transferFromPower(four, P, zeroIdeal(P.context()), 0, 1), PreconditionError);
}

TEST_CASE("transferred witnesses stay verified with no depth loss") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    RandomIdealSpec spec;
    spec.seed = seed;
    spec.n = 2;
    spec.maxExponent = 3;
    MonomialIdeal I = randomIdeal(spec);
    CAPTURE(seed);
    const int k = uniformExponent(I);
    MonomialIdeal clPk = integralClosure(power(I, k));
    for (Mode mode : {Mode::quotient, Mode::residue}) {
      CharacteristicPoset poset(clPk, zeroIdeal(I.context()), mode);
      SdepthResult r = sdepthExact(poset);
      REQUIRE(r.exact);
      StanleyDecomposition D = partitionToDecomposition(r.witness, poset);
      TransferReport t = transfer(D.spaces, I, zeroIdeal(I.context()), k, mode);
      CHECK(t.inputSdepth == r.value);
      CHECK(verifyDecomposition(t.output, 1).ok);
      CHECK(verifyDecomposition(t.output, 2).ok);
      CHECK(t.outputSdepth >= t.inputSdepth);
      for (const SpaceOutcome& o : t.outcomes) {
        if (o.kept) {
          CHECK(sameRoot(fiberRoot(o.space.t, o.space.Z, k), std::optional<Monomial>(o.root)));
        } else {
          CHECK_FALSE(fiberRoot(o.space.t, o.space.Z, k).has_value());
        }
      }
    }
  }
}
