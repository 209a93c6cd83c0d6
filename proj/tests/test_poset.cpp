#include <vector>

#include "doctest.h"
#include "oracles.hpp"

using namespace sdepthlab;

namespace {

Monomial mono(const std::string& text, int n) { return parseMonomialText(text, n); }

}  // namespace

TEST_CASE("rho counts coordinates at the ceiling") {
  Monomial g = mono("x1^2*x2^2*x3^2", 3);
  CHECK(rho(mono("x1^2*x2^2*x3^2", 3), g) == 3);
  CHECK(rho(mono("x1^2*x2^2", 3), g) == 2);
  CHECK(rho(mono("x1*x2*x3", 3), g) == 0);
  CHECK(rho(constantOne(3), g) == 0);
  CHECK_THROWS_AS(rho(mono("x1^3", 3), g), PreconditionError);
  CHECK_THROWS_AS(rho(constantOne(2), g), PreconditionError);
}

TEST_CASE("stanley space membership") {
  StanleySpace s{mono("x1^2*x2", 3), {1, 2}};
  CHECK(s.contains(mono("x1^2*x2", 3)));
  CHECK(s.contains(mono("x1^2*x2^5*x3^7", 3)));
  CHECK_FALSE(s.contains(mono("x1^3*x2", 3)));
  CHECK_FALSE(s.contains(mono("x1*x2", 3)));
  CHECK_FALSE(s.contains(mono("x1^2*x3", 3)));
}

TEST_CASE("poset points mirror module membership") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RandomIdealSpec spec;
    spec.seed = seed;
    spec.n = 2 + static_cast<int>(seed % 2);
    spec.maxExponent = 3;
    MonomialIdeal I = randomIdeal(spec);
    CAPTURE(seed);
    for (Mode mode : {Mode::quotient, Mode::residue}) {
      CharacteristicPoset poset(I, zeroIdeal(I.context()), mode);
      long long previous = -1;
      for (long long idx : poset.points()) {
        CHECK(idx > previous);
        previous = idx;
        CHECK(poset.inPoset(idx));
        std::vector<long long> coords;
        poset.decode(idx, coords);
        CHECK(poset.encode(coords) == idx);
        Monomial u = poset.decodeMonomial(idx);
        CHECK(I.contains(u) == (mode == Mode::quotient));
      }
      long long members = 0;
      for (long long idx = 0; idx < poset.boxSize(); ++idx) {
        members += poset.inPoset(idx) ? 1 : 0;
      }
      CHECK(members == static_cast<long long>(poset.points().size()));
    }
  }
}

TEST_CASE("poset golden sizes") {
  MonomialIdeal cl = integralClosure(parseIdealText("x1^2*x2^2, x1^2*x3^2, x2^2*x3^2"));
  CHECK(idealPoset(cl).points().size() == 10);
  CHECK(residuePoset(parseIdealText("x1", 1)).points().size() == 1);
  CHECK(idealPoset(parseIdealText("x1", 1)).points().size() == 1);
}

TEST_CASE("poset mode preconditions") {
  MonomialIdeal I = parseIdealText("x1^2", 2);
  MonomialIdeal J = parseIdealText("x2", 2);
  CHECK_THROWS_AS(CharacteristicPoset(I, J, Mode::quotient), PreconditionError);
  CHECK_THROWS_AS(CharacteristicPoset(I, J, Mode::residue), PreconditionError);
  CHECK_THROWS_AS(CharacteristicPoset(I, parseIdealText("x1", 3), Mode::quotient),
                  PreconditionError);
  MonomialIdeal fine = parseIdealText("x1^2*x2", 2);
  CHECK(CharacteristicPoset(I, fine, Mode::quotient).points().size() > 0);
}

TEST_CASE("interval partitions expand to validated decompositions") {
  MonomialIdeal I = parseIdealText("x1^2", 1);
  CharacteristicPoset poset = residuePoset(I);
  REQUIRE(poset.points().size() == 2);

  IntervalPartition joint{{{mono("1", 1), mono("x1", 1)}}};
  StanleyDecomposition D = partitionToDecomposition(joint, poset);
  REQUIRE(D.spaces.size() == 2);
  CHECK(D.spaces[0].Z.empty());
  CHECK(D.spaces[1].Z.empty());
  CHECK(sdepthOf(D) == 0);
  CHECK(verifyDecomposition(D).ok);

  IntervalPartition split{{{mono("1", 1), mono("1", 1)}, {mono("x1", 1), mono("x1", 1)}}};
  CHECK(partitionToDecomposition(split, poset).spaces.size() == 2);

  IntervalPartition escaping{{{mono("1", 1), mono("x1^2", 1)}}};
  CHECK_THROWS_AS(partitionToDecomposition(escaping, poset), PreconditionError);
  IntervalPartition incomplete{{{mono("1", 1), mono("1", 1)}}};
  CHECK_THROWS_AS(partitionToDecomposition(incomplete, poset), PreconditionError);
  IntervalPartition overlapping{
      {{mono("1", 1), mono("x1", 1)}, {mono("x1", 1), mono("x1", 1)}}};
  CHECK_THROWS_AS(partitionToDecomposition(overlapping, poset), PreconditionError);
  IntervalPartition disordered{{{mono("x1", 1), mono("1", 1)}}};
  CHECK_THROWS_AS(partitionToDecomposition(disordered, poset), PreconditionError);

  CharacteristicPoset principal = idealPoset(parseIdealText("x1", 1));
  IntervalPartition whole{{{mono("x1", 1), mono("x1", 1)}}};
  StanleyDecomposition P = partitionToDecomposition(whole, principal);
  REQUIRE(P.spaces.size() == 1);
  CHECK(P.spaces[0].Z == std::vector<int>{0});
  CHECK(sdepthOf(P) == 1);
  CHECK(verifyDecomposition(P, 2).ok);
}

TEST_CASE("verification pinpoints the defect") {
  MonomialIdeal I = parseIdealText("x1", 1);
  StanleyDecomposition good{Mode::residue, I, zeroIdeal(I.context()), {{constantOne(1), {}}}};
  CHECK(verifyDecomposition(good).ok);
  CHECK(verifyDecomposition(good, 3).ok);

  StanleyDecomposition doubled = good;
  doubled.spaces.push_back({constantOne(1), {}});
  VerificationResult dv = verifyDecomposition(doubled);
  CHECK_FALSE(dv.ok);
  CHECK(dv.issue == "double-covered");
  CHECK(dv.spaceIndices.size() == 2);

  StanleyDecomposition escaping = good;
  escaping.spaces.push_back({mono("x1", 1), {}});
  VerificationResult ev = verifyDecomposition(escaping);
  CHECK_FALSE(ev.ok);
  CHECK(ev.issue == "escaping");
  CHECK(ev.where[0] == 1);

  StanleyDecomposition empty{Mode::residue, I, zeroIdeal(I.context()), {}};
  VerificationResult uv = verifyDecomposition(empty);
  CHECK_FALSE(uv.ok);
  CHECK(uv.issue == "uncovered");
  CHECK(isConstantOne(uv.where));

  CHECK_THROWS_AS(verifyDecomposition(good, -1), PreconditionError);
  StanleyDecomposition badZ = good;
  badZ.spaces[0].Z = {1};
  CHECK_THROWS_AS(verifyDecomposition(badZ), PreconditionError);
  StanleyDecomposition residueWithDenominator{Mode::residue, I, I, good.spaces};
  CHECK_THROWS_AS(verifyDecomposition(residueWithDenominator), PreconditionError);
}
