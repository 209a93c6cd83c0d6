#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

using namespace sdepthlab;

namespace {

Monomial mono(const std::string& text, int n) { return parseMonomialText(text, n); }

std::vector<Monomial> randomMonomials(std::mt19937_64& rng, int n, int count, int maxExp) {
  std::vector<Monomial> out;
  for (int i = 0; i < count; ++i) {
    Monomial m(n);
    for (int j = 0; j < n; ++j) {
      m[j] = Exponent(static_cast<long long>(rng() % static_cast<std::uint64_t>(maxExp + 1)));
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST_CASE("variable contexts validate their names") {
  CHECK_THROWS_AS(VariableContext(0), PreconditionError);
  CHECK_THROWS_AS(VariableContext(-2), PreconditionError);
  VariableContext ctx(3);
  CHECK(ctx.size() == 3);
  CHECK(ctx.name(0) == "x1");
  CHECK(ctx.name(2) == "x3");
  CHECK_THROWS_AS(VariableContext(2, {"a", "a"}), PreconditionError);
  CHECK_THROWS_AS(VariableContext(2, {"a"}), PreconditionError);
  CHECK(VariableContext(2, {"a", "b"}) == VariableContext(2));
}

TEST_CASE("construction keeps exactly the divisibility-minimal generators") {
  MonomialIdeal I = parseIdealText("x1^2, x1^3, x1*x2, x1^2*x2, x1*x2", 2);
  CHECK(printIdealText(I) == "x1^2, x1*x2");
  CHECK(I == parseIdealText("x1*x2, x1^2", 2));
  CHECK(numGenerators(I) == 2);

  MonomialIdeal full = parseIdealText(
      "x1^8, x1^7*x2, x1^6*x2^2, x1^5*x2^3, x1^4*x2^4, x1^3*x2^5, x1^2*x2^6, x1*x2^7, x2^8, "
      "x1^6*x2^4*x3");
  CHECK(numGenerators(full) == 9);
  CHECK_FALSE(full.gens().front()[2] > 0);
}

TEST_CASE("zero and unit ideals") {
  MonomialIdeal unit = parseIdealText("1, x1^5", 2);
  CHECK(unit.isUnit());
  CHECK(unit == unitIdeal(VariableContext(2)));
  CHECK(unit.contains(mono("x1*x2", 2)));
  CHECK(unit.contains(constantOne(2)));

  MonomialIdeal zero = parseIdealText("0", 2);
  CHECK(zero.isZero());
  CHECK_FALSE(zero.contains(constantOne(2)));
  CHECK_FALSE(zero.contains(mono("x1^3", 2)));
  CHECK_FALSE(zero.isProper());
  CHECK_FALSE(unit.isProper());
  CHECK(parseIdealText("x1", 1).isProper());
  CHECK(isConstantOne(zero.exponentBound()));
}

TEST_CASE("construction rejects malformed generators") {
  VariableContext ctx(2);
  Monomial wrongDim = Monomial::Zero(3);
  wrongDim[0] = 1;
  CHECK_THROWS_AS(MonomialIdeal(ctx, {wrongDim}), PreconditionError);
  Monomial negative = Monomial::Zero(2);
  negative[1] = -1;
  CHECK_THROWS_AS(MonomialIdeal(ctx, {negative}), PreconditionError);
}

TEST_CASE("minimal generating sets are incomparable, lex-descending, and generate") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    auto raw = randomMonomials(rng, n, 1 + static_cast<int>(rng() % 8), 4);
    MonomialIdeal I(VariableContext(n), raw);
    CAPTURE(trial);
    const auto& g = I.gens();
    REQUIRE_FALSE(g.empty());
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (i != j) CHECK_FALSE(divides(g[i], g[j]));
      }
      if (i + 1 < g.size()) CHECK(lexLess(g[i + 1], g[i]));
    }
    for (const Monomial& m : raw) CHECK(I.contains(m));
    CHECK(I == MonomialIdeal(VariableContext(n), g));
  }
}

TEST_CASE("membership is generator divisibility") {
  MonomialIdeal I = parseIdealText("x1^2, x2^2, x1*x2*x3");
  CHECK(I.contains(mono("x1^2", 3)));
  CHECK(I.contains(mono("x1^2*x3^5", 3)));
  CHECK_FALSE(I.contains(mono("x1*x2", 3)));
  CHECK(I.contains(mono("x1*x2*x3", 3)));
  CHECK_FALSE(I.contains(mono("x3^9", 3)));
  CHECK_THROWS_AS(I.contains(mono("x1", 2)), PreconditionError);
}

TEST_CASE("powers match the k-fold product expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    auto raw = randomMonomials(rng, n, 2 + static_cast<int>(rng() % 3), 3);
    MonomialIdeal I(VariableContext(n), raw);
    CAPTURE(trial);
    CHECK(power(I, 1) == I);
    for (int k = 2; k <= 3; ++k) CHECK(power(I, k) == oracles::powerByProducts(I, k));
  }
  CHECK_THROWS_AS(power(parseIdealText("x1", 1), 0), PreconditionError);
}

TEST_CASE("squaring the five-generator ideal leaves nine pure generators") {
  MonomialIdeal I = parseIdealText("x1^4, x1^3*x2, x1*x2^3, x2^4, x1^2*x2^2*x3");
  MonomialIdeal sq = power(I, 2);
  CHECK(numGenerators(sq) == 9);
  CHECK(sq == parseIdealText("x1^8, x1^7*x2, x1^6*x2^2, x1^5*x2^3, x1^4*x2^4, x1^3*x2^5, "
                             "x1^2*x2^6, x1*x2^7, x2^8",
                             3));
  for (const Monomial& g : sq.gens()) {
    CHECK(totalDegree(g) == 8);
    CHECK(g[2] == 0);
  }
}

TEST_CASE("colon ideal membership is shifted membership") {
  MonomialIdeal I = parseIdealText("x1^2, x2^2, x1*x2*x3");
  CHECK(colon(I, mono("x1*x3", 3)) == parseIdealText("x1, x2", 3));
  CHECK(colon(I, constantOne(3)) == I);
  CHECK_THROWS_AS(colon(I, mono("x1", 2)), PreconditionError);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto raw = randomMonomials(rng, 3, 3, 3);
    MonomialIdeal J(VariableContext(3), raw);
    Monomial c(3), u(3);
    for (int j = 0; j < 3; ++j) {
      c[j] = Exponent(static_cast<long long>(rng() % 3));
      u[j] = Exponent(static_cast<long long>(rng() % 4));
    }
    CAPTURE(trial);
    CHECK(colon(J, c).contains(u) == J.contains(u + c));
  }
}

TEST_CASE("radical takes squarefree supports and is idempotent") {
  MonomialIdeal I = parseIdealText("x1^2, x2^2, x1*x2*x3");
  MonomialIdeal r = radical(I);
  CHECK(r == parseIdealText("x1, x2", 3));
  CHECK(radical(r) == r);
  CHECK(isSubsetOf(I, r));
  CHECK(radical(parseIdealText("0", 2)).isZero());
}

TEST_CASE("products respect containment") {
  MonomialIdeal I = parseIdealText("x1^2, x2^2");
  MonomialIdeal J = parseIdealText("x1*x2", 2);
  CHECK(multiply(I, J) == multiply(J, I));
  CHECK(isSubsetOf(multiply(I, J), I));
  CHECK(isSubsetOf(multiply(I, J), J));
  CHECK(isSubsetOf(power(I, 2), I));
  CHECK_FALSE(isSubsetOf(I, J));
  CHECK(isSubsetOf(J, radical(I)));
  CHECK_THROWS_AS(multiply(I, parseIdealText("x1", 3)), PreconditionError);
}

TEST_CASE("edge ideals index vertices from one") {
  MonomialIdeal path = edgeIdeal(3, {{1, 2}, {2, 3}});
  CHECK(path == parseIdealText("x1*x2, x2*x3", 3));
  CHECK_THROWS_AS(edgeIdeal(3, {{0, 1}}), PreconditionError);
  CHECK_THROWS_AS(edgeIdeal(3, {{1, 4}}), PreconditionError);
  CHECK_THROWS_AS(edgeIdeal(3, {{2, 2}}), PreconditionError);
}

TEST_CASE("the exponent bound is the componentwise generator maximum") {
  MonomialIdeal I = parseIdealText("x1^3*x2, x2^4, x1*x3^2");
  Monomial b = I.exponentBound();
  CHECK(b[0] == 3);
  CHECK(b[1] == 4);
  CHECK(b[2] == 2);
}
