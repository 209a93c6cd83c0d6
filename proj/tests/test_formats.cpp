#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

using namespace sdepthlab;

TEST_CASE("ideal text grammar") {
  VariableContext ctx(3);
  CHECK(parseIdealText(" x1^2 ,\n x2 * x3 ", 3) == parseIdealText("x1^2, x2*x3", 3));
  CHECK(printMonomialText(parseMonomialText("x1*x1*x1^2", 3), ctx) == "x1^4");
  CHECK(parseIdealText("0", 3) == zeroIdeal(ctx));
  CHECK(parseIdealText("1", 3) == unitIdeal(ctx));
  CHECK(parseIdealText("0").vars() == 1);
  CHECK(parseIdealText("x2*x4").vars() == 4);

  CHECK_THROWS_AS(parseIdealText("x3", 2), ParseError);
  CHECK_THROWS_AS(parseIdealText("y1", 3), ParseError);
  CHECK_THROWS_AS(parseIdealText("x0", 3), ParseError);
  CHECK_THROWS_AS(parseIdealText("x1^", 3), ParseError);
  CHECK_THROWS_AS(parseIdealText("x1^-2", 3), ParseError);
  CHECK_THROWS_AS(parseIdealText("", 3), ParseError);
  CHECK_THROWS_AS(parseIdealText("x1,,x2", 3), ParseError);
  CHECK_THROWS_AS(parseIdealText("x1 x2", 3), ParseError);
  CHECK_THROWS_AS(parseIdealText("x1025", 0), ParseError);
  CHECK_THROWS_AS(parseMonomialText("x1, x2", 3), ParseError);
  CHECK_THROWS_AS(parseMonomialText("0", 3), ParseError);
}

TEST_CASE("printing and parsing round-trip") {
  VariableContext ctx(3);
  CHECK(printIdealText(zeroIdeal(ctx)) == "0");
  CHECK(printIdealText(unitIdeal(ctx)) == "1");
  CHECK(printMonomialText(constantOne(3), ctx) == "1");

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int gens = 1 + static_cast<int>(rng() % 4);
    std::vector<Monomial> raw;
    for (int i = 0; i < gens; ++i) {
      Monomial m = Monomial::Zero(3);
      for (int j = 0; j < 3; ++j) m[j] = Exponent(static_cast<long long>(rng() % 4));
      raw.push_back(std::move(m));
    }
    MonomialIdeal I(ctx, std::move(raw));
    CAPTURE(trial);
    CHECK(parseIdealText(printIdealText(I), 3) == I);
  }

  Monomial big = parseMonomialText("x1^123456789012345678901234567890", 2);
  CHECK(big[0] == Exponent("123456789012345678901234567890"));
  CHECK(parseMonomialText(printMonomialText(big, VariableContext(2)), 2) == big);
  CHECK_THROWS_AS(monomialToJson(big), PreconditionError);

  // Parsing always uses x-indices; custom names only affect printing.
  VariableContext named(2, {"a", "b"});
  CHECK(printMonomialText(parseMonomialText("x1*x2^2", 2), named) == "a*b^2");
}

TEST_CASE("json round-trips") {
  MonomialIdeal ex = parseIdealText("x1^2, x2^2, x1*x2*x3");
  nlohmann::json j = idealToJson(ex);
  CHECK(j["n"] == 3);
  CHECK(j["gens"].size() == 3);
  CHECK(idealFromJson(j) == ex);

  Monomial m = parseMonomialText("x1*x3^4", 3);
  CHECK(monomialFromJson(monomialToJson(m), 3) == m);

  std::vector<StanleySpace> spaces;
  StanleySpace s;
  s.t = parseMonomialText("x1^2*x2^2", 3);
  s.Z = {0, 1};
  spaces.push_back(s);
  nlohmann::json js = spacesToJson(spaces);
  REQUIRE(js.contains("spaces"));
  CHECK(js["spaces"][0]["Z"] == nlohmann::json::array({1, 2}));
  auto back = spacesFromJson(js, 3);
  REQUIRE(back.size() == 1);
  CHECK(back[0] == spaces[0]);

  nlohmann::json unsorted = js;
  unsorted["spaces"][0]["Z"] = {2, 1, 2};
  CHECK(spacesFromJson(unsorted, 3)[0].Z == std::vector<int>{0, 1});

  MonomialPrime P({0, 2});
  CHECK(primeFromJson(primeToJson(P), 3) == P);
}

TEST_CASE("json validation errors") {
  CHECK_THROWS_AS(idealFromJson(nlohmann::json::array()), ParseError);
  CHECK_THROWS_AS(idealFromJson({{"n", 0}, {"gens", nlohmann::json::array()}}), ParseError);
  CHECK_THROWS_AS(monomialFromJson(nlohmann::json::array({1, 2}), 3), ParseError);
  CHECK_THROWS_AS(monomialFromJson(nlohmann::json::array({1, -2, 0}), 3), ParseError);
  CHECK_THROWS_AS(monomialFromJson(nlohmann::json::array({1, "x", 0}), 3), ParseError);

  nlohmann::json badSpace{{"spaces", nlohmann::json::array()}};
  badSpace["spaces"].push_back({{"t", {1, 0}}, {"Z", {3}}});
  CHECK_THROWS_AS(spacesFromJson(badSpace, 2), ParseError);
  CHECK_THROWS_AS(spacesFromJson(nlohmann::json::array(), 2), ParseError);
  CHECK_THROWS_AS(primeFromJson(nlohmann::json::array({0}), 2), ParseError);
}

TEST_CASE("report serializers expose the advertised keys") {
  MonomialIdeal ex = parseIdealText("x1^2, x2^2, x1*x2*x3");
  SdepthResult r = sdepthOfResidue(ex);
  nlohmann::json sj = sdepthToJson(r);
  CHECK(sj["value"] == 0);
  CHECK(sj["exact"] == true);

  auto D = partitionToDecomposition(r.witness, residuePoset(ex));
  nlohmann::json vj = verificationToJson(verifyDecomposition(D));
  CHECK(vj["ok"] == true);

  nlohmann::json aj = assChainToJson(assChain(ex, 2));
  CHECK(aj["K"] == 2);
  CHECK(aj["powers"].size() == 2);

  nlohmann::json rj = ratliffToJson(ratliffCheck(ex, 2));
  CHECK(rj.contains("verdict"));

  nlohmann::json pj = spreadToJson(analyticSpread(ex));
  CHECK(pj["value"] == 2);
  CHECK(pj["method"] == "hilbert-differences");
}
