#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sdepthlab/associated.hpp"
#include "sdepthlab/invariants.hpp"
#include "sdepthlab/json_format.hpp"
#include "sdepthlab/newton.hpp"
#include "sdepthlab/poset.hpp"
#include "sdepthlab/sdepth.hpp"
#include "sdepthlab/text_format.hpp"
#include "sdepthlab/transfer.hpp"

namespace sdepthlab {

struct CorpusOutcome {
  std::string id;
  std::string tag;
  bool passed = false;
  std::string message;
};

struct CorpusResult {
  std::vector<CorpusOutcome> outcomes;
  int total = 0;
  int failures = 0;
};

namespace corpus_detail {

inline Json loadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("bad JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

inline MonomialIdeal caseIdeal(const Json& c, const char* field = "ideal") {
  if (!c.contains(field)) throw ParseError(std::string("case needs field ") + field);
  int n = c.value("n", 0);
  return parseIdealText(c[field].get<std::string>(), n);
}

inline Mode caseMode(const Json& c) {
  std::string mode = c.value("mode", "ideal");
  if (mode == "ideal" || mode == "quotient") return Mode::quotient;
  if (mode == "residue") return Mode::residue;
  throw ParseError("unknown mode " + mode);
}

inline MonomialIdeal caseDenominator(const Json& c, const MonomialIdeal& I) {
  if (!c.contains("denominator")) return zeroIdeal(I.context());
  return parseIdealText(c["denominator"].get<std::string>(), I.vars());
}

inline std::vector<StanleySpace> caseSpaces(const Json& c, int n,
                                            const std::filesystem::path& baseDir) {
  if (c.contains("decomposition")) return spacesFromJson(c["decomposition"], n);
  if (c.contains("decomposition_file")) {
    return spacesFromJson(loadJsonFile(baseDir / c["decomposition_file"].get<std::string>()), n);
  }
  throw ParseError("case needs a decomposition or decomposition_file field");
}

inline std::optional<std::string> expectIdeal(const MonomialIdeal& got, const Json& expect) {
  MonomialIdeal want = parseIdealText(expect["ideal"].get<std::string>(), got.vars());
  if (got == want) return std::nullopt;
  return "expected (" + printIdealText(want) + ") but computed (" + printIdealText(got) + ")";
}

template <typename T>
std::optional<std::string> expectValue(const T& got, const Json& expect) {
  T want = expect["value"].get<T>();
  if (got == want) return std::nullopt;
  std::ostringstream os;
  os << "expected " << want << " but computed " << got;
  return os.str();
}

inline std::vector<std::pair<std::vector<long long>, std::vector<int>>> spaceKeys(
    const std::vector<StanleySpace>& spaces) {
  std::vector<std::pair<std::vector<long long>, std::vector<int>>> keys;
  for (const StanleySpace& s : spaces) {
    std::vector<long long> t;
    for (Eigen::Index j = 0; j < s.t.size(); ++j) t.push_back(toInt64(s.t[j]));
    keys.push_back({std::move(t), s.Z});
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

inline std::optional<std::string> runCase(const Json& c, const std::filesystem::path& baseDir) {
  const std::string op = c.at("op").get<std::string>();
  const Json expect = c.value("expect", Json::object());

  if (op == "closure") return expectIdeal(integralClosure(caseIdeal(c)), expect);
  if (op == "power") return expectIdeal(power(caseIdeal(c), c.at("k").get<int>()), expect);
  if (op == "minimalize") return expectIdeal(caseIdeal(c), expect);
  if (op == "radical") return expectIdeal(radical(caseIdeal(c)), expect);

  if (op == "contains") {
    MonomialIdeal I = caseIdeal(c);
    return expectValue(I.contains(parseMonomialText(c.at("u").get<std::string>(), I.vars())),
                       expect);
  }
  if (op == "colon") {
    MonomialIdeal I = caseIdeal(c);
    return expectIdeal(colon(I, parseMonomialText(c.at("c").get<std::string>(), I.vars())), expect);
  }
  if (op == "np-member") {
    MonomialIdeal I = caseIdeal(c);
    return expectValue(npMember(I, parseMonomialText(c.at("a").get<std::string>(), I.vars())),
                       expect);
  }
  if (op == "closure-exponent") {
    MonomialIdeal I = caseIdeal(c);
    return expectValue(closureExponent(I, parseMonomialText(c.at("u").get<std::string>(), I.vars())),
                       expect);
  }
  if (op == "uniform-exponent") return expectValue(uniformExponent(caseIdeal(c)), expect);
  if (op == "closed") return expectValue(isIntegrallyClosed(caseIdeal(c)), expect);

  if (op == "normal") {
    NormalityReport r = isNormalUpTo(caseIdeal(c), c.at("K").get<int>());
    if (r.normal != expect.at("normal").get<bool>()) return "normality verdict mismatch";
    if (!r.normal && r.firstFailing != expect.at("first_failing").get<int>()) {
      return "first failing power mismatch: computed " + std::to_string(r.firstFailing);
    }
    return std::nullopt;
  }

  if (op == "poset-size") {
    MonomialIdeal I = caseIdeal(c);
    CharacteristicPoset poset(I, caseDenominator(c, I), caseMode(c));
    long long got = static_cast<long long>(poset.points().size());
    long long want = expect.at("points").get<long long>();
    if (got != want) {
      return "expected " + std::to_string(want) + " points but found " + std::to_string(got);
    }
    return std::nullopt;
  }

  if (op == "sdepth") {
    MonomialIdeal I = caseIdeal(c);
    CharacteristicPoset poset(I, caseDenominator(c, I), caseMode(c));
    SdepthResult r = sdepthExact(poset);
    if (!r.exact) return "search did not finish";
    if (expect.contains("at_least")) {
      if (r.value >= expect["at_least"].get<int>()) return std::nullopt;
      return "expected at least " + expect["at_least"].dump() + " but computed " +
             std::to_string(r.value);
    }
    return expectValue(r.value, expect);
  }

  if (op == "verify") {
    MonomialIdeal I = caseIdeal(c);
    MonomialIdeal J = caseDenominator(c, I);
    StanleyDecomposition D{caseMode(c), I, J, caseSpaces(c, I.vars(), baseDir)};
    VerificationResult v = verifyDecomposition(D, c.value("margin", 1));
    if (v.ok != expect.at("ok").get<bool>()) {
      return "verification verdict mismatch" + (v.ok ? "" : ": " + v.issue);
    }
    return std::nullopt;
  }

  if (op == "transfer" || op == "transfer-from-power") {
    MonomialIdeal I = caseIdeal(c);
    MonomialIdeal J = caseDenominator(c, I);
    std::vector<StanleySpace> spaces = caseSpaces(c, I.vars(), baseDir);
    int k = c.at("k").get<int>();
    TransferReport r = op == "transfer"
                           ? transfer(spaces, I, J, k, caseMode(c), c.value("margin", 1))
                           : transferFromPower(spaces, I, J, c.value("s", 1), k, caseMode(c),
                                               c.value("margin", 1));
    if (expect.contains("dropped")) {
      int dropped = 0;
      for (const SpaceOutcome& o : r.outcomes) dropped += o.kept ? 0 : 1;
      if (dropped != expect["dropped"].get<int>()) {
        return "expected " + expect["dropped"].dump() + " dropped spaces, saw " +
               std::to_string(dropped);
      }
    }
    if (expect.contains("output")) {
      auto got = spaceKeys(r.output.spaces);
      auto want = spaceKeys(spacesFromJson(expect["output"], I.vars()));
      if (got != want) return "output decomposition differs from the expected space set";
    }
    return std::nullopt;
  }

  if (op == "fiber-root") {
    int n = c.at("n").get<int>();
    Monomial t = parseMonomialText(c.at("t").get<std::string>(), n);
    std::vector<int> Z;
    for (const Json& v : c.at("Z")) Z.push_back(v.get<int>() - 1);
    std::sort(Z.begin(), Z.end());
    std::optional<Monomial> root = fiberRoot(t, Z, c.at("k").get<int>());
    if (expect.at("root").is_null()) {
      if (root) return "expected an empty fiber but computed a root";
      return std::nullopt;
    }
    Monomial want = parseMonomialText(expect["root"].get<std::string>(), n);
    if (!root) return "expected a root but the fiber is empty";
    if (*root != want) return "fiber root mismatch";
    return std::nullopt;
  }

  if (op == "ass") {
    std::vector<MonomialPrime> got = assPrimes(caseIdeal(c));
    Json gotJson = primesToJson(got);
    if (gotJson != expect.at("primes")) {
      return "associated primes mismatch: computed " + gotJson.dump();
    }
    return std::nullopt;
  }
  if (op == "ass-member") {
    MonomialIdeal I = caseIdeal(c);
    MonomialPrime p = primeFromJson(c.at("prime"), I.vars());
    std::vector<MonomialPrime> primes = assPrimes(I);
    bool member = std::find(primes.begin(), primes.end(), p) != primes.end();
    return expectValue(member, expect);
  }
  if (op == "ass-chain") {
    MonomialIdeal I = caseIdeal(c);
    AssChainReport r = assChain(I, c.at("K").get<int>());
    for (const Json& a : expect.at("assertions")) {
      const auto& chain = a.at("chain").get<std::string>() == "powers" ? r.powers : r.closures;
      int k = a.at("k").get<int>();
      MonomialPrime p = primeFromJson(a.at("prime"), I.vars());
      const auto& set = chain.at(static_cast<std::size_t>(k - 1));
      bool member = std::find(set.begin(), set.end(), p) != set.end();
      if (member != a.at("member").get<bool>()) {
        return "membership assertion failed at k=" + std::to_string(k);
      }
    }
    return std::nullopt;
  }
  if (op == "ratliff") {
    RatliffResult r = ratliffCheck(caseIdeal(c), c.at("K").get<int>());
    std::string got = r.verdict == RatliffVerdict::holds
                          ? "holds"
                          : r.verdict == RatliffVerdict::fails ? "fails" : "inconclusive";
    if (got != expect.at("verdict").get<std::string>()) return "verdict is " + got;
    return std::nullopt;
  }
  if (op == "localize") {
    MonomialIdeal I = caseIdeal(c);
    LocalizedIdeal loc = localize(I, primeFromJson(c.at("prime"), I.vars()));
    return expectIdeal(loc.ideal, expect);
  }
  if (op == "commutes") {
    MonomialIdeal I = caseIdeal(c);
    return expectValue(localizationCommutesWithClosure(I, primeFromJson(c.at("prime"), I.vars())),
                       expect);
  }

  if (op == "height") return expectValue(height(caseIdeal(c)), expect);
  if (op == "mu") return expectValue(static_cast<long long>(mu(caseIdeal(c))), expect);
  if (op == "reduction") {
    MonomialIdeal I = caseIdeal(c);
    MonomialIdeal J = parseIdealText(c.at("candidate").get<std::string>(), I.vars());
    ReductionResult r = isReduction(J, I, c.at("t_max").get<int>());
    if (r.reduces != expect.at("reduces").get<bool>()) return "reduction verdict mismatch";
    if (r.reduces && r.t != expect.at("t").get<int>()) {
      return "reduction index mismatch: computed " + std::to_string(r.t);
    }
    return std::nullopt;
  }
  if (op == "spread") {
    SpreadCertificate cert = analyticSpread(caseIdeal(c), c.value("K", 8));
    if (cert.method == SpreadMethod::undetermined) return "spread undetermined";
    if (expect.contains("method") &&
        spreadMethodName(cert.method) != expect["method"].get<std::string>()) {
      return "method mismatch: " + spreadMethodName(cert.method);
    }
    return expectValue(cert.value, expect);
  }
  if (op == "conjecture") {
    ConjectureReport r = conjectureCheck(caseIdeal(c), c.value("K", 8));
    bool holds = r.residueHolds && r.idealHolds;
    if (holds != expect.at("holds").get<bool>()) {
      return std::string("inequalities ") + (holds ? "hold" : "fail");
    }
    return std::nullopt;
  }

  return "unknown op " + op;
}

}  // namespace corpus_detail

/// Runs every case in a corpus file and reports per-case outcomes.
inline CorpusResult runCorpus(const std::string& path) {
  std::filesystem::path corpusPath(path);
  Json doc = corpus_detail::loadJsonFile(corpusPath);
  if (!doc.is_object() || !doc.contains("cases") || !doc["cases"].is_array()) {
    throw ParseError("corpus must be an object with a cases array");
  }
  CorpusResult result;
  for (const Json& c : doc["cases"]) {
    CorpusOutcome outcome;
    outcome.id = c.value("id", "case-" + std::to_string(result.total));
    outcome.tag = c.value("tag", "");
    try {
      std::optional<std::string> issue = corpus_detail::runCase(c, corpusPath.parent_path());
      outcome.passed = !issue.has_value();
      if (issue) outcome.message = *issue;
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.message = e.what();
    }
    ++result.total;
    if (!outcome.passed) ++result.failures;
    result.outcomes.push_back(std::move(outcome));
  }
  return result;
}

}  // namespace sdepthlab
