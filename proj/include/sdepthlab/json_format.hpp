#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "sdepthlab/associated.hpp"
#include "sdepthlab/errors.hpp"
#include "sdepthlab/invariants.hpp"
#include "sdepthlab/monomial_ideal.hpp"
#include "sdepthlab/poset.hpp"
#include "sdepthlab/sdepth.hpp"
#include "sdepthlab/text_format.hpp"
#include "sdepthlab/transfer.hpp"

namespace sdepthlab {

using Json = nlohmann::json;

inline Json monomialToJson(const Monomial& m) {
  Json arr = Json::array();
  for (Eigen::Index j = 0; j < m.size(); ++j) arr.push_back(toInt64(m[j]));
  return arr;
}

inline Monomial monomialFromJson(const Json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw ParseError("expected an exponent array of length " + std::to_string(n));
  }
  Monomial m(n);
  for (int i = 0; i < n; ++i) {
    if (!j[static_cast<std::size_t>(i)].is_number_integer()) {
      throw ParseError("exponents must be integers");
    }
    long long e = j[static_cast<std::size_t>(i)].get<long long>();
    if (e < 0) throw ParseError("exponents must be non-negative");
    m[i] = Exponent(e);
  }
  return m;
}

/// Canonical ideal form: {"n": 3, "gens": [[2,2,0], ...]}.
inline Json idealToJson(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const Monomial& g : ideal.gens()) gens.push_back(monomialToJson(g));
  return Json{{"n", ideal.vars()}, {"gens", std::move(gens)}};
}

inline MonomialIdeal idealFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("gens")) {
    throw ParseError("expected an object with fields n and gens");
  }
  if (!j["n"].is_number_integer()) throw ParseError("n must be an integer");
  int n = j["n"].get<int>();
  if (n < 1) throw ParseError("n must be positive");
  if (!j["gens"].is_array()) throw ParseError("gens must be an array");
  std::vector<Monomial> gens;
  for (const Json& g : j["gens"]) gens.push_back(monomialFromJson(g, n));
  return MonomialIdeal(VariableContext(n), std::move(gens));
}

/// Decomposition form: {"spaces": [{"t": [4,4,0], "Z": [1,2]}, ...]} with
/// 1-based variable indices in Z.
inline Json spacesToJson(const std::vector<StanleySpace>& spaces) {
  Json arr = Json::array();
  for (const StanleySpace& s : spaces) {
    Json z = Json::array();
    for (int v : s.Z) z.push_back(v + 1);
    arr.push_back(Json{{"t", monomialToJson(s.t)}, {"Z", std::move(z)}});
  }
  return Json{{"spaces", std::move(arr)}};
}

inline std::vector<StanleySpace> spacesFromJson(const Json& j, int n) {
  if (!j.is_object() || !j.contains("spaces") || !j["spaces"].is_array()) {
    throw ParseError("expected an object with a spaces array");
  }
  std::vector<StanleySpace> spaces;
  for (const Json& sj : j["spaces"]) {
    if (!sj.is_object() || !sj.contains("t") || !sj.contains("Z")) {
      throw ParseError("each space needs fields t and Z");
    }
    StanleySpace s;
    s.t = monomialFromJson(sj["t"], n);
    if (!sj["Z"].is_array()) throw ParseError("Z must be an array");
    for (const Json& v : sj["Z"]) {
      if (!v.is_number_integer()) throw ParseError("Z entries must be integers");
      int idx = v.get<int>();
      if (idx < 1 || idx > n) throw ParseError("Z index out of range");
      s.Z.push_back(idx - 1);
    }
    std::sort(s.Z.begin(), s.Z.end());
    s.Z.erase(std::unique(s.Z.begin(), s.Z.end()), s.Z.end());
    spaces.push_back(std::move(s));
  }
  return spaces;
}

inline Json intervalPartitionToJson(const IntervalPartition& p) {
  Json arr = Json::array();
  for (const Interval& iv : p.intervals) {
    arr.push_back(Json{{"lower", monomialToJson(iv.lower)}, {"upper", monomialToJson(iv.upper)}});
  }
  return Json{{"intervals", std::move(arr)}};
}

inline Json sdepthToJson(const SdepthResult& r) {
  return Json{{"value", r.value},
              {"exact", r.exact},
              {"steps", r.steps},
              {"witness", intervalPartitionToJson(r.witness)}};
}

inline Json verificationToJson(const VerificationResult& v) {
  Json j{{"ok", v.ok}};
  if (!v.ok) {
    j["issue"] = v.issue;
    j["where"] = monomialToJson(v.where);
    Json idx = Json::array();
    for (std::size_t i : v.spaceIndices) idx.push_back(i);
    j["spaces"] = std::move(idx);
  }
  return j;
}

inline Json transferToJson(const TransferReport& r) {
  Json spaces = Json::array();
  for (const SpaceOutcome& o : r.outcomes) {
    Json entry{{"t", monomialToJson(o.space.t)}, {"kept", o.kept}};
    Json z = Json::array();
    for (int v : o.space.Z) z.push_back(v + 1);
    entry["Z"] = std::move(z);
    if (o.kept) entry["root"] = monomialToJson(o.root);
    spaces.push_back(std::move(entry));
  }
  return Json{{"k", r.k},
              {"s", r.s},
              {"input_sdepth", r.inputSdepth},
              {"output_sdepth", r.outputSdepth},
              {"output", spacesToJson(r.output.spaces)},
              {"spaces", std::move(spaces)}};
}

inline Json primeToJson(const MonomialPrime& p) {
  Json arr = Json::array();
  for (int v : p.vars()) arr.push_back(v + 1);
  return arr;
}

inline MonomialPrime primeFromJson(const Json& j, int n) {
  if (!j.is_array()) throw ParseError("expected a prime as an array of 1-based indices");
  std::vector<int> vars;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw ParseError("prime entries must be integers");
    int idx = v.get<int>();
    if (idx < 1 || idx > n) throw ParseError("prime index out of range");
    vars.push_back(idx - 1);
  }
  return MonomialPrime(std::move(vars));
}

inline Json primesToJson(const std::vector<MonomialPrime>& primes) {
  Json arr = Json::array();
  for (const MonomialPrime& p : primes) arr.push_back(primeToJson(p));
  return arr;
}

inline Json assChainToJson(const AssChainReport& r) {
  Json powers = Json::array();
  for (const auto& s : r.powers) powers.push_back(primesToJson(s));
  Json closures = Json::array();
  for (const auto& s : r.closures) closures.push_back(primesToJson(s));
  Json stable;
  stable["powers"] = r.powersStabilized ? Json(r.stablePowersAt) : Json(nullptr);
  stable["closures"] = r.closuresStabilized ? Json(r.stableClosuresAt) : Json(nullptr);
  return Json{{"K", r.K},
              {"powers", std::move(powers)},
              {"closures", std::move(closures)},
              {"stable_at", std::move(stable)},
              {"closures_ascending", r.closuresAscending}};
}

inline Json ratliffToJson(const RatliffResult& r) {
  Json j = assChainToJson(r.chain);
  switch (r.verdict) {
    case RatliffVerdict::holds:
      j["ratliff"] = true;
      j["verdict"] = "holds";
      break;
    case RatliffVerdict::fails:
      j["ratliff"] = false;
      j["verdict"] = "fails";
      break;
    default:
      j["ratliff"] = nullptr;
      j["verdict"] = "inconclusive";
  }
  return j;
}

inline Json spreadToJson(const SpreadCertificate& c) {
  Json j{{"method", spreadMethodName(c.method)}, {"horizon", c.horizon}};
  if (c.method != SpreadMethod::undetermined) j["value"] = c.value;
  if (!c.muSequence.empty()) j["mu"] = c.muSequence;
  if (c.method == SpreadMethod::hilbertDifferences) {
    j["degree"] = c.degree;
    j["window_start"] = c.windowStart;
  }
  return j;
}

inline Json conjectureToJson(const ConjectureReport& r) {
  return Json{{"n", r.n},
              {"ell", r.ell},
              {"sdepth_residue", r.sdepthResidue},
              {"sdepth_ideal", r.sdepthIdeal},
              {"residue_holds", r.residueHolds},
              {"ideal_holds", r.idealHolds},
              {"counterexample", r.counterexample},
              {"spread", spreadToJson(r.spread)}};
}

inline Json closureCertificatesToJson(const std::vector<ClosureCertificate>& certs) {
  Json arr = Json::array();
  for (const ClosureCertificate& c : certs) {
    arr.push_back(Json{{"u", monomialToJson(c.u)}, {"k", c.k}});
  }
  return arr;
}

}  // namespace sdepthlab
