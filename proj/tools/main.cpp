// sdepthlab command-line workbench: monomial-ideal closure, Stanley depth,
// decomposition transfer, associated primes, and the golden corpus runner.
//
// Exit codes: 0 success, 1 mathematical rejection, 2 parse error,
// 3 corpus mismatch.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sdepthlab/sdepthlab.hpp"

namespace {

using namespace sdepthlab;

struct GlobalFlags {
  bool pretty = false;
  int jobs = 1;
};

void emit(const Json& report, const GlobalFlags& flags, const std::string& prettyText) {
  if (flags.pretty) {
    std::cout << prettyText;
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

/// Inline text grammar or @file.json.
MonomialIdeal loadIdeal(const std::string& arg, int n) {
  if (!arg.empty() && arg.front() == '@') {
    MonomialIdeal ideal = idealFromJson(corpus_detail::loadJsonFile(arg.substr(1)));
    if (n > 0 && ideal.vars() != n) {
      throw ParseError("ideal file has n=" + std::to_string(ideal.vars()) +
                       " but --n requested " + std::to_string(n));
    }
    return ideal;
  }
  return parseIdealText(arg, n);
}

/// Loads two ideals into a common ring: text inputs are widened to the
/// larger inferred variable count, file inputs must already agree.
std::pair<MonomialIdeal, MonomialIdeal> loadIdealPair(const std::string& a, const std::string& b,
                                                      int n) {
  MonomialIdeal A = loadIdeal(a, n);
  MonomialIdeal B = loadIdeal(b, n);
  if (A.vars() != B.vars()) {
    int m = std::max(A.vars(), B.vars());
    if (A.vars() < m && a.front() != '@') A = loadIdeal(a, m);
    if (B.vars() < m && b.front() != '@') B = loadIdeal(b, m);
  }
  requireSameContext(A, B);
  return {std::move(A), std::move(B)};
}

std::vector<StanleySpace> loadSpaces(const std::string& path, int n) {
  return spacesFromJson(corpus_detail::loadJsonFile(path), n);
}

Mode parseMode(const std::string& mode) {
  if (mode == "ideal" || mode == "quotient") return Mode::quotient;
  if (mode == "residue") return Mode::residue;
  throw ParseError("unknown mode " + mode);
}

std::string idealLine(const char* label, const MonomialIdeal& ideal) {
  return std::string(label) + ": " + (ideal.isZero() ? "0" : printIdealText(ideal)) + "\n";
}

int runClosure(const std::string& idealArg, int n, bool certificates,
               const GlobalFlags& flags) {
  MonomialIdeal I = loadIdeal(idealArg, n);
  MonomialIdeal C = integralClosure(I);
  Json report{{"input", idealToJson(I)},
              {"closure", idealToJson(C)},
              {"closure_text", printIdealText(C)},
              {"closed", I == C}};
  std::string pretty = idealLine("closure", C) + (I == C ? "already closed\n" : "");
  if (certificates) {
    report["certificates"] = closureCertificatesToJson(closureCertificates(I));
    report["uniform_exponent"] = uniformExponent(I);
  }
  emit(report, flags, pretty);
  return 0;
}

int runPower(const std::string& idealArg, int n, int k, const GlobalFlags& flags) {
  MonomialIdeal I = loadIdeal(idealArg, n);
  MonomialIdeal P = power(I, k);
  Json report{{"input", idealToJson(I)},
              {"k", k},
              {"power", idealToJson(P)},
              {"power_text", printIdealText(P)},
              {"generators", numGenerators(P)}};
  emit(report, flags, idealLine("power", P));
  return 0;
}

int runSdepth(const std::vector<std::string>& idealArgs, int n, const std::string& mode,
              const SearchLimits& limits, const GlobalFlags& flags) {
  Mode m = parseMode(mode);
  if (mode == "quotient" && idealArgs.size() != 2) {
    throw ParseError("quotient mode takes a numerator and a denominator ideal");
  }
  if (mode != "quotient" && idealArgs.size() != 1) {
    throw ParseError("expected exactly one ideal");
  }
  MonomialIdeal I = loadIdeal(idealArgs[0], n);
  MonomialIdeal J = zeroIdeal(I.context());
  if (idealArgs.size() == 2) {
    auto [a, b] = loadIdealPair(idealArgs[0], idealArgs[1], n);
    I = std::move(a);
    J = std::move(b);
  }
  CharacteristicPoset poset(I, J, m);
  SdepthResult r = sdepthExact(poset, limits);
  StanleyDecomposition D = partitionToDecomposition(r.witness, poset);
  Json report = sdepthToJson(r);
  report["mode"] = mode;
  report["n"] = I.vars();
  report["decomposition"] = spacesToJson(D.spaces);
  std::string pretty = "sdepth " + std::string(r.exact ? "= " : ">= ") +
                       std::to_string(r.value) + "\nsteps: " + std::to_string(r.steps) + "\n";
  emit(report, flags, pretty);
  return 0;
}

int runTransfer(const std::vector<std::string>& idealArgs, int n, const std::string& decompPath,
                int k, int s, bool fromPower, const std::string& mode, int margin,
                const GlobalFlags& flags) {
  Mode m = parseMode(mode);
  MonomialIdeal I = loadIdeal(idealArgs[0], n);
  MonomialIdeal J = zeroIdeal(I.context());
  if (idealArgs.size() == 2) {
    auto [a, b] = loadIdealPair(idealArgs[0], idealArgs[1], n);
    I = std::move(a);
    J = std::move(b);
  }
  std::vector<StanleySpace> spaces = loadSpaces(decompPath, I.vars());
  TransferReport r = fromPower ? transferFromPower(spaces, I, J, s, k, m, margin)
                               : transfer(spaces, I, J, k, m, margin);
  std::string pretty;
  int kept = 0;
  for (const SpaceOutcome& o : r.outcomes) kept += o.kept ? 1 : 0;
  pretty += "kept " + std::to_string(kept) + " of " + std::to_string(r.outcomes.size()) +
            " spaces\n";
  for (const SpaceOutcome& o : r.outcomes) {
    pretty += std::string(o.kept ? "  kept    " : "  dropped ") +
              printMonomialText(o.space.t, I.context()) + "\n";
  }
  pretty += "input sdepth:  " + std::to_string(r.inputSdepth) + "\n";
  pretty += "output sdepth: " + std::to_string(r.outputSdepth) + "\n";
  emit(transferToJson(r), flags, pretty);
  return 0;
}

int runAss(const std::string& idealArg, int n, int horizon, const GlobalFlags& flags) {
  MonomialIdeal I = loadIdeal(idealArg, n);
  Json report{{"primes", primesToJson(assPrimes(I))}};
  if (horizon > 0) report["chain"] = assChainToJson(assChain(I, horizon));
  std::string pretty;
  for (const MonomialPrime& p : assPrimes(I)) {
    pretty += "(";
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
      pretty += (i ? "," : "") + I.context().name(p.vars()[i]);
    }
    pretty += ")\n";
  }
  emit(report, flags, pretty);
  return 0;
}

int runRatliff(const std::string& idealArg, int n, int horizon, const GlobalFlags& flags) {
  MonomialIdeal I = loadIdeal(idealArg, n);
  RatliffResult r = ratliffCheck(I, horizon);
  Json report = ratliffToJson(r);
  emit(report, flags, "verdict: " + report["verdict"].get<std::string>() + "\n");
  return 0;
}

int runSpread(const std::string& idealArg, int n, int horizon, bool forceHilbert,
              const GlobalFlags& flags) {
  MonomialIdeal I = loadIdeal(idealArg, n);
  SpreadCertificate cert = forceHilbert ? analyticSpreadHilbert(I, horizon)
                                        : analyticSpread(I, horizon);
  std::string pretty = cert.method == SpreadMethod::undetermined
                           ? "spread: undetermined within horizon\n"
                           : "spread = " + std::to_string(cert.value) + " (" +
                                 spreadMethodName(cert.method) + ")\n";
  emit(spreadToJson(cert), flags, pretty);
  return 0;
}

int runHeight(const std::string& idealArg, int n, const GlobalFlags& flags) {
  MonomialIdeal I = loadIdeal(idealArg, n);
  int h = height(I);
  emit(Json{{"height", h}}, flags, "height = " + std::to_string(h) + "\n");
  return 0;
}

int runReduction(const std::string& candidateArg, const std::string& idealArg, int n, int tMax,
                 const GlobalFlags& flags) {
  auto [J, I] = loadIdealPair(candidateArg, idealArg, n);
  ReductionResult r = isReduction(J, I, tMax);
  Json report{{"reduces", r.reduces}};
  if (r.reduces) report["t"] = r.t;
  std::string pretty = r.reduces ? "reduction with t = " + std::to_string(r.t) + "\n"
                                 : "not a reduction within t <= " + std::to_string(tMax) + "\n";
  emit(report, flags, pretty);
  return 0;
}

int runNormal(const std::string& idealArg, int n, int horizon, const GlobalFlags& flags) {
  MonomialIdeal I = loadIdeal(idealArg, n);
  NormalityReport r = isNormalUpTo(I, horizon);
  Json report{{"normal", r.normal}, {"horizon", horizon}};
  if (!r.normal) report["first_failing"] = r.firstFailing;
  std::string pretty = r.normal
                           ? "normal up to power " + std::to_string(horizon) + "\n"
                           : "power " + std::to_string(r.firstFailing) + " is not closed\n";
  emit(report, flags, pretty);
  return 0;
}

int runConjectureScan(int count, std::uint64_t seed, int n, int maxExp, int minGens, int maxGens,
                      int horizon, const SearchLimits& limits, const GlobalFlags& flags) {
  Json cases = Json::array();
  int checked = 0;
  int skipped = 0;
  int violations = 0;
  std::string pretty;
  for (int i = 0; i < count; ++i) {
    RandomIdealSpec spec;
    spec.seed = seed + static_cast<std::uint64_t>(i);
    spec.n = n;
    spec.maxExponent = maxExp;
    spec.minGens = minGens;
    spec.maxGens = maxGens;
    spec.integrallyCloseAfter = true;
    MonomialIdeal I = randomIdeal(spec);
    Json entry{{"seed", spec.seed}, {"ideal", printIdealText(I)}};
    try {
      ConjectureReport r = conjectureCheck(I, horizon, limits);
      entry["ell"] = r.ell;
      entry["sdepth_residue"] = r.sdepthResidue;
      entry["sdepth_ideal"] = r.sdepthIdeal;
      entry["holds"] = !r.counterexample;
      ++checked;
      if (r.counterexample) {
        ++violations;
        pretty += "violation at seed " + std::to_string(spec.seed) + ": " +
                  printIdealText(I) + "\n";
      }
    } catch (const std::exception& e) {
      entry["skipped"] = e.what();
      ++skipped;
    }
    cases.push_back(std::move(entry));
  }
  pretty += "checked " + std::to_string(checked) + ", skipped " + std::to_string(skipped) +
            ", violations " + std::to_string(violations) + "\n";
  emit(Json{{"count", count},
            {"checked", checked},
            {"skipped", skipped},
            {"violations", violations},
            {"cases", std::move(cases)}},
       flags, pretty);
  return 0;
}

int runVerifyPaper(const std::string& corpusPath, const GlobalFlags& flags) {
  CorpusResult result = runCorpus(corpusPath);
  Json cases = Json::array();
  std::string pretty;
  for (const CorpusOutcome& o : result.outcomes) {
    Json entry{{"id", o.id}, {"tag", o.tag}, {"passed", o.passed}};
    if (!o.passed) entry["message"] = o.message;
    cases.push_back(std::move(entry));
    pretty += (o.passed ? "[ ok ] " : "[FAIL] ") + o.id +
              (o.passed ? "" : ": " + o.message) + "\n";
  }
  pretty += std::to_string(result.total - result.failures) + "/" +
            std::to_string(result.total) + " cases passed\n";
  emit(Json{{"total", result.total},
            {"passed", result.total - result.failures},
            {"failed", result.failures},
            {"cases", std::move(cases)}},
       flags, pretty);
  return result.failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for integral closures and Stanley depth of monomial ideals"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_flag("--pretty", flags.pretty, "Human-readable output instead of JSON");
  app.add_option("--jobs", flags.jobs, "Worker cap (the implementation is sequential)")
      ->check(CLI::PositiveNumber);

  int n = 0;
  app.add_option("--n", n, "Ambient variable count when the text grammar underdetermines it")
      ->check(CLI::NonNegativeNumber);

  SearchLimits limits;
  std::string mode = "ideal";
  std::string decompPath;
  std::string corpusPath = "data/corpus.json";
  std::vector<std::string> ideals;
  int k = 1;
  int s = 1;
  bool haveS = false;
  int horizon = 0;
  int margin = 1;
  int tMax = 10;
  bool certificates = false;
  bool forceHilbert = false;
  int count = 50;
  std::uint64_t seed = 1;
  int maxExp = 3;
  int minGens = 2;
  int maxGens = 4;

  CLI::App* cmdClosure = app.add_subcommand("closure", "Integral closure of a monomial ideal");
  cmdClosure->add_option("ideal", ideals, "Ideal (text grammar or @file.json)")->required();
  cmdClosure->add_flag("--certificates", certificates,
                       "Include closure exponents and the uniform exponent");

  CLI::App* cmdPower = app.add_subcommand("power", "Power of a monomial ideal");
  cmdPower->add_option("ideal", ideals)->required();
  cmdPower->add_option("--k", k, "Exponent")->required()->check(CLI::PositiveNumber);

  CLI::App* cmdSdepth = app.add_subcommand("sdepth", "Exact Stanley depth");
  cmdSdepth->add_option("ideal", ideals, "Numerator, plus denominator in quotient mode")
      ->required();
  cmdSdepth->add_option("--mode", mode, "ideal, residue, or quotient");
  cmdSdepth->add_option("--max-steps", limits.maxSteps, "Search step cap (0 = unbounded)");
  cmdSdepth->add_option("--timeout", limits.timeoutSeconds, "Search timeout in seconds");

  CLI::App* cmdTransfer =
      app.add_subcommand("transfer", "Map a decomposition of a power onto the closure");
  cmdTransfer->add_option("ideal", ideals)->required();
  cmdTransfer->add_option("--decomposition", decompPath, "Decomposition JSON file")->required();
  cmdTransfer->add_option("--k", k, "Power exponent")->required()->check(CLI::PositiveNumber);
  cmdTransfer->add_option("--s", s, "Treat the input as a decomposition of I^(s*k)")
      ->check(CLI::PositiveNumber);
  cmdTransfer->add_option("--mode", mode, "ideal, residue, or quotient");
  cmdTransfer->add_option("--margin", margin, "Verification box margin")
      ->check(CLI::NonNegativeNumber);

  CLI::App* cmdAss = app.add_subcommand("ass", "Associated primes, optionally along powers");
  cmdAss->add_option("ideal", ideals)->required();
  cmdAss->add_option("--horizon", horizon, "Also report Ass chains up to this power");

  CLI::App* cmdRatliff = app.add_subcommand("ratliff", "Closure Ass-chain containment check");
  cmdRatliff->add_option("ideal", ideals)->required();
  cmdRatliff->add_option("--horizon", horizon, "Chain horizon");

  CLI::App* cmdSpread = app.add_subcommand("spread", "Analytic spread certificate");
  cmdSpread->add_option("ideal", ideals)->required();
  cmdSpread->add_option("--horizon", horizon, "Power horizon for the Hilbert route");
  cmdSpread->add_flag("--hilbert", forceHilbert, "Skip the equigenerated rank shortcut");

  CLI::App* cmdHeight = app.add_subcommand("height", "Height via minimum vertex cover");
  cmdHeight->add_option("ideal", ideals)->required();

  CLI::App* cmdReduction = app.add_subcommand("reduction", "Reduction test J.I^t = I^(t+1)");
  cmdReduction->add_option("ideal", ideals, "Candidate J, then I")->required()->expected(2);
  cmdReduction->add_option("--t-max", tMax, "Largest reduction index tried")
      ->check(CLI::PositiveNumber);

  CLI::App* cmdNormal = app.add_subcommand("normal", "Closedness of the first K powers");
  cmdNormal->add_option("ideal", ideals)->required();
  cmdNormal->add_option("--horizon", horizon, "Largest power checked");

  CLI::App* cmdScan =
      app.add_subcommand("conjecture-scan", "Random search for spread-bound counterexamples");
  cmdScan->add_option("--count", count, "Number of random ideals");
  cmdScan->add_option("--seed", seed, "Base seed; case i uses seed + i");
  cmdScan->add_option("--max-exp", maxExp, "Largest coordinate exponent");
  cmdScan->add_option("--min-gens", minGens, "Fewest generators drawn");
  cmdScan->add_option("--max-gens", maxGens, "Most generators drawn");
  cmdScan->add_option("--horizon", horizon, "Spread horizon");
  cmdScan->add_option("--max-steps", limits.maxSteps, "Sdepth step cap per ideal");
  cmdScan->add_option("--timeout", limits.timeoutSeconds, "Sdepth timeout per ideal");

  CLI::App* cmdVerify = app.add_subcommand("verify-paper", "Run the golden corpus");
  cmdVerify->add_option("--corpus", corpusPath, "Corpus JSON file");

  // Global flags remain usable after the subcommand name.
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(cmdClosure)) return runClosure(ideals[0], n, certificates, flags);
    if (app.got_subcommand(cmdPower)) return runPower(ideals[0], n, k, flags);
    if (app.got_subcommand(cmdSdepth)) return runSdepth(ideals, n, mode, limits, flags);
    if (app.got_subcommand(cmdTransfer)) {
      haveS = cmdTransfer->count("--s") > 0;
      if (ideals.size() > 2) throw ParseError("transfer takes at most two ideals");
      return runTransfer(ideals, n, decompPath, k, s, haveS, mode, margin, flags);
    }
    if (app.got_subcommand(cmdAss)) {
      return runAss(ideals[0], n, cmdAss->count("--horizon") ? horizon : 0, flags);
    }
    if (app.got_subcommand(cmdRatliff)) {
      return runRatliff(ideals[0], n, cmdRatliff->count("--horizon") ? horizon : 4, flags);
    }
    if (app.got_subcommand(cmdSpread)) {
      return runSpread(ideals[0], n, cmdSpread->count("--horizon") ? horizon : 8, forceHilbert,
                       flags);
    }
    if (app.got_subcommand(cmdHeight)) return runHeight(ideals[0], n, flags);
    if (app.got_subcommand(cmdReduction)) return runReduction(ideals[0], ideals[1], n, tMax, flags);
    if (app.got_subcommand(cmdNormal)) {
      return runNormal(ideals[0], n, cmdNormal->count("--horizon") ? horizon : 5, flags);
    }
    if (app.got_subcommand(cmdScan)) {
      return runConjectureScan(count, seed, n > 0 ? n : 3, maxExp, minGens, maxGens,
                               cmdScan->count("--horizon") ? horizon : 8, limits, flags);
    }
    if (app.got_subcommand(cmdVerify)) return runVerifyPaper(corpusPath, flags);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
