#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "sdepthlab/errors.hpp"
#include "sdepthlab/monomial_ideal.hpp"

namespace sdepthlab {

namespace detail {

struct Factor {
  int var = 0;  // 1-based
  Exponent exp = 1;
};

inline std::string stripSpace(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

inline std::vector<std::string> splitOn(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline Exponent parseNumber(const std::string& s, const std::string& what) {
  if (s.empty()) throw ParseError("missing " + what);
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("invalid " + what + " '" + s + "'");
    }
  }
  return Exponent(s);
}

/// One factor: x<i> or x<i>^<e>.
inline Factor parseFactor(const std::string& s) {
  if (s.empty() || s[0] != 'x') throw ParseError("expected a factor like x2 or x2^3, got '" + s + "'");
  std::size_t caret = s.find('^');
  std::string indexPart = caret == std::string::npos ? s.substr(1) : s.substr(1, caret - 1);
  Exponent idx = parseNumber(indexPart, "variable index");
  if (idx < 1 || idx > 1024) throw ParseError("variable index out of range in '" + s + "'");
  Factor f;
  f.var = static_cast<int>(idx);
  if (caret != std::string::npos) f.exp = parseNumber(s.substr(caret + 1), "exponent");
  return f;
}

}  // namespace detail

/// Parses the ideal text grammar: comma-separated terms of `*`-separated
/// `x<i>[^<e>]` factors; `0` is the zero ideal, `1` the unit ideal.
/// Whitespace is ignored. Pass n to fix the ambient variable count (it must
/// cover every index used); n = 0 infers the count from the largest index.
inline MonomialIdeal parseIdealText(const std::string& text, int n = 0) {
  const std::string s = detail::stripSpace(text);
  if (s.empty()) throw ParseError("empty ideal text");
  if (n < 0) throw ParseError("variable count must be positive");

  if (s == "0") return MonomialIdeal(VariableContext(n > 0 ? n : 1));
  if (s == "1") return unitIdeal(VariableContext(n > 0 ? n : 1));

  std::vector<std::vector<detail::Factor>> terms;
  int maxVar = 0;
  for (const std::string& term : detail::splitOn(s, ',')) {
    if (term.empty()) throw ParseError("empty term in ideal text");
    std::vector<detail::Factor> factors;
    if (term == "1") {
      terms.push_back(std::move(factors));
      continue;
    }
    for (const std::string& piece : detail::splitOn(term, '*')) {
      detail::Factor f = detail::parseFactor(piece);
      maxVar = std::max(maxVar, f.var);
      factors.push_back(std::move(f));
    }
    terms.push_back(std::move(factors));
  }
  if (n == 0) n = std::max(maxVar, 1);
  if (maxVar > n) {
    throw ParseError("variable index " + std::to_string(maxVar) + " exceeds the declared count " +
                     std::to_string(n));
  }

  VariableContext ctx(n);
  std::vector<Monomial> gens;
  for (const auto& term : terms) {
    Monomial m = Monomial::Zero(n);
    for (const detail::Factor& f : term) m[f.var - 1] += f.exp;
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(ctx, std::move(gens));
}

inline std::string printMonomialText(const Monomial& m, const VariableContext& ctx) {
  std::string out;
  for (Eigen::Index j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += ctx.name(static_cast<int>(j));
    if (m[j] != 1) out += "^" + m[j].str();
  }
  return out.empty() ? "1" : out;
}

inline std::string printIdealText(const MonomialIdeal& ideal) {
  if (ideal.isZero()) return "0";
  std::string out;
  for (const Monomial& g : ideal.gens()) {
    if (!out.empty()) out += ", ";
    out += printMonomialText(g, ideal.context());
  }
  return out;
}

/// A single monomial in the same grammar (one term; `1` is the constant).
inline Monomial parseMonomialText(const std::string& text, int n) {
  MonomialIdeal asIdeal = parseIdealText(text, n);
  if (asIdeal.gens().size() != 1) throw ParseError("expected a single monomial");
  return asIdeal.gens().front();
}

}  // namespace sdepthlab
