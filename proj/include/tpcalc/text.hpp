#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tpcalc/rational.hpp"

namespace tpcalc::text {

/// One signed product `coef * name^e * ...` of a polynomial written in the
/// textual grammar shared by Chow classes and symbolic expressions.
struct Term {
  Rational coefficient{1};
  std::vector<std::pair<std::string, int>> factors;
};

/// Splits `a*x^2 - 3/2*y + 1` into terms. Names start with a letter and may
/// contain letters, digits and underscores. The literal "0" parses to no terms.
inline std::vector<Term> parse_terms(std::string_view src) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError(what + " at offset " + std::to_string(pos) + " in '" + std::string(src) + "'");
  };
  auto read_digits = [&] {
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    return src.substr(start, pos - start);
  };

  std::vector<Term> terms;
  skip_ws();
  if (pos == src.size()) throw fail("empty polynomial");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == src.size()) break;
    Term term;
    if (src[pos] == '+' || src[pos] == '-') {
      if (src[pos] == '-') term.coefficient = -1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    while (true) {
      skip_ws();
      if (pos == src.size()) throw fail("dangling operator");
      if (std::isdigit(static_cast<unsigned char>(src[pos]))) {
        std::string number(read_digits());
        if (pos < src.size() && src[pos] == '/') {
          ++pos;
          auto den = read_digits();
          if (den.empty()) throw fail("missing denominator");
          number += "/" + std::string(den);
        }
        term.coefficient *= parse_rational(number);
      } else if (std::isalpha(static_cast<unsigned char>(src[pos]))) {
        std::size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
          ++pos;
        std::string name(src.substr(start, pos - start));
        int exponent = 1;
        if (pos < src.size() && src[pos] == '^') {
          ++pos;
          auto digits = read_digits();
          if (digits.empty()) throw fail("missing exponent");
          exponent = std::stoi(std::string(digits));
        }
        term.factors.emplace_back(std::move(name), exponent);
      } else {
        throw fail("unexpected character");
      }
      skip_ws();
      if (pos < src.size() && src[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

/// Appends one term in canonical form; `body` is the monomial text ("" for 1).
inline void append_term(std::string& out, const Rational& coef, const std::string& body) {
  Rational mag = abs(coef);
  if (out.empty()) {
    if (sgn(coef) < 0) out += "-";
  } else {
    out += sgn(coef) < 0 ? " - " : " + ";
  }
  if (body.empty()) {
    out += to_string(mag);
  } else if (mag == 1) {
    out += body;
  } else {
    out += to_string(mag) + "*" + body;
  }
}

inline std::string power(const std::string& name, int e) {
  return e == 1 ? name : name + "^" + std::to_string(e);
}

}  // namespace tpcalc::text
