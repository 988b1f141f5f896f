#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tpcalc {

/// Exact rational number; GMP keeps it in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when textual input does not follow the expected grammar.
class ParseError : public Error {
 public:
  using Error::Error;
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "a/b", with "/1" suppressed.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses an unsigned "a" or "a/b".
inline Rational parse_rational(std::string_view text) {
  auto digits_only = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_only(num) || !digits_only(den)) throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rational(n, d);
}

inline Rational factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

}  // namespace tpcalc
