#pragma once

// Polynomials over Q in the abstract symbols of a Thom polynomial:
// quotient Chern classes c_j, Landweber-Novikov classes s_I on the target,
// and their pullbacks fs_I (f^* s_I) on the source.

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tpcalc/rational.hpp"
#include "tpcalc/text.hpp"

namespace tpcalc {

/// Exponent vector (i_1, i_2, ...) of s_I = f_*(c_1^{i_1} c_2^{i_2} ...), trailing zeros trimmed.
class LNIndex {
 public:
  LNIndex() = default;
  explicit LNIndex(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
      if (e < 0) throw Error("negative Landweber-Novikov exponent");
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  }

  const std::vector<int>& exponents() const { return exps_; }
  bool empty() const { return exps_.empty(); }

  /// sum_j j * i_j, the degree of the Chern monomial c^I.
  int weight() const {
    int w = 0;
    for (std::size_t j = 0; j < exps_.size(); ++j) w += static_cast<int>(j + 1) * exps_[j];
    return w;
  }

  /// Degree of s_I for a map of codimension kappa.
  int degree(int kappa) const { return kappa + weight(); }

  /// "0" for the empty index, otherwise one digit per exponent ("01" is c_2).
  std::string to_string() const {
    if (exps_.empty()) return "0";
    std::string out;
    for (int e : exps_) {
      if (e > 9) throw Error("Landweber-Novikov exponent " + std::to_string(e) + " has no single-digit spelling");
      out += static_cast<char>('0' + e);
    }
    return out;
  }

  static LNIndex parse(std::string_view digits) {
    if (digits.empty()) throw ParseError("empty Landweber-Novikov index");
    std::vector<int> exps;
    for (char ch : digits) {
      if (ch < '0' || ch > '9') throw ParseError("bad Landweber-Novikov index '" + std::string(digits) + "'");
      exps.push_back(ch - '0');
    }
    return LNIndex(std::move(exps));
  }

  /// Display order: by weight, then larger exponents on smaller c_j first.
  friend std::strong_ordering operator<=>(const LNIndex& a, const LNIndex& b) {
    if (auto c = a.weight() <=> b.weight(); c != 0) return c;
    std::size_t n = std::max(a.exps_.size(), b.exps_.size());
    for (std::size_t j = 0; j < n; ++j) {
      int x = j < a.exps_.size() ? a.exps_[j] : 0;
      int y = j < b.exps_.size() ? b.exps_[j] : 0;
      if (x != y) return y <=> x;
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const LNIndex&, const LNIndex&) = default;

 private:
  std::vector<int> exps_;
};

struct Symbol {
  enum class Kind { LN = 0, PulledLN = 1, Chern = 2 };
  Kind kind = Kind::Chern;
  int chern = 0;  ///< j for c_j
  LNIndex index;  ///< I for s_I / fs_I

  static Symbol c(int j) { return {Kind::Chern, j, {}}; }
  static Symbol s(LNIndex I) { return {Kind::LN, 0, std::move(I)}; }
  static Symbol fs(LNIndex I) { return {Kind::PulledLN, 0, std::move(I)}; }

  int degree(int kappa) const { return kind == Kind::Chern ? chern : index.degree(kappa); }

  std::string name() const {
    switch (kind) {
      case Kind::Chern: return "c" + std::to_string(chern);
      case Kind::LN: return "s_" + index.to_string();
      case Kind::PulledLN: return "fs_" + index.to_string();
    }
    return {};
  }

  static Symbol parse(const std::string& name) {
    auto all_digits = [](std::string_view s) {
      return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    if (name.starts_with("fs_")) return fs(LNIndex::parse(std::string_view(name).substr(3)));
    if (name.starts_with("s_")) return s(LNIndex::parse(std::string_view(name).substr(2)));
    if (name.size() > 1 && name[0] == 'c' && all_digits(std::string_view(name).substr(1))) {
      int j = std::stoi(name.substr(1));
      if (j < 1) throw ParseError("Chern symbol index must be positive: '" + name + "'");
      return c(j);
    }
    throw ParseError("unknown symbol '" + name + "'");
  }

  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
    if (a.kind == Kind::Chern) return a.chern <=> b.chern;
    return a.index <=> b.index;
  }
  friend bool operator==(const Symbol& a, const Symbol& b) { return (a <=> b) == 0; }
};

using SymMonomial = std::map<Symbol, int>;

/// Which space an expression lives on: source expressions use c_j and fs_I,
/// target expressions use s_I only.
enum class Side { Source, Target };

inline std::string to_string(Side side) { return side == Side::Source ? "source" : "target"; }

inline Side parse_side(std::string_view s) {
  if (s == "source") return Side::Source;
  if (s == "target") return Side::Target;
  throw ParseError("side must be 'source' or 'target', got '" + std::string(s) + "'");
}

inline int monomial_degree(const SymMonomial& m, int kappa) {
  int d = 0;
  for (const auto& [sym, e] : m) d += e * sym.degree(kappa);
  return d;
}

class SymbolicExpr {
 public:
  SymbolicExpr() = default;
  SymbolicExpr(Side side, int kappa) : side_(side), kappa_(kappa) {}

  static SymbolicExpr constant(Side side, int kappa, const Rational& v) {
    SymbolicExpr e(side, kappa);
    e.add_term({}, v);
    return e;
  }

  static SymbolicExpr symbol(Side side, int kappa, const Symbol& sym, int power = 1) {
    SymbolicExpr e(side, kappa);
    e.add_term(SymMonomial{{sym, power}}, 1);
    return e;
  }

  /// c_j with c_0 = 1 and c_j = 0 for j < 0.
  static SymbolicExpr chern(int kappa, int j) {
    if (j == 0) return constant(Side::Source, kappa, 1);
    if (j < 0) return SymbolicExpr(Side::Source, kappa);
    return symbol(Side::Source, kappa, Symbol::c(j));
  }

  Side side() const { return side_; }
  int kappa() const { return kappa_; }
  const std::map<SymMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const SymMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const SymMonomial& m, const Rational& coef) {
    for (const auto& [sym, e] : m) {
      if (e <= 0) throw Error("non-positive exponent on " + sym.name());
      bool target_symbol = sym.kind == Symbol::Kind::LN;
      if (target_symbol != (side_ == Side::Target))
        throw Error("symbol " + sym.name() + " does not belong on the " + tpcalc::to_string(side_) + " side");
    }
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// True when every term has the given degree (the zero polynomial qualifies).
  bool is_homogeneous(int degree) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return monomial_degree(t.first, kappa_) == degree; });
  }

  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = monomial_degree(terms_.begin()->first, kappa_);
    if (!is_homogeneous(d)) return std::nullopt;
    return d;
  }

  bool chern_only() const {
    for (const auto& [m, c] : terms_)
      for (const auto& [sym, e] : m)
        if (sym.kind != Symbol::Kind::Chern) return false;
    return true;
  }

  SymbolicExpr& operator+=(const SymbolicExpr& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SymbolicExpr& operator-=(const SymbolicExpr& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  SymbolicExpr& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend SymbolicExpr operator+(SymbolicExpr a, const SymbolicExpr& b) { return a += b; }
  friend SymbolicExpr operator-(SymbolicExpr a, const SymbolicExpr& b) { return a -= b; }
  friend SymbolicExpr operator-(SymbolicExpr a) { return a *= Rational(-1); }
  friend SymbolicExpr operator*(SymbolicExpr a, const Rational& s) { return a *= s; }
  friend SymbolicExpr operator*(const Rational& s, SymbolicExpr a) { return a *= s; }

  friend SymbolicExpr operator*(const SymbolicExpr& a, const SymbolicExpr& b) {
    a.check_compatible(b);
    SymbolicExpr out(a.side_, a.kappa_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        SymMonomial m = ma;
        for (const auto& [sym, e] : mb) m[sym] += e;
        out.add_term(m, ca * cb);
      }
    }
    return out;
  }
  SymbolicExpr& operator*=(const SymbolicExpr& o) { return *this = *this * o; }

  friend bool operator==(const SymbolicExpr& a, const SymbolicExpr& b) {
    return a.side_ == b.side_ && a.kappa_ == b.kappa_ && a.terms_ == b.terms_;
  }

  /// Terms in display order: ascending degree, then lexicographically larger
  /// exponent sequences (in symbol order) first.
  std::vector<std::pair<SymMonomial, Rational>> sorted_terms() const {
    std::vector<std::pair<SymMonomial, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
      int dx = monomial_degree(x.first, kappa_), dy = monomial_degree(y.first, kappa_);
      if (dx != dy) return dx < dy;
      auto ix = x.first.begin(), iy = y.first.begin();
      for (; ix != x.first.end() && iy != y.first.end(); ++ix, ++iy) {
        if (!(ix->first == iy->first)) return ix->first < iy->first;
        if (ix->second != iy->second) return ix->second > iy->second;
      }
      return ix != x.first.end() && iy == y.first.end();
    });
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& [m, c] : sorted_terms()) {
      std::string body;
      for (const auto& [sym, e] : m) {
        if (!body.empty()) body += "*";
        body += text::power(sym.name(), e);
      }
      text::append_term(out, c, body);
    }
    return out.empty() ? "0" : out;
  }

  void check_compatible(const SymbolicExpr& o) const {
    if (side_ != o.side_) throw Error("cannot combine source and target expressions");
    if (kappa_ != o.kappa_) throw Error("cannot combine expressions with different codimension");
  }

 private:
  Side side_ = Side::Source;
  int kappa_ = 0;
  std::map<SymMonomial, Rational> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const SymbolicExpr& e) { return os << e.to_string(); }

/// Parses the textual grammar. The side is inferred from the symbols present
/// (any s_I means target) unless given explicitly.
inline SymbolicExpr parse_expr(std::string_view src, int kappa, std::optional<Side> side = std::nullopt) {
  std::vector<std::pair<SymMonomial, Rational>> parsed;
  bool has_target = false;
  if (src != "0") {
    for (const auto& term : text::parse_terms(src)) {
      SymMonomial m;
      for (const auto& [name, e] : term.factors) {
        Symbol sym = Symbol::parse(name);
        if (e == 0) continue;
        has_target |= sym.kind == Symbol::Kind::LN;
        m[sym] += e;
      }
      parsed.emplace_back(std::move(m), term.coefficient);
    }
  }
  SymbolicExpr out(side.value_or(has_target ? Side::Target : Side::Source), kappa);
  for (const auto& [m, c] : parsed) out.add_term(m, c);
  return out;
}

/// Chern monomial c^I as a symbol monomial.
inline SymMonomial chern_monomial(const LNIndex& I) {
  SymMonomial m;
  for (std::size_t j = 0; j < I.exponents().size(); ++j)
    if (I.exponents()[j] > 0) m[Symbol::c(static_cast<int>(j + 1))] = I.exponents()[j];
  return m;
}

/// Exponent vector of a Chern-only monomial.
inline LNIndex chern_index(const SymMonomial& m) {
  std::vector<int> exps;
  for (const auto& [sym, e] : m) {
    if (sym.kind != Symbol::Kind::Chern) throw Error("expected a pure Chern monomial, found " + sym.name());
    if (static_cast<int>(exps.size()) < sym.chern) exps.resize(sym.chern, 0);
    exps[sym.chern - 1] += e;
  }
  return LNIndex(std::move(exps));
}

/// Formal pushforward of a Chern polynomial: sum a_I c^I |-> sum a_I s_I.
inline SymbolicExpr push_chern(const SymbolicExpr& chern_poly) {
  SymbolicExpr out(Side::Target, chern_poly.kappa());
  for (const auto& [m, c] : chern_poly.terms()) out.add_term({{Symbol::s(chern_index(m)), 1}}, c);
  return out;
}

/// f^* f_* of a Chern polynomial: sum a_I c^I |-> sum a_I fs_I.
inline SymbolicExpr pull_push_chern(const SymbolicExpr& chern_poly) {
  SymbolicExpr out(Side::Source, chern_poly.kappa());
  for (const auto& [m, c] : chern_poly.terms()) out.add_term({{Symbol::fs(chern_index(m)), 1}}, c);
  return out;
}

/// Formal pushforward of a source expression via the projection formula:
/// c^I * prod fs_{J_k} |-> s_I * prod s_{J_k}.
inline SymbolicExpr push_source(const SymbolicExpr& source) {
  if (source.side() != Side::Source) throw Error("push_source expects a source-side expression");
  SymbolicExpr out(Side::Target, source.kappa());
  for (const auto& [m, c] : source.terms()) {
    SymMonomial chern_part, target;
    for (const auto& [sym, e] : m) {
      if (sym.kind == Symbol::Kind::Chern) chern_part[sym] = e;
      else target[Symbol::s(sym.index)] += e;
    }
    target[Symbol::s(chern_index(chern_part))] += 1;
    out.add_term(target, c);
  }
  return out;
}

}  // namespace tpcalc
