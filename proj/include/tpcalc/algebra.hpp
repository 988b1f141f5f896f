#pragma once

// Truncated multigraded polynomial rings Q[g_1..g_k]/(g_i^{n_i+1}) with exact
// rational coefficients. These model Chow rings of products of projective spaces.

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tpcalc/rational.hpp"
#include "tpcalc/text.hpp"

namespace tpcalc {

struct Generator {
  std::string name;
  int degree = 1;
  int bound = 1;  ///< g^{bound+1} = 0

  friend bool operator==(const Generator&, const Generator&) = default;
};

class RingSpec {
 public:
  RingSpec() : gens_(std::make_shared<const std::vector<Generator>>()) {}

  explicit RingSpec(std::vector<Generator> gens) {
    std::set<std::string> seen;
    for (const auto& g : gens) {
      if (g.name.empty()) throw Error("empty generator name");
      if (!seen.insert(g.name).second) throw Error("duplicate generator name '" + g.name + "'");
      if (g.degree < 1) throw Error("generator '" + g.name + "' must have positive degree");
      if (g.bound < 1) throw Error("generator '" + g.name + "' must have positive nilpotency bound");
    }
    gens_ = std::make_shared<const std::vector<Generator>>(std::move(gens));
  }

  std::size_t size() const { return gens_->size(); }
  const Generator& generator(std::size_t i) const { return (*gens_)[i]; }
  const std::vector<Generator>& generators() const { return *gens_; }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_->size(); ++i)
      if ((*gens_)[i].name == name) return static_cast<int>(i);
    return -1;
  }

  int top_degree() const {
    int d = 0;
    for (const auto& g : *gens_) d += g.degree * g.bound;
    return d;
  }

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.gens_ == b.gens_ || *a.gens_ == *b.gens_;
  }

 private:
  std::shared_ptr<const std::vector<Generator>> gens_;
};

inline RingSpec make_ring(std::vector<Generator> gens) { return RingSpec(std::move(gens)); }

struct Monomial {
  std::vector<int> exponents;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  int degree(const RingSpec& ring) const {
    int d = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) d += exponents[i] * ring.generator(i).degree;
    return d;
  }
};

/// Display order: ascending total degree, then lexicographically larger exponent
/// vectors first (so `h` precedes `H` in a ring ordered (h, H)).
inline bool display_before(const RingSpec& ring, const Monomial& a, const Monomial& b) {
  int da = a.degree(ring), db = b.degree(ring);
  if (da != db) return da < db;
  return a.exponents > b.exponents;
}

/// An element of a truncated ring. Stored terms are nonzero and in normal form.
class GradedClass {
 public:
  GradedClass() = default;
  explicit GradedClass(RingSpec ring) : ring_(std::move(ring)) {}

  static GradedClass constant(const RingSpec& ring, const Rational& value) {
    GradedClass c(ring);
    c.add_term(Monomial{std::vector<int>(ring.size(), 0)}, value);
    return c;
  }

  static GradedClass one(const RingSpec& ring) { return constant(ring, 1); }

  static GradedClass generator(const RingSpec& ring, const std::string& name, int power = 1) {
    int idx = ring.index_of(name);
    if (idx < 0) throw Error("no generator named '" + name + "'");
    Monomial m{std::vector<int>(ring.size(), 0)};
    m.exponents[idx] = power;
    GradedClass c(ring);
    c.add_term(std::move(m), 1);
    return c;
  }

  static GradedClass monomial(const RingSpec& ring, Monomial m, const Rational& coef = 1) {
    GradedClass c(ring);
    c.add_term(std::move(m), coef);
    return c;
  }

  const RingSpec& ring() const { return ring_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coefficient(Monomial{std::vector<int>(ring_.size(), 0)}); }

  /// Adds `coef * m`; monomials beyond the nilpotency bounds vanish.
  void add_term(Monomial m, const Rational& coef) {
    if (m.exponents.size() != ring_.size()) throw Error("monomial length does not match ring");
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] < 0) throw Error("negative exponent");
      if (m.exponents[i] > ring_.generator(i).bound) return;
    }
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Minimum and maximum degree of the stored terms; {0,-1} for zero.
  std::pair<int, int> degree_range() const {
    if (terms_.empty()) return {0, -1};
    int lo = ring_.top_degree(), hi = 0;
    for (const auto& [m, c] : terms_) {
      int d = m.degree(ring_);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    return {lo, hi};
  }

  bool is_homogeneous(int degree) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.first.degree(ring_) == degree; });
  }

  GradedClass& operator+=(const GradedClass& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  GradedClass& operator-=(const GradedClass& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  GradedClass& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator-(GradedClass a) { return a *= Rational(-1); }
  friend GradedClass operator*(GradedClass a, const Rational& s) { return a *= s; }
  friend GradedClass operator*(const Rational& s, GradedClass a) { return a *= s; }

  friend GradedClass operator*(const GradedClass& p, const GradedClass& q) {
    p.check_ring(q);
    GradedClass out(p.ring_);
    Monomial m{std::vector<int>(p.ring_.size())};
    for (const auto& [mp, cp] : p.terms_) {
      for (const auto& [mq, cq] : q.terms_) {
        for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] = mp.exponents[i] + mq.exponents[i];
        out.add_term(m, cp * cq);
      }
    }
    return out;
  }

  GradedClass& operator*=(const GradedClass& o) { return *this = *this * o; }

  friend bool operator==(const GradedClass& a, const GradedClass& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    std::vector<const std::pair<const Monomial, Rational>*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return display_before(ring_, a->first, b->first); });
    std::string out;
    for (const auto* t : sorted) {
      std::string body;
      for (std::size_t i = 0; i < ring_.size(); ++i) {
        int e = t->first.exponents[i];
        if (e == 0) continue;
        if (!body.empty()) body += "*";
        body += text::power(ring_.generator(i).name, e);
      }
      text::append_term(out, t->second, body);
    }
    return out.empty() ? "0" : out;
  }

  void check_ring(const GradedClass& o) const {
    if (!(ring_ == o.ring_)) throw Error("ring mismatch");
  }

 private:
  RingSpec ring_;
  std::map<Monomial, Rational> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const GradedClass& c) { return os << c.to_string(); }

inline GradedClass multiply(const GradedClass& p, const GradedClass& q) { return p * q; }

inline GradedClass pow(const GradedClass& p, int e) {
  if (e < 0) throw Error("negative power");
  GradedClass r = GradedClass::one(p.ring());
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

/// Sum of the terms of total degree exactly `d`.
inline GradedClass graded_component(const GradedClass& p, int d) {
  GradedClass out(p.ring());
  for (const auto& [m, c] : p.terms())
    if (m.degree(p.ring()) == d) out.add_term(m, c);
  return out;
}

/// Multiplicative inverse of a class with nonzero constant term, by the
/// truncated geometric series a0^{-1} * sum_k (-x)^k with x = p/a0 - 1.
inline GradedClass invert_unit(const GradedClass& p) {
  Rational a0 = p.constant_term();
  if (a0 == 0) throw Error("not a unit: " + p.to_string());
  Rational inv0 = 1 / a0;
  GradedClass x = p * inv0 - GradedClass::one(p.ring());
  GradedClass neg_x = -x;
  GradedClass sum = GradedClass::one(p.ring());
  GradedClass term = sum;
  while (true) {
    term *= neg_x;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum * inv0;
}

/// Coefficient of the fundamental top monomial prod g_i^{n_i}.
inline Rational integrate_top(const RingSpec& ring, const GradedClass& p) {
  if (!(p.ring() == ring)) throw Error("ring mismatch");
  Monomial top;
  for (const auto& g : ring.generators()) top.exponents.push_back(g.bound);
  return p.coefficient(top);
}

/// All normal-form monomials of total degree `d`, in display order.
inline std::vector<Monomial> monomials_of_degree(const RingSpec& ring, int d) {
  std::vector<Monomial> out;
  Monomial m{std::vector<int>(ring.size(), 0)};
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == ring.size()) {
      if (remaining == 0) out.push_back(m);
      return;
    }
    const auto& g = ring.generator(i);
    for (int e = std::min(g.bound, remaining / g.degree); e >= 0; --e) {
      m.exponents[i] = e;
      self(self, i + 1, remaining - e * g.degree);
    }
    m.exponents[i] = 0;
  };
  if (d >= 0) rec(rec, 0, d);
  return out;
}

inline GradedClass parse_class(const RingSpec& ring, std::string_view src) {
  GradedClass out(ring);
  if (src == "0") return out;
  for (const auto& term : text::parse_terms(src)) {
    Monomial m{std::vector<int>(ring.size(), 0)};
    for (const auto& [name, e] : term.factors) {
      int idx = ring.index_of(name);
      if (idx < 0) throw ParseError("unknown generator '" + name + "'");
      m.exponents[idx] += e;
    }
    out.add_term(std::move(m), term.coefficient);
  }
  return out;
}

}  // namespace tpcalc
