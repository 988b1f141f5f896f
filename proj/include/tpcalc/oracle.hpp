#pragma once

// Double points of parametrized plane curves t -> (x(t), y(t)) counted by the
// resultant of the divided differences (x(t)-x(u))/(t-u), (y(t)-y(u))/(t-u).

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tpcalc/rational.hpp"
#include "tpcalc/text.hpp"

namespace tpcalc {

/// Dense univariate polynomial, coefficients in ascending degree, no trailing zeros.
template <class Coeff>
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Coeff& c) : c_{c} { trim(); }  // NOLINT: constants convert implicitly
  explicit UPoly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(const Coeff& c, int degree) {
    std::vector<Coeff> v(degree + 1, Coeff(0));
    v[degree] = c;
    return UPoly(std::move(v));
  }

  const std::vector<Coeff>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  ///< -1 for zero
  Coeff operator[](int i) const { return i >= 0 && i <= degree() ? c_[i] : Coeff(0); }
  Coeff leading() const { return c_.empty() ? Coeff(0) : c_.back(); }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Coeff> r(std::max(a.c_.size(), b.c_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a) {
    std::vector<Coeff> r = a.c_;
    for (auto& x : r) x = -x;
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  Coeff operator()(const Coeff& x) const {
    Coeff acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UPoly derivative() const {
    std::vector<Coeff> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Coeff(static_cast<long>(i)));
    return UPoly(std::move(r));
  }

  std::string to_string(const std::string& var) const {
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (c_[i] == 0) continue;
      std::string body = i == 0 ? "" : text::power(var, i);
      text::append_term(out, c_[i], body);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Coeff(0)) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

using QPoly = UPoly<Rational>;

/// Quotient and remainder over a field.
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> q(a.degree() - db + 1, Rational(0));
  for (int i = a.degree(); i >= db; --i) {
    Rational f = r[i] / b.leading();
    q[i - db] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

/// Exact division; throws if the remainder is nonzero.
inline QPoly exact_div(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}
inline Rational exact_div(const Rational& a, const Rational& b) {
  if (b == 0) throw Error("division by zero");
  return a / b;
}

inline QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  std::vector<Rational> monic = a.coeffs();
  Rational lead = monic.back();
  for (auto& x : monic) x /= lead;
  return QPoly(std::move(monic));
}

/// Determinant by fraction-free (Bareiss) elimination; every division is exact
/// in an integral domain with `exact_div`.
template <class Coeff>
Coeff bareiss_determinant(std::vector<std::vector<Coeff>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Coeff(1);
  Coeff prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == Coeff(0)) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == Coeff(0)) ++p;
      if (p == n) return Coeff(0);
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = Coeff(0);
    }
    prev = m[k][k];
  }
  return negate ? Coeff(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

/// Sylvester resultant of p, q (coefficients ascending in the eliminated
/// variable) over the coefficient ring. Res(p, q) = lc(p)^deg q * prod q(roots of p).
template <class Coeff>
Coeff resultant(const UPoly<Coeff>& p, const UPoly<Coeff>& q) {
  if (p.is_zero() && q.is_zero()) throw Error("resultant of two zero polynomials");
  if (p.is_zero() || q.is_zero()) return Coeff(0);
  const int m = p.degree(), n = q.degree();
  const int size = m + n;
  if (size == 0) return Coeff(1);
  std::vector<std::vector<Coeff>> syl(size, std::vector<Coeff>(size, Coeff(0)));
  // Row i < n holds p shifted by i; row n + i holds q shifted by i (descending powers).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) syl[i][i + j] = p[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) syl[n + i][i + j] = q[n - j];
  return bareiss_determinant(std::move(syl));
}

/// Affine chart (x(t), y(t)) of a map P^1 -> P^2.
struct CurveParam {
  QPoly x;
  QPoly y;

  int degree() const { return std::max(x.degree(), y.degree()); }
};

inline QPoly parse_upoly(std::string_view src, const std::string& var) {
  QPoly out;
  if (src == "0") return out;
  for (const auto& term : text::parse_terms(src)) {
    int e = 0;
    for (const auto& [name, k] : term.factors) {
      if (name != var) throw ParseError("unexpected variable '" + name + "', expected '" + var + "'");
      e += k;
    }
    out = out + QPoly::monomial(term.coefficient, e);
  }
  return out;
}

/// "x(t), y(t)" such as "t^2, t^3".
inline CurveParam parse_curve(std::string_view src) {
  auto comma = src.find(',');
  if (comma == std::string_view::npos) throw ParseError("curve needs two comma-separated polynomials");
  CurveParam c{parse_upoly(src.substr(0, comma), "t"), parse_upoly(src.substr(comma + 1), "t")};
  if (c.x.degree() < 1 && c.y.degree() < 1) throw Error("curve parametrization is constant");
  return c;
}

/// (p(t) - p(u)) / (t - u) as a polynomial in u with coefficients in Q[t]:
/// sum_k a_k sum_{i+j=k-1} t^i u^j.
inline UPoly<QPoly> divided_difference(const QPoly& p) {
  std::vector<QPoly> by_u(std::max(p.degree(), 0));
  for (int k = 1; k <= p.degree(); ++k)
    for (int j = 0; j < k; ++j) by_u[j] = by_u[j] + QPoly::monomial(p[k], k - 1 - j);
  return UPoly<QPoly>(std::move(by_u));
}

/// Res_u of the two divided differences, a polynomial in t. Its roots are the
/// parameter values t paired with some u != t of equal image.
inline QPoly double_point_resultant(const CurveParam& c) {
  if (c.x.degree() < 1 && c.y.degree() < 1) throw Error("curve parametrization is constant");
  QPoly r = resultant(divided_difference(c.x), divided_difference(c.y));
  if (r.is_zero()) throw Error("non-birational parametrization: divided differences share a factor");
  return r;
}

/// Degree in t of the double-point resultant: twice the delta-invariant of
/// the affine image curve.
inline int double_point_degree(const CurveParam& c) { return double_point_resultant(c).degree(); }

}  // namespace tpcalc
