#pragma once

// Varieties modelled inside products of projective spaces. Classes on a
// complete intersection X are carried by ambient representatives; only
// alpha * [X] is ever observed downstream.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "tpcalc/algebra.hpp"

namespace tpcalc {

struct VarietyModel {
  RingSpec ambient;
  std::vector<int> factor_dims;       ///< dimensions n_i of the projective factors
  std::vector<GradedClass> divisors;  ///< degree-1 classes L_j cutting out X
  int dimension = 0;
  GradedClass tangent_total;  ///< ambient representative of c(TX)
  GradedClass fundamental;    ///< [X] = prod L_j in the ambient
};

inline std::vector<std::string> default_factor_names(std::size_t count) {
  if (count == 1) return {"h"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= count; ++i) names.push_back("h" + std::to_string(i));
  return names;
}

/// P^{n_1} x ... x P^{n_k}; tangent class from the Euler sequence.
inline VarietyModel product_projective(const std::vector<int>& dims, std::vector<std::string> names = {}) {
  if (dims.empty()) throw Error("product of projective spaces needs at least one factor");
  if (names.empty()) names = default_factor_names(dims.size());
  if (names.size() != dims.size()) throw Error("one generator name per factor required");
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 1) throw Error("projective factor dimension must be at least 1");
    gens.push_back({names[i], 1, dims[i]});
  }
  VarietyModel v;
  v.ambient = make_ring(std::move(gens));
  v.factor_dims = dims;
  v.dimension = v.ambient.top_degree();
  v.tangent_total = GradedClass::one(v.ambient);
  for (std::size_t i = 0; i < dims.size(); ++i) {
    auto g = GradedClass::generator(v.ambient, v.ambient.generator(i).name);
    v.tangent_total *= pow(GradedClass::one(v.ambient) + g, dims[i] + 1);
  }
  v.fundamental = GradedClass::one(v.ambient);
  return v;
}

/// Degree-1 class sum_i degrees[i] * g_i.
inline GradedClass multidegree_class(const RingSpec& ring, const std::vector<int>& degrees) {
  if (degrees.size() != ring.size()) throw Error("multidegree length does not match the number of factors");
  GradedClass c(ring);
  for (std::size_t i = 0; i < degrees.size(); ++i)
    c += GradedClass::generator(ring, ring.generator(i).name) * Rational(degrees[i]);
  return c;
}

/// Complete intersection of the given divisors; c(TX) by adjunction.
inline VarietyModel complete_intersection(const VarietyModel& ambient, const std::vector<GradedClass>& divisors) {
  if (!ambient.divisors.empty()) throw Error("ambient model must be a plain product of projective spaces");
  if (static_cast<int>(divisors.size()) >= ambient.dimension)
    throw Error("too many divisors for a positive-dimensional complete intersection");
  VarietyModel v = ambient;
  GradedClass normal = GradedClass::one(ambient.ambient);
  for (const auto& L : divisors) {
    L.check_ring(ambient.fundamental);
    if (L.is_zero() || !L.is_homogeneous(1)) throw Error("divisor class must be homogeneous of degree 1: " + L.to_string());
    normal *= GradedClass::one(ambient.ambient) + L;
    v.fundamental *= L;
    v.divisors.push_back(L);
  }
  v.dimension = ambient.dimension - static_cast<int>(divisors.size());
  v.tangent_total = ambient.tangent_total * invert_unit(normal);
  return v;
}

/// Complete intersection given integer multidegree vectors, e.g. {{3,0},{1,1}}.
inline VarietyModel complete_intersection_of_degrees(const VarietyModel& ambient,
                                                    const std::vector<std::vector<int>>& multidegrees) {
  std::vector<GradedClass> divisors;
  for (const auto& md : multidegrees) divisors.push_back(multidegree_class(ambient.ambient, md));
  return complete_intersection(ambient, divisors);
}

/// Integral over X of an ambient representative: the ambient degree of alpha * [X].
inline Rational integrate_on(const VarietyModel& variety, const GradedClass& alpha) {
  alpha.check_ring(variety.fundamental);
  return integrate_top(variety.ambient, alpha * variety.fundamental);
}

namespace detail {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }
  bool peek(char ch) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == ch;
  }
  void expect(char ch) {
    if (!peek(ch)) throw ParseError(std::string("expected '") + ch + "' in '" + std::string(s_) + "'");
    ++pos_;
  }
  bool accept(char ch) {
    if (!peek(ch)) return false;
    ++pos_;
    return true;
  }
  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-' || s_[pos_] == '_'))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  int integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string digits(s_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-") throw ParseError("expected integer in '" + std::string(s_) + "'");
    return std::stoi(digits);
  }
  /// `[a,b,...]`
  std::vector<int> int_list() {
    std::vector<int> out;
    expect('[');
    if (accept(']')) return out;
    do out.push_back(integer());
    while (accept(','));
    expect(']');
    return out;
  }
  /// `(a,b,...)`
  std::vector<int> tuple() {
    std::vector<int> out;
    expect('(');
    do out.push_back(integer());
    while (accept(','));
    expect(')');
    return out;
  }
  std::size_t position() const { return pos_; }
  std::string_view rest() const { return s_.substr(pos_); }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

inline VarietyModel parse_variety(Scanner& sc) {
  if (sc.word() != "product") throw ParseError("variety description must start with 'product'");
  VarietyModel v = product_projective(sc.int_list());
  if (sc.at_end()) return v;
  auto save = sc.rest();
  Scanner look(save);
  if (look.word() != "ci") return v;
  sc.word();
  std::vector<std::vector<int>> mds;
  sc.expect('[');
  do mds.push_back(sc.tuple());
  while (sc.accept(','));
  sc.expect(']');
  return complete_intersection_of_degrees(v, mds);
}

}  // namespace detail

/// `product [2,3]` or `product [3,3] ci [(3,0),(1,1)]`.
inline VarietyModel parse_variety(std::string_view desc) {
  detail::Scanner sc(desc);
  VarietyModel v = detail::parse_variety(sc);
  if (!sc.at_end()) throw ParseError("trailing input in variety description '" + std::string(desc) + "'");
  return v;
}

}  // namespace tpcalc
