#pragma once

// Proper maps f: X -> Y between modelled varieties, with f^*, f_*, the quotient
// Chern class c(f) = f^*c(TY) / c(TX) and Landweber-Novikov classes s_I(f).

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tpcalc/chow.hpp"
#include "tpcalc/symbolic.hpp"

namespace tpcalc {

class MapModel {
 public:
  enum class Kind { ProductProjection, LinearProjection, RationalCurve };

  /// Projection of X inside P^{n_1} x ... x P^{n_k} onto the factors listed in
  /// `target_factors` (0-based). Fiber integration happens on alpha * [X].
  static MapModel projection_from_product(const VarietyModel& X, std::vector<int> target_factors) {
    const std::size_t k = X.factor_dims.size();
    if (target_factors.empty() || target_factors.size() >= k)
      throw Error("target factors must form a nonempty proper subset of the ambient factors");
    std::vector<bool> is_target(k, false);
    for (int i : target_factors) {
      if (i < 0 || static_cast<std::size_t>(i) >= k) throw Error("target factor index out of range");
      if (is_target[i]) throw Error("repeated target factor");
      is_target[i] = true;
    }
    MapModel f;
    f.kind_ = Kind::ProductProjection;
    f.source_ = X;
    std::vector<int> dims;
    std::vector<std::string> names;
    for (int i : target_factors) {
      dims.push_back(X.factor_dims[i]);
      names.push_back(X.ambient.generator(i).name);
    }
    f.target_ = product_projective(dims, names);
    f.target_factors_ = std::move(target_factors);
    for (std::size_t i = 0; i < k; ++i)
      if (!is_target[i]) f.fiber_factors_.push_back(static_cast<int>(i));
    f.finish();
    return f;
  }

  /// Generic linear projection of X embedded by the degree-1 class `e` into
  /// P^{target_dim}: f^*(H) = e and f_*(alpha) = (int_X alpha e^{dim X - c}) H^{c + kappa}.
  static MapModel linear_projection(const VarietyModel& X, const GradedClass& e, int target_dim,
                                    std::string target_name = "H") {
    e.check_ring(X.fundamental);
    if (e.is_zero() || !e.is_homogeneous(1)) throw Error("embedding class must be homogeneous of degree 1");
    if (target_dim < 1) throw Error("target dimension must be positive");
    MapModel f;
    f.kind_ = Kind::LinearProjection;
    f.source_ = X;
    f.target_ = product_projective({target_dim}, {std::move(target_name)});
    f.embedding_ = e;
    f.finish();
    return f;
  }

  /// Generic degree-d map P^1 -> P^2: f^*(h) = d p, f_*(1) = d h, f_*(p) = h^2.
  static MapModel rational_curve(int d) {
    if (d < 1) throw Error("rational curve degree must be at least 1");
    VarietyModel line = product_projective({1}, {"p"});
    MapModel f = linear_projection(line, GradedClass::generator(line.ambient, "p") * Rational(d), 2, "h");
    f.kind_ = Kind::RationalCurve;
    f.degree_ = d;
    return f;
  }

  Kind kind() const { return kind_; }
  const VarietyModel& source() const { return source_; }
  const VarietyModel& target() const { return target_; }
  const RingSpec& source_ring() const { return source_.ambient; }
  const RingSpec& target_ring() const { return target_.ambient; }
  int kappa() const { return target_.dimension - source_.dimension; }
  int curve_degree() const { return degree_; }

  GradedClass pullback(const GradedClass& beta) const {
    beta.check_ring(target_.fundamental);
    GradedClass out(source_.ambient);
    if (kind_ == Kind::ProductProjection) {
      for (const auto& [m, c] : beta.terms()) {
        Monomial lifted{std::vector<int>(source_.ambient.size(), 0)};
        for (std::size_t i = 0; i < target_factors_.size(); ++i) lifted.exponents[target_factors_[i]] = m.exponents[i];
        out.add_term(std::move(lifted), c);
      }
    } else {
      for (const auto& [m, c] : beta.terms()) out += pow(embedding_, m.exponents[0]) * c;
    }
    return out;
  }

  GradedClass pushforward(const GradedClass& alpha) const {
    alpha.check_ring(source_.fundamental);
    GradedClass out(target_.ambient);
    if (kind_ == Kind::ProductProjection) {
      GradedClass restricted = alpha * source_.fundamental;
      for (const auto& [m, c] : restricted.terms()) {
        bool top_on_fiber = true;
        for (int i : fiber_factors_)
          if (m.exponents[i] != source_.factor_dims[i]) top_on_fiber = false;
        if (!top_on_fiber) continue;
        Monomial image{std::vector<int>(target_factors_.size())};
        for (std::size_t i = 0; i < target_factors_.size(); ++i) image.exponents[i] = m.exponents[target_factors_[i]];
        out.add_term(std::move(image), c);
      }
    } else {
      const int dim_x = source_.dimension;
      auto [lo, hi] = alpha.degree_range();
      for (int c = lo; c <= hi; ++c) {
        if (c > dim_x || c + kappa() < 0) continue;
        GradedClass part = graded_component(alpha, c);
        if (part.is_zero()) continue;
        Rational degree = integrate_on(source_, part * pow(embedding_, dim_x - c));
        out += GradedClass::generator(target_.ambient, target_.ambient.generator(0).name, c + kappa()) * degree;
      }
    }
    return out;
  }

  /// c(f) = f^*c(TY) * c(TX)^{-1} on source ambient representatives.
  const GradedClass& quotient_chern() const { return quotient_chern_; }

  GradedClass chern(int j) const {
    if (j < 0) return GradedClass(source_.ambient);
    return graded_component(quotient_chern_, j);
  }

  /// s_I(f) = f_*(c_1(f)^{i_1} c_2(f)^{i_2} ...).
  GradedClass landweber_novikov(const LNIndex& I) const {
    GradedClass mono = GradedClass::one(source_.ambient);
    for (std::size_t j = 0; j < I.exponents().size(); ++j) mono *= pow(chern(static_cast<int>(j + 1)), I.exponents()[j]);
    return pushforward(mono);
  }

 private:
  void finish() { quotient_chern_ = pullback(target_.tangent_total) * invert_unit(source_.tangent_total); }

  Kind kind_ = Kind::ProductProjection;
  VarietyModel source_;
  VarietyModel target_;
  std::vector<int> target_factors_;
  std::vector<int> fiber_factors_;
  GradedClass embedding_;
  int degree_ = 0;
  GradedClass quotient_chern_;
};

inline MapModel projection_from_product(const VarietyModel& X, std::vector<int> target_factors) {
  return MapModel::projection_from_product(X, std::move(target_factors));
}
inline MapModel linear_projection_model(const VarietyModel& X, const GradedClass& e, int target_dim) {
  return MapModel::linear_projection(X, e, target_dim);
}
inline MapModel rational_curve_model(int d) { return MapModel::rational_curve(d); }
inline GradedClass quotient_chern(const MapModel& f) { return f.quotient_chern(); }
inline GradedClass landweber_novikov(const MapModel& f, const LNIndex& I) { return f.landweber_novikov(I); }
inline GradedClass pushforward(const MapModel& f, const GradedClass& alpha) { return f.pushforward(alpha); }
inline GradedClass pullback(const MapModel& f, const GradedClass& beta) { return f.pullback(beta); }

/// Unknown model name or malformed model description.
class UnknownModel : public Error {
 public:
  using Error::Error;
};

namespace models {

/// Quadratic Veronese surface P^2 -> P^3 (Steiner's Roman surface).
inline MapModel veronese_p3() {
  VarietyModel p2 = product_projective({2});
  return MapModel::linear_projection(p2, GradedClass::generator(p2.ambient, "h") * Rational(2), 3);
}

/// P^1 x P^1 embedded by O(1,2) and projected to P^3 (quartic scroll).
inline MapModel scroll_q_p3() {
  VarietyModel q = product_projective({1, 1}, {"a", "b"});
  return MapModel::linear_projection(q, multidegree_class(q.ambient, {1, 2}), 3);
}

/// Pencil of plane curves of degree d: bidegree (d,1) in P^2 x P^1 over P^1.
inline MapModel pencil(int d) {
  if (d < 1) throw Error("degree must be at least 1");
  VarietyModel amb = product_projective({2, 1}, {"h", "H"});
  return MapModel::projection_from_product(complete_intersection_of_degrees(amb, {{d, 1}}), {1});
}

/// Universal family over a general web P^3 of plane curves of degree d.
inline MapModel web3(int d) {
  if (d < 1) throw Error("degree must be at least 1");
  VarietyModel amb = product_projective({2, 3}, {"h", "H"});
  return MapModel::projection_from_product(complete_intersection_of_degrees(amb, {{d, 1}}), {1});
}

/// Incidence {(p, H) : p in S, p in H} for a degree-d surface S in P^3,
/// projected to the dual P^3.
inline MapModel dual_surface(int d) {
  if (d < 1) throw Error("degree must be at least 1");
  VarietyModel amb = product_projective({3, 3}, {"h", "H"});
  return MapModel::projection_from_product(complete_intersection_of_degrees(amb, {{d, 0}, {1, 1}}), {1});
}

inline int parse_degree_suffix(std::string_view name, std::string_view prefix) {
  std::string_view digits = name.substr(prefix.size());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw UnknownModel("malformed model degree in '" + std::string(name) + "'");
  return std::stoi(std::string(digits));
}

/// Resolves a named model (`veronese-p3`, `scroll-q-p3`, `ratcurve:d`,
/// `pencil:d`, `web3:d`, `dual-surface:d`) or a description
/// `project <variety> onto [i,...]` / `linear <variety> by (a,b,...) into n`
/// with 1-based factor indices.
inline MapModel resolve(std::string_view name) {
  try {
    if (name == "veronese-p3") return veronese_p3();
    if (name == "scroll-q-p3") return scroll_q_p3();
    if (name.starts_with("ratcurve:")) return rational_curve_model(parse_degree_suffix(name, "ratcurve:"));
    if (name.starts_with("pencil:")) return pencil(parse_degree_suffix(name, "pencil:"));
    if (name.starts_with("web3:")) return web3(parse_degree_suffix(name, "web3:"));
    if (name.starts_with("dual-surface:")) return dual_surface(parse_degree_suffix(name, "dual-surface:"));
    detail::Scanner sc(name);
    std::string head = sc.word();
    if (head == "project") {
      VarietyModel X = detail::parse_variety(sc);
      if (sc.word() != "onto") throw ParseError("expected 'onto'");
      std::vector<int> factors;
      for (int i : sc.int_list()) factors.push_back(i - 1);
      if (!sc.at_end()) throw ParseError("trailing input");
      return MapModel::projection_from_product(X, factors);
    }
    if (head == "linear") {
      VarietyModel X = detail::parse_variety(sc);
      if (sc.word() != "by") throw ParseError("expected 'by'");
      GradedClass e = multidegree_class(X.ambient, sc.tuple());
      if (sc.word() != "into") throw ParseError("expected 'into'");
      int n = sc.integer();
      if (!sc.at_end()) throw ParseError("trailing input");
      return MapModel::linear_projection(X, e, n);
    }
  } catch (const UnknownModel&) {
    throw;
  } catch (const Error& e) {
    throw UnknownModel("cannot build model '" + std::string(name) + "': " + e.what());
  }
  throw UnknownModel("unknown model '" + std::string(name) + "'");
}

inline std::vector<std::string> shipped_names() {
  return {"veronese-p3", "scroll-q-p3", "ratcurve:d", "pencil:d", "web3:d", "dual-surface:d"};
}

}  // namespace models
}  // namespace tpcalc
