#pragma once

// Multi-singularity Thom polynomials: residual polynomials keyed by multisets
// of mono-singularity types, the set-partition expansions on target and
// source, residual extraction, Thom-Porteous determinants, evaluation on map
// models and enumerative counts.

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tpcalc/maps.hpp"
#include "tpcalc/partitions.hpp"
#include "tpcalc/symbolic.hpp"

namespace tpcalc {

class UnknownType : public Error {
 public:
  using Error::Error;
};

class MissingResidual : public Error {
 public:
  using Error::Error;
};

struct SingType {
  std::string name;
  int kappa = 0;
  int ell = 0;  ///< codimension of the type's locus in the target
};

/// Target codimensions l(eta) of mono-singularity types, keyed by (name, kappa).
class SingRegistry {
 public:
  /// A0 for every kappa >= 0 (l = kappa); A1 at kappa = 1 (l = 3) and kappa = -1 (l = 1).
  static SingRegistry shipped() {
    SingRegistry r;
    r.add({"A1", 1, 3});
    r.add({"A1", -1, 1});
    return r;
  }

  void add(const SingType& t) {
    if (t.name.empty()) throw Error("singularity type needs a name");
    ells_[{t.name, t.kappa}] = t.ell;
  }

  std::optional<int> ell(const std::string& name, int kappa) const {
    if (auto it = ells_.find({name, kappa}); it != ells_.end()) return it->second;
    if (name == "A0" && kappa >= 0) return kappa;
    return std::nullopt;
  }

  int require_ell(const std::string& name, int kappa) const {
    auto l = ell(name, kappa);
    if (!l) throw UnknownType("unknown singularity type " + name + " at kappa=" + std::to_string(kappa));
    return *l;
  }

 private:
  std::map<std::pair<std::string, int>, int> ells_;
};

/// Ordered tuple (eta_1, ..., eta_r) of mono-singularity type names.
struct MultiSingType {
  std::vector<std::string> entries;
  int kappa = 0;

  /// "A0,A0,A1"
  static MultiSingType parse(std::string_view list, int kappa) {
    MultiSingType t;
    t.kappa = kappa;
    std::size_t start = 0;
    while (true) {
      auto comma = list.find(',', start);
      std::string name(list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      name.erase(0, name.find_first_not_of(" \t"));
      if (auto end = name.find_last_not_of(" \t"); end != std::string::npos) name.erase(end + 1);
      if (name.empty()) throw UnknownType("empty entry in type list '" + std::string(list) + "'");
      t.entries.push_back(std::move(name));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return t;
  }

  int size() const { return static_cast<int>(entries.size()); }

  std::vector<std::string> sorted_entries() const {
    auto s = entries;
    std::sort(s.begin(), s.end());
    return s;
  }

  /// Sub-tuple on the given 0-based positions.
  MultiSingType sub(const std::vector<int>& positions) const {
    MultiSingType t;
    t.kappa = kappa;
    for (int i : positions) t.entries.push_back(entries.at(i));
    return t;
  }

  int ell(const SingRegistry& reg) const {
    int total = 0;
    for (const auto& e : entries) total += reg.require_ell(e, kappa);
    return total;
  }

  /// #Aut: product of factorials of the name multiplicities.
  Integer aut_order() const { return aut_of(entries.begin(), entries.end()); }

  /// #Aut(eta_2, ..., eta_r).
  Integer aut_order_rest() const {
    if (entries.empty()) return 1;
    return aut_of(entries.begin() + 1, entries.end());
  }

  std::string to_string() const {
    std::string out;
    for (const auto& e : entries) out += (out.empty() ? "" : ",") + e;
    return out;
  }

 private:
  static Integer aut_of(std::vector<std::string>::const_iterator b, std::vector<std::string>::const_iterator e) {
    std::map<std::string, unsigned> mult;
    for (auto it = b; it != e; ++it) ++mult[*it];
    Integer out = 1;
    for (const auto& [name, m] : mult) out *= factorial(m).get_num();
    return out;
  }
};

struct ResidualKey {
  std::vector<std::string> types;  ///< sorted
  int kappa = 0;

  static ResidualKey of(const MultiSingType& t) { return {t.sorted_entries(), t.kappa}; }

  auto operator<=>(const ResidualKey&) const = default;
  bool operator==(const ResidualKey&) const = default;
};

/// The residual polynomial R for the A0 family at kappa >= 1:
/// R_{A0} = 1, R_{A0^2} = -c_kappa,
/// R_{A0^3} = 2 (c_kappa^2 + sum_{i=0}^{kappa-1} 2^i c_{kappa-i-1} c_{kappa+i+1}).
inline std::optional<SymbolicExpr> a0_family_residual(int count, int kappa) {
  if (kappa < 1) return std::nullopt;
  auto c = [&](int j) { return SymbolicExpr::chern(kappa, j); };
  switch (count) {
    case 1: return SymbolicExpr::constant(Side::Source, kappa, 1);
    case 2: return -c(kappa);
    case 3: {
      SymbolicExpr r = c(kappa) * c(kappa);
      Rational weight = 1;
      for (int i = 0; i < kappa; ++i, weight *= 2) r += weight * (c(kappa - i - 1) * c(kappa + i + 1));
      return r * Rational(2);
    }
    default: return std::nullopt;
  }
}

class ResidualDB {
 public:
  ResidualDB() = default;
  explicit ResidualDB(SingRegistry registry) : registry_(std::move(registry)) {}

  /// The compiled-in entries.
  static ResidualDB shipped() {
    ResidualDB db(SingRegistry::shipped());
    db.insert(ResidualKey{{"A1"}, 1}, parse_expr("c2", 1));
    db.insert(ResidualKey{{"A0", "A1"}, 1}, parse_expr("-2*c1*c2 - 2*c3", 1));
    db.insert(ResidualKey{{"A0", "A0", "A0", "A0"}, 1}, parse_expr("-6*c1^3 - 18*c1*c2 - 12*c3", 1));
    db.insert(ResidualKey{{"A1"}, -1}, parse_expr("c1^2 - c2", -1));
    db.insert(ResidualKey{{"A1", "A1"}, -1}, parse_expr("-7*c1^3 + 8*c1*c2 - c3", -1));
    db.insert(ResidualKey{{"A1", "A1", "A1"}, -1}, parse_expr("138*c1^4 - 158*c1^2*c2 + 2*c2^2 + 20*c1*c3 - 2*c4", -1));
    return db;
  }

  const SingRegistry& registry() const { return registry_; }
  SingRegistry& registry() { return registry_; }
  const std::map<ResidualKey, SymbolicExpr>& entries() const { return entries_; }

  /// Stores R for `key`, replacing any earlier entry. R must be a Chern
  /// polynomial, homogeneous of degree l(eta) - kappa when l is known.
  void insert(ResidualKey key, const SymbolicExpr& R) {
    std::sort(key.types.begin(), key.types.end());
    if (key.types.empty()) throw Error("residual key needs at least one type");
    if (R.kappa() != key.kappa) throw Error("residual polynomial kappa does not match its key");
    if (R.side() != Side::Source || !R.chern_only()) throw Error("residual polynomials are polynomials in c_j only");
    std::optional<int> expected = 0;
    for (const auto& name : key.types) {
      auto l = registry_.ell(name, key.kappa);
      if (!l) {
        expected.reset();
        break;
      }
      *expected += *l;
    }
    if (expected) {
      if (!R.is_homogeneous(*expected - key.kappa))
        throw Error("residual polynomial " + R.to_string() + " is not homogeneous of degree " +
                    std::to_string(*expected - key.kappa));
    } else if (!R.is_zero() && !R.degree()) {
      throw Error("residual polynomial " + R.to_string() + " is not homogeneous");
    }
    entries_[std::move(key)] = R;
  }

  void insert(const MultiSingType& t, const SymbolicExpr& R) { insert(ResidualKey::of(t), R); }

  std::optional<SymbolicExpr> find(const ResidualKey& key) const {
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    if (std::all_of(key.types.begin(), key.types.end(), [](const auto& n) { return n == "A0"; }))
      return a0_family_residual(static_cast<int>(key.types.size()), key.kappa);
    return std::nullopt;
  }

  SymbolicExpr lookup(const MultiSingType& t) const {
    auto r = find(ResidualKey::of(t));
    if (!r) throw MissingResidual("no residual polynomial for [" + t.to_string() + "] at kappa=" + std::to_string(t.kappa));
    return *r;
  }

  bool contains(const MultiSingType& t) const { return find(ResidualKey::of(t)).has_value(); }

  static std::string format_record(const ResidualKey& key, const SymbolicExpr& R) {
    std::string types;
    for (const auto& n : key.types) types += (types.empty() ? "" : ",") + n;
    return "types=[" + types + "] kappa=" + std::to_string(key.kappa) + " R= " + R.to_string();
  }

  static std::pair<ResidualKey, SymbolicExpr> parse_record(std::string_view line) {
    auto fail = [&](const std::string& why) { return ParseError(why + " in residual record '" + std::string(line) + "'"); };
    if (!line.starts_with("types=[")) throw fail("missing 'types=['");
    auto close = line.find(']');
    if (close == std::string_view::npos) throw fail("missing ']'");
    MultiSingType t = MultiSingType::parse(line.substr(7, close - 7), 0);
    std::string_view rest = line.substr(close + 1);
    if (!rest.starts_with(" kappa=")) throw fail("missing ' kappa='");
    rest.remove_prefix(7);
    auto r_pos = rest.find(" R=");
    if (r_pos == std::string_view::npos) throw fail("missing ' R='");
    std::string kappa_text(rest.substr(0, r_pos));
    int kappa = 0;
    try {
      std::size_t used = 0;
      kappa = std::stoi(kappa_text, &used);
      if (used != kappa_text.size()) throw fail("bad kappa");
    } catch (const std::logic_error&) {
      throw fail("bad kappa");
    }
    SymbolicExpr R = parse_expr(rest.substr(r_pos + 3), kappa, Side::Source);
    return {ResidualKey{t.sorted_entries(), kappa}, R};
  }

  std::string to_text() const {
    std::string out;
    for (const auto& [key, R] : entries_) out += format_record(key, R) + "\n";
    return out;
  }

  /// Merges records, one per line; blank lines and '#' comments are skipped.
  /// A single-type record [X] with a nonzero R of degree d registers
  /// l(X) = d + kappa when X is not yet known.
  void merge_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::pair<ResidualKey, SymbolicExpr>> records;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      records.push_back(parse_record(std::string_view(line).substr(first)));
    }
    for (const auto& [key, R] : records) {
      if (key.types.size() == 1 && !registry_.ell(key.types[0], key.kappa) && R.degree())
        registry_.add({key.types[0], key.kappa, *R.degree() + key.kappa});
    }
    for (const auto& [key, R] : records) insert(key, R);
  }

  void load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open residual database '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    merge_text(buf.str());
  }

 private:
  SingRegistry registry_;
  std::map<ResidualKey, SymbolicExpr> entries_;
};

/// One summand of a partition expansion.
struct ExpansionTerm {
  SetPartition partition;
  SymbolicExpr value;
};

/// Target summands prod_J f_*(R_J), one per set partition of {1..r}.
inline std::vector<ExpansionTerm> target_terms(const MultiSingType& t, const ResidualDB& db) {
  std::vector<ExpansionTerm> out;
  for (auto& p : set_partitions(t.size())) {
    SymbolicExpr prod = SymbolicExpr::constant(Side::Target, t.kappa, 1);
    for (const auto& block : p.blocks) prod *= push_chern(db.lookup(t.sub(block)));
    out.push_back({std::move(p), std::move(prod)});
  }
  return out;
}

/// Source summands R_{J_1} * prod_{J != J_1} f^*f_*(R_J), J_1 the block holding entry 1.
inline std::vector<ExpansionTerm> source_terms(const MultiSingType& t, const ResidualDB& db) {
  std::vector<ExpansionTerm> out;
  for (auto& p : set_partitions(t.size())) {
    SymbolicExpr prod = SymbolicExpr::constant(Side::Source, t.kappa, 1);
    for (const auto& block : p.blocks) {
      SymbolicExpr R = db.lookup(t.sub(block));
      prod *= block.front() == 0 ? R : pull_push_chern(R);
    }
    out.push_back({std::move(p), std::move(prod)});
  }
  return out;
}

/// n_eta = sum over partitions of prod_J f_*(R_J), a polynomial in s_I.
/// `normalized` divides by #Aut(eta).
inline SymbolicExpr expand_target(const MultiSingType& t, const ResidualDB& db, bool normalized = false) {
  SymbolicExpr sum(Side::Target, t.kappa);
  for (const auto& term : target_terms(t, db)) sum += term.value;
  if (normalized) sum *= Rational(1) / Rational(t.aut_order());
  return sum;
}

/// m_eta = sum over partitions of R_{J_1} prod f^*f_*(R_J), a polynomial in c_j
/// and fs_I. `normalized` divides by #Aut(eta_2, ..., eta_r).
inline SymbolicExpr expand_source(const MultiSingType& t, const ResidualDB& db, bool normalized = false) {
  SymbolicExpr sum(Side::Source, t.kappa);
  for (const auto& term : source_terms(t, db)) sum += term.value;
  if (normalized) sum *= Rational(1) / Rational(t.aut_order_rest());
  return sum;
}

inline SymbolicExpr expand(const MultiSingType& t, const ResidualDB& db, Side side, bool normalized = false) {
  return side == Side::Target ? expand_target(t, db, normalized) : expand_source(t, db, normalized);
}

/// Recovers R_eta from a known (unnormalized) expansion, given the residuals
/// of all strictly smaller sub-multisets, and stores it in `db`.
inline SymbolicExpr extract_residual(const MultiSingType& t, const SymbolicExpr& known, Side side, ResidualDB& db) {
  if (known.side() != side) throw Error("known expression is on the " + to_string(known.side()) + " side");
  if (known.kappa() != t.kappa) throw Error("known expression has kappa " + std::to_string(known.kappa()));
  const int ell = t.ell(db.registry());
  const int degree = side == Side::Target ? ell : ell - t.kappa;
  if (!known.is_homogeneous(degree))
    throw Error("degree mismatch: expected a homogeneous expression of degree " + std::to_string(degree) + ", got " +
                known.to_string());

  ResidualDB partial = db;
  partial.insert(t, SymbolicExpr(Side::Source, t.kappa));
  SymbolicExpr remainder = known - expand(t, partial, side);

  SymbolicExpr R(Side::Source, t.kappa);
  for (const auto& [m, c] : remainder.terms()) {
    if (side == Side::Target) {
      if (m.size() != 1 || m.begin()->second != 1)
        throw Error("inconsistent: no residual polynomial reproduces the term " +
                    SymbolicExpr(remainder).to_string() + " (non-linear in s)");
      R.add_term(chern_monomial(m.begin()->first.index), c);
    } else {
      for (const auto& [sym, e] : m)
        if (sym.kind != Symbol::Kind::Chern)
          throw Error("inconsistent: remainder " + remainder.to_string() + " involves " + sym.name());
      R.add_term(m, c);
    }
  }
  db.insert(t, R);
  return R;
}

/// det[c_{kappa+k+j-i}]_{1<=i,j<=k} with c_0 = 1, c_{<0} = 0.
inline SymbolicExpr thom_porteous(int kappa, int k) {
  if (k < 1) throw Error("Thom-Porteous determinant needs k >= 1");
  std::vector<std::vector<SymbolicExpr>> m(k, std::vector<SymbolicExpr>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = SymbolicExpr::chern(kappa, kappa + k + j - i);
  // Laplace expansion along the first row; k stays small.
  auto det = [&](auto&& self, const std::vector<int>& rows, const std::vector<int>& cols) -> SymbolicExpr {
    if (rows.empty()) return SymbolicExpr::constant(Side::Source, kappa, 1);
    SymbolicExpr sum(Side::Source, kappa);
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& entry = m[rows[0]][cols[c]];
      if (entry.is_zero()) continue;
      std::vector<int> sub_cols = cols;
      sub_cols.erase(sub_cols.begin() + static_cast<long>(c));
      SymbolicExpr minor = entry * self(self, sub_rows, sub_cols);
      if (c % 2 == 0) sum += minor;
      else sum -= minor;
    }
    return sum;
  };
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  return det(det, idx, idx);
}

/// Substitutes c_j -> c_j(f), s_I -> s_I(f), fs_I -> f^* s_I(f). Source
/// expressions land in the source ambient ring, target ones in the target ring.
inline GradedClass evaluate(const SymbolicExpr& expr, const MapModel& f) {
  if (expr.kappa() != f.kappa())
    throw Error("expression has kappa " + std::to_string(expr.kappa()) + " but the map has kappa " +
                std::to_string(f.kappa()));
  const RingSpec& ring = expr.side() == Side::Source ? f.source_ring() : f.target_ring();
  std::map<Symbol, GradedClass> cache;
  auto value = [&](const Symbol& sym) -> const GradedClass& {
    auto it = cache.find(sym);
    if (it != cache.end()) return it->second;
    GradedClass v;
    switch (sym.kind) {
      case Symbol::Kind::Chern: v = f.chern(sym.chern); break;
      case Symbol::Kind::LN: v = f.landweber_novikov(sym.index); break;
      case Symbol::Kind::PulledLN: v = f.pullback(f.landweber_novikov(sym.index)); break;
    }
    return cache.emplace(sym, std::move(v)).first->second;
  };
  GradedClass out(ring);
  for (const auto& [m, c] : expr.terms()) {
    GradedClass term = GradedClass::constant(ring, c);
    for (const auto& [sym, e] : m) term *= pow(value(sym), e);
    out += term;
  }
  return out;
}

/// Number of eta-points in the target: (1/#Aut) int_Y n_eta(f).
inline Rational count_points(const MapModel& f, const MultiSingType& t, const ResidualDB& db) {
  if (t.kappa != f.kappa())
    throw Error("type kappa " + std::to_string(t.kappa) + " does not match map kappa " + std::to_string(f.kappa()));
  const int ell = t.ell(db.registry());
  if (ell != f.target().dimension)
    throw Error("locus not zero-dimensional: codimension " + std::to_string(ell) + " in a target of dimension " +
                std::to_string(f.target().dimension));
  GradedClass n = evaluate(expand_target(t, db), f);
  return integrate_top(f.target_ring(), n) / Rational(t.aut_order());
}

/// Comparison of one coefficient of the exponential generating series.
struct SeriesCheck {
  MultiSingType type;
  SymbolicExpr from_partitions;  ///< expand_target / #Aut
  SymbolicExpr from_exponential; ///< coefficient of t^eta in exp(sum f_*(R) t^eta / #Aut)
  bool pass = false;
};

struct SeriesReport {
  bool pass = true;
  std::vector<SeriesCheck> checks;
};

/// Checks 1 + sum n_eta t^eta / #Aut(eta) = exp(sum f_*(R_eta) t^eta / #Aut(eta))
/// coefficientwise for all multisets over `types` of size at most max_r.
inline SeriesReport verify_generating_series(const std::vector<std::string>& types, int kappa, int max_r,
                                             const ResidualDB& db) {
  if (types.empty()) throw Error("generating series needs at least one type");
  if (max_r < 1) throw Error("maximum tuple size must be positive");
  using Exponent = std::vector<int>;
  using Series = std::map<Exponent, SymbolicExpr>;
  const std::size_t n = types.size();

  std::vector<Exponent> multisets;
  Exponent cur(n, 0);
  auto enumerate = [&](auto&& self, std::size_t i, int budget) -> void {
    if (i == n) {
      if (budget < max_r) multisets.push_back(cur);
      return;
    }
    for (int k = 0; k <= budget; ++k) {
      cur[i] = k;
      self(self, i + 1, budget - k);
    }
    cur[i] = 0;
  };
  enumerate(enumerate, 0, max_r);

  auto to_type = [&](const Exponent& e) {
    MultiSingType t;
    t.kappa = kappa;
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) t.entries.push_back(types[i]);
    return t;
  };
  auto total = [](const Exponent& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  };
  auto multiply = [&](const Series& a, const Series& b) {
    Series out;
    for (const auto& [ea, va] : a)
      for (const auto& [eb, vb] : b) {
        Exponent e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
        if (total(e) > max_r) continue;
        auto [it, inserted] = out.try_emplace(e, va * vb);
        if (!inserted) it->second += va * vb;
      }
    return out;
  };

  Series connected;
  for (const auto& e : multisets) {
    MultiSingType t = to_type(e);
    connected[e] = push_chern(db.lookup(t)) * (Rational(1) / Rational(t.aut_order()));
  }
  const Exponent zero(n, 0);
  Series exp_series{{zero, SymbolicExpr::constant(Side::Target, kappa, 1)}};
  Series power{{zero, SymbolicExpr::constant(Side::Target, kappa, 1)}};
  for (int k = 1; k <= max_r; ++k) {
    power = multiply(power, connected);
    for (const auto& [e, v] : power) {
      SymbolicExpr scaled = v * (Rational(1) / factorial(k));
      auto [it, inserted] = exp_series.try_emplace(e, scaled);
      if (!inserted) it->second += scaled;
    }
  }

  SeriesReport report;
  for (const auto& e : multisets) {
    MultiSingType t = to_type(e);
    SeriesCheck check{t, expand_target(t, db, true), SymbolicExpr(Side::Target, kappa), false};
    if (auto it = exp_series.find(e); it != exp_series.end()) check.from_exponential = it->second;
    check.pass = check.from_partitions == check.from_exponential;
    report.pass = report.pass && check.pass;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace tpcalc
