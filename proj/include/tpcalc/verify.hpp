#pragma once

// Reproducible verification suites behind `tpcalc verify`.

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tpcalc/interp.hpp"
#include "tpcalc/tpcore.hpp"

namespace tpcalc {

struct Check {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

inline Check make_check(std::string name, const std::string& expected, const std::string& got) {
  bool ok = expected == got;
  return {std::move(name), expected, got, ok};
}

/// Random homogeneous class of degree d with small integer coefficients.
template <class Rng>
GradedClass random_class(const RingSpec& ring, int d, Rng& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  GradedClass out(ring);
  for (const auto& m : monomials_of_degree(ring, d)) out.add_term(m, coef(rng));
  return out;
}

namespace table1 {

/// Table of source Thom polynomials at kappa = 1, normalized by 1/#Aut(eta/eta_1).
struct Row {
  const char* types;
  const char* polynomial;
};

inline const std::vector<Row>& rows() {
  static const std::vector<Row> r{
      {"A0,A0", "fs_0 - c1"},
      {"A1", "c2"},
      {"A0,A0,A0", "1/2*fs_0^2 - 1/2*fs_1 - fs_0*c1 + c1^2 + c2"},
      {"A0,A1", "fs_01 - 2*c1*c2 - 2*c3"},
      {"A1,A0", "fs_0*c2 - 2*c1*c2 - 2*c3"},
      {"A0,A0,A0,A0",
       "1/6*fs_0^3 - 1/2*fs_0*fs_1 + 1/3*fs_2 + 1/3*fs_01 - 1/2*fs_0^2*c1 + 1/2*fs_1*c1 + fs_0*c1^2 + "
       "fs_0*c2 - c1^3 - 3*c1*c2 - 2*c3"},
  };
  return r;
}

}  // namespace table1

inline std::vector<Check> table1_suite(const ResidualDB& db) {
  std::vector<Check> out;
  for (const auto& row : table1::rows()) {
    MultiSingType t = MultiSingType::parse(row.types, 1);
    SymbolicExpr expected = parse_expr(row.polynomial, 1, Side::Source);
    std::string name = "table1 " + t.to_string();
    ResidualDB work = db;
    if (t.to_string() == "A1,A0" || t.to_string() == "A0,A0,A0,A0") {
      // Recover R from the table row itself, then expand again.
      ResidualDB reduced(db.registry());
      for (const auto& [key, R] : db.entries())
        if (key != ResidualKey::of(t)) reduced.insert(key, R);
      extract_residual(t, expected * Rational(t.aut_order_rest()), Side::Source, reduced);
      work = reduced;
      name += " (extracted)";
    }
    out.push_back(make_check(name, expected.to_string(), expand_source(t, work, true).to_string()));
  }
  return out;
}

inline std::string ratstr(const Rational& q) { return to_string(q); }

inline std::vector<Check> classical_suite(const ResidualDB& db) {
  std::vector<Check> out;
  auto A1_cubed = MultiSingType::parse("A1,A1,A1", -1);
  for (int d = 3; d <= 6; ++d) {
    Integer D = d;
    Integer salmon = D * (D - 2) *
                     (D * D * D * D * D * D * D - 4 * D * D * D * D * D * D + 7 * D * D * D * D * D -
                      45 * D * D * D * D + 114 * D * D * D - 111 * D * D + 548 * D - 960) /
                     6;
    out.push_back(make_check("salmon tritangent planes d=" + std::to_string(d), salmon.get_str(),
                             ratstr(count_points(models::dual_surface(d), A1_cubed, db))));
  }
  for (int d = 4; d <= 8; ++d) {
    Integer D = d;
    Integer roberts = (9 * D * D * D * D * D * D - 54 * D * D * D * D * D + 9 * D * D * D * D + 423 * D * D * D -
                       458 * D * D - 829 * D + 1050) /
                      2;
    out.push_back(make_check("roberts 3-nodal curves d=" + std::to_string(d), roberts.get_str(),
                             ratstr(count_points(models::web3(d), A1_cubed, db))));
  }

  auto steiner = [&](const std::string& label, const MapModel& f, int pinch, int triple) {
    out.push_back(make_check(label + " pinch points", std::to_string(pinch),
                             ratstr(integrate_on(f.source(), evaluate(SymbolicExpr::chern(1, 2), f)))));
    out.push_back(make_check(label + " triple points", std::to_string(triple),
                             ratstr(count_points(f, MultiSingType::parse("A0,A0,A0", 1), db))));
  };
  MapModel ver = models::veronese_p3();
  steiner("veronese-p3", ver, 6, 1);
  {
    GradedClass n2 = evaluate(expand_target(MultiSingType::parse("A0,A0", 1), db, true), ver);
    GradedClass H = GradedClass::generator(ver.target_ring(), "H");
    out.push_back(make_check("veronese-p3 double curve degree", "3", ratstr(integrate_top(ver.target_ring(), n2 * H))));
  }
  steiner("scroll-q-p3", models::scroll_q_p3(), 4, 0);

  SymbolicExpr disc = parse_expr("s_2 - s_01", -1);
  for (int d = 2; d <= 8; ++d) {
    MapModel f = models::pencil(d);
    GradedClass expected = GradedClass::generator(f.target_ring(), "H") * Rational(3 * (d - 1) * (d - 1));
    out.push_back(make_check("discriminant pencil:" + std::to_string(d), expected.to_string(), evaluate(disc, f).to_string()));
  }
  return out;
}

inline std::vector<Check> series_suite(const ResidualDB& db) {
  std::vector<Check> out;
  auto run = [&](const std::string& type, int kappa, int max_r) {
    SeriesReport rep = verify_generating_series({type}, kappa, max_r, db);
    for (const auto& c : rep.checks)
      out.push_back({"series " + c.type.to_string() + " kappa=" + std::to_string(kappa),
                     c.from_partitions.to_string(), c.from_exponential.to_string(), c.pass});
  };
  run("A0", 1, 4);
  run("A1", -1, 3);
  return out;
}

/// Every shipped map model the property checks range over.
inline std::vector<std::pair<std::string, MapModel>> property_models() {
  std::vector<std::pair<std::string, MapModel>> out;
  for (std::string name : {"veronese-p3", "scroll-q-p3", "ratcurve:1", "ratcurve:4", "pencil:3", "web3:4",
                           "dual-surface:3"})
    out.emplace_back(name, models::resolve(name));
  return out;
}

/// Multi-types covered by the shipped database (plus the generated A0 family).
inline std::vector<MultiSingType> shipped_multitypes(const ResidualDB& db) {
  std::vector<MultiSingType> out;
  for (int k = 1; k <= 3; ++k) {
    MultiSingType t;
    t.kappa = 1;
    t.entries.assign(k, "A0");
    out.push_back(t);
  }
  for (const auto& [key, R] : db.entries()) {
    MultiSingType t{key.types, key.kappa};
    if (std::find_if(out.begin(), out.end(), [&](const auto& u) { return ResidualKey::of(u) == key; }) == out.end())
      out.push_back(t);
  }
  return out;
}

inline std::vector<Check> properties_suite(const ResidualDB& db, unsigned seed = 20240611u) {
  std::vector<Check> out;
  std::mt19937 rng(seed);

  for (const auto& [name, f] : property_models()) {
    int failures = 0;
    std::uniform_int_distribution<int> src_deg(0, f.source_ring().top_degree());
    std::uniform_int_distribution<int> tgt_deg(0, f.target_ring().top_degree());
    for (int trial = 0; trial < 100; ++trial) {
      GradedClass alpha = random_class(f.source_ring(), src_deg(rng), rng);
      GradedClass beta = random_class(f.target_ring(), tgt_deg(rng), rng);
      if (!(f.pushforward(alpha * f.pullback(beta)) == f.pushforward(alpha) * beta)) ++failures;
    }
    out.push_back(make_check("projection formula " + name + " (100 pairs)", "0 failures",
                             std::to_string(failures) + " failures"));
  }

  for (const auto& t : shipped_multitypes(db)) {
    int ell = t.ell(db.registry());
    bool ok = expand_target(t, db).is_homogeneous(ell) && expand_source(t, db).is_homogeneous(ell - t.kappa);
    out.push_back({"homogeneity [" + t.to_string() + "] kappa=" + std::to_string(t.kappa), "homogeneous",
                   ok ? "homogeneous" : "inhomogeneous", ok});
    out.push_back(make_check("partition count [" + t.to_string() + "]", bell_number(t.size()).get_str(),
                             std::to_string(target_terms(t, db).size())));
    out.push_back(make_check("pushforward identity [" + t.to_string() + "] kappa=" + std::to_string(t.kappa),
                             expand_target(t, db).to_string(), push_source(expand_source(t, db)).to_string()));
  }

  for (const auto& t : shipped_multitypes(db)) {
    if (t.size() < 2) continue;
    const SymbolicExpr R = db.lookup(t);
    const SymbolicExpr target = expand_target(t, db);
    int mismatches = 0;
    MultiSingType perm = t;
    for (int trial = 0; trial < 10; ++trial) {
      std::shuffle(perm.entries.begin(), perm.entries.end(), rng);
      ResidualDB reduced(db.registry());
      for (const auto& [key, value] : db.entries())
        if (key != ResidualKey::of(t)) reduced.insert(key, value);
      ResidualDB reduced_src = reduced;
      SymbolicExpr source_known = expand_source(perm, db);
      if (!(extract_residual(perm, target, Side::Target, reduced) == R)) ++mismatches;
      if (!(extract_residual(perm, source_known, Side::Source, reduced_src) == R)) ++mismatches;
    }
    out.push_back(make_check("order independence [" + t.to_string() + "] (10 permutations)", "0 mismatches",
                             std::to_string(mismatches) + " mismatches"));
  }

  out.push_back(make_check("porteous kappa=1 k=1", "c2", thom_porteous(1, 1).to_string()));
  out.push_back(make_check("porteous kappa=0 k=1", "c1", thom_porteous(0, 1).to_string()));
  out.push_back(make_check("porteous kappa=-1 k=2", "c1^2 - c2", thom_porteous(-1, 2).to_string()));
  return out;
}

inline std::vector<Check> run_suite(const std::string& suite, const ResidualDB& db) {
  if (suite == "table1") return table1_suite(db);
  if (suite == "classical") return classical_suite(db);
  if (suite == "series") return series_suite(db);
  if (suite == "properties") return properties_suite(db);
  throw Error("unknown suite '" + suite + "'");
}

}  // namespace tpcalc
