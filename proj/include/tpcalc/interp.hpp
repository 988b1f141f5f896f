#pragma once

// Recovers unknown residual-polynomial coefficients from enumerative counts on
// model maps: each constraint gives one linear equation in the coefficients.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tpcalc/tpcore.hpp"

namespace tpcalc {

struct LinearRow {
  std::vector<Rational> coefficients;
  Rational rhs;
  std::string label;
};

struct LinearSystem {
  MultiSingType type;
  std::vector<SymMonomial> unknowns;  ///< Chern monomials of degree l(eta) - kappa
  std::vector<LinearRow> rows;
};

struct CountConstraint {
  std::string label;
  MapModel map;
  Rational count;
};

/// Chern monomials of the given weighted degree, in expression display order.
inline std::vector<SymMonomial> chern_monomials(int kappa, int degree) {
  SymbolicExpr all(Side::Source, kappa);
  std::vector<int> exps;
  auto rec = [&](auto&& self, int part, int remaining) -> void {
    if (remaining == 0) {
      all.add_term(chern_monomial(LNIndex(exps)), 1);
      return;
    }
    if (part > remaining) return;
    for (int e = remaining / part; e >= 0; --e) {
      if (static_cast<int>(exps.size()) < part) exps.resize(part, 0);
      exps[part - 1] = e;
      self(self, part + 1, remaining - e * part);
      exps[part - 1] = 0;
    }
  };
  if (degree >= 0) rec(rec, 1, degree);
  std::vector<SymMonomial> out;
  for (const auto& [m, c] : all.sorted_terms()) out.push_back(m);
  return out;
}

/// One row per constraint. R_eta enters the target expansion only through
/// the single-block summand f_*(R_eta), so each row reads
/// sum_I a_I int_Y s_I(f) = #Aut * count - int_Y (expansion with R_eta = 0).
inline LinearSystem assemble_system(const MultiSingType& t, const ResidualDB& db,
                                    const std::vector<CountConstraint>& constraints) {
  LinearSystem sys;
  sys.type = t;
  const int ell = t.ell(db.registry());
  sys.unknowns = chern_monomials(t.kappa, ell - t.kappa);

  ResidualDB partial = db;
  partial.insert(t, SymbolicExpr(Side::Source, t.kappa));
  const SymbolicExpr known_part = expand_target(t, partial);

  for (const auto& con : constraints) {
    const MapModel& f = con.map;
    if (f.kappa() != t.kappa)
      throw Error("constraint '" + con.label + "' has kappa " + std::to_string(f.kappa()) + ", expected " +
                  std::to_string(t.kappa));
    if (f.target().dimension != ell)
      throw Error("degree mismatch: constraint '" + con.label + "' has target dimension " +
                  std::to_string(f.target().dimension) + " but the locus has codimension " + std::to_string(ell));
    LinearRow row;
    row.label = con.label;
    for (const auto& m : sys.unknowns)
      row.coefficients.push_back(integrate_top(f.target_ring(), f.landweber_novikov(chern_index(m))));
    row.rhs = Rational(t.aut_order()) * con.count - integrate_top(f.target_ring(), evaluate(known_part, f));
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

struct UniqueSolution {
  std::vector<std::pair<SymMonomial, Rational>> values;
};

struct Underdetermined {
  int rank = 0;
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> kernel;
};

struct Inconsistent {
  std::vector<std::string> violated;
};

using SolveResult = std::variant<UniqueSolution, Underdetermined, Inconsistent>;

/// Gauss-Jordan elimination over Q. Pivots are exact nonzero rationals.
inline SolveResult solve_exact(const LinearSystem& sys) {
  const std::size_t n = sys.unknowns.size();
  struct WorkRow {
    std::vector<Rational> a;
    Rational b;
    std::string label;
  };
  std::vector<WorkRow> rows;
  for (const auto& r : sys.rows) {
    if (r.coefficients.size() != n) throw Error("row '" + r.label + "' has the wrong length");
    rows.push_back({r.coefficients, r.rhs, r.label});
  }

  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p].a[col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    Rational inv = 1 / rows[rank].a[col];
    for (auto& x : rows[rank].a) x *= inv;
    rows[rank].b *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r].a[col] == 0) continue;
      Rational factor = rows[r].a[col];
      for (std::size_t k = 0; k < n; ++k) rows[r].a[k] -= factor * rows[rank].a[k];
      rows[r].b -= factor * rows[rank].b;
    }
    pivot_col.push_back(static_cast<int>(col));
    ++rank;
  }

  Inconsistent bad;
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r].b != 0) bad.violated.push_back(rows[r].label);
  if (!bad.violated.empty()) return bad;

  std::vector<Rational> particular(n, 0);
  for (std::size_t r = 0; r < rank; ++r) particular[pivot_col[r]] = rows[r].b;

  if (rank == n) {
    UniqueSolution sol;
    for (std::size_t i = 0; i < n; ++i) sol.values.emplace_back(sys.unknowns[i], particular[i]);
    return sol;
  }

  Underdetermined under;
  under.rank = static_cast<int>(rank);
  under.particular = particular;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r].a[free];
    under.kernel.push_back(std::move(v));
  }
  return under;
}

/// The solved residual polynomial sum a_I c^I.
inline SymbolicExpr to_residual(const LinearSystem& sys, const UniqueSolution& sol) {
  SymbolicExpr R(Side::Source, sys.type.kappa);
  for (const auto& [m, v] : sol.values) R.add_term(m, v);
  return R;
}

}  // namespace tpcalc
