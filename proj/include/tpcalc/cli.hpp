#pragma once

// `tpcalc` command-line front end. Exit codes: 0 success, 1 a mathematical
// check failed, 2 usage error (unknown subcommand, model or type, bad input).

#include <chrono>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tpcalc/interp.hpp"
#include "tpcalc/oracle.hpp"
#include "tpcalc/tpcore.hpp"
#include "tpcalc/verify.hpp"

namespace tpcalc::cli {

using nlohmann::json;

struct Report {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  std::vector<std::string> lines;  ///< text rendering of `result`
  std::vector<Check> checks;
  int exit_code = 0;
};

inline void emit(const Report& rep, bool as_json, bool timing, double elapsed_ms, std::ostream& out) {
  if (as_json) {
    json doc;
    doc["command"] = rep.command;
    doc["inputs"] = rep.inputs;
    doc["result"] = rep.result;
    doc["checks"] = json::array();
    for (const auto& c : rep.checks)
      doc["checks"].push_back({{"name", c.name}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}});
    if (timing) doc["timing_ms"] = elapsed_ms;
    out << doc.dump(2) << "\n";
    return;
  }
  for (const auto& l : rep.lines) out << l << "\n";
  for (const auto& c : rep.checks) {
    if (c.pass) out << "PASS " << c.name << ": " << c.got << "\n";
    else out << "FAIL " << c.name << ": expected " << c.expected << ", got " << c.got << "\n";
  }
  if (timing) out << "elapsed: " << elapsed_ms << " ms\n";
}

inline Report checks_report(std::string command, std::vector<Check> checks) {
  Report rep;
  rep.command = std::move(command);
  int failed = 0;
  for (const auto& c : checks) failed += c.pass ? 0 : 1;
  rep.result["passed"] = static_cast<int>(checks.size()) - failed;
  rep.result["failed"] = failed;
  rep.checks = std::move(checks);
  rep.exit_code = failed == 0 ? 0 : 1;
  return rep;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-singularity Thom polynomial calculator", "tpcalc"};
  app.require_subcommand(1);
  bool as_json = false, timing = false;
  std::string db_path;
  app.add_flag("--json", as_json, "Structured output");
  app.add_flag("--timing", timing, "Report elapsed time");
  app.add_option("--db", db_path, "Residual database file merged over the compiled-in entries");

  std::string type, side = "target", model, expr, known, curve, suite;
  int kappa = 0, k = 1;
  bool normalized = false;
  std::vector<std::string> constraints;

  auto* expand_cmd = app.add_subcommand("expand", "Partition expansion of a multi-singularity type");
  expand_cmd->add_option("--type", type, "Comma-separated types, e.g. A0,A0,A0")->required();
  expand_cmd->add_option("--kappa", kappa, "Codimension of the map")->required();
  expand_cmd->add_option("--side", side, "source or target")->check(CLI::IsMember({"source", "target"}));
  expand_cmd->add_flag("--normalized", normalized, "Divide by the automorphism order");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression or expansion on a map model");
  eval_cmd->add_option("--model", model, "Model name or description")->required();
  auto* expr_opt = eval_cmd->add_option("--expr", expr, "Polynomial in c<j>, s_<I>, fs_<I>");
  auto* type_opt = eval_cmd->add_option("--type", type, "Comma-separated types");
  expr_opt->excludes(type_opt);
  eval_cmd->add_option("--side", side, "source or target")->check(CLI::IsMember({"source", "target"}));
  eval_cmd->add_flag("--normalized", normalized, "Divide by the automorphism order");

  auto* count_cmd = app.add_subcommand("count", "Number of multi-singular points in the target");
  count_cmd->add_option("--model", model, "Model name or description")->required();
  count_cmd->add_option("--type", type, "Comma-separated types")->required();

  auto* porteous_cmd = app.add_subcommand("porteous", "Thom-Porteous determinant");
  porteous_cmd->add_option("--kappa", kappa, "Codimension of the map")->required();
  porteous_cmd->add_option("--k", k, "Size of the determinant")->required();

  auto* extract_cmd = app.add_subcommand("extract", "Residual polynomial from a known expansion");
  extract_cmd->add_option("--type", type, "Comma-separated types")->required();
  extract_cmd->add_option("--kappa", kappa, "Codimension of the map")->required();
  extract_cmd->add_option("--side", side, "source or target")->check(CLI::IsMember({"source", "target"}));
  extract_cmd->add_option("--known", known, "The known Thom polynomial")->required();
  extract_cmd->add_flag("--normalized", normalized, "The known polynomial is normalized");

  auto* interp_cmd = app.add_subcommand("interp", "Solve for a residual polynomial from enumerative counts");
  interp_cmd->add_option("--type", type, "Comma-separated types")->required();
  interp_cmd->add_option("--kappa", kappa, "Codimension of the map")->required();
  interp_cmd->add_option("--constraint", constraints, "model=count, repeatable");

  auto* oracle_cmd = app.add_subcommand("oracle", "Double points of a parametrized plane curve");
  oracle_cmd->add_option("--curve", curve, "\"x(t), y(t)\"")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"table1", "classical", "series", "properties"}));

  auto* model_cmd = app.add_subcommand("model", "Describe a map model");
  model_cmd->add_option("--model", model, "Model name or description")->required();

  std::vector<std::string> argv_store;
  argv_store.push_back("tpcalc");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Report rep;
  try {
    ResidualDB db = ResidualDB::shipped();
    if (!db_path.empty()) db.load(db_path);

    if (*expand_cmd) {
      MultiSingType t = MultiSingType::parse(type, kappa);
      SymbolicExpr e = expand(t, db, parse_side(side), normalized);
      rep.command = "expand";
      rep.inputs = {{"type", t.to_string()}, {"kappa", kappa}, {"side", side}, {"normalized", normalized}};
      rep.result["polynomial"] = e.to_string();
      rep.lines.push_back(e.to_string());
    } else if (*eval_cmd) {
      MapModel f = models::resolve(model);
      SymbolicExpr e;
      if (!expr.empty()) {
        e = parse_expr(expr, f.kappa());
      } else if (!type.empty()) {
        e = expand(MultiSingType::parse(type, f.kappa()), db, parse_side(side), normalized);
      } else {
        throw Error("eval needs --expr or --type");
      }
      GradedClass v = evaluate(e, f);
      rep.command = "eval";
      rep.inputs = {{"model", model}, {"expression", e.to_string()}};
      rep.result["class"] = v.to_string();
      rep.lines.push_back(v.to_string());
      const bool on_source = e.side() == Side::Source;
      const int top = on_source ? f.source().dimension : f.target().dimension;
      if (!v.is_zero() && v.is_homogeneous(top)) {
        Rational integral = on_source ? integrate_on(f.source(), v) : integrate_top(f.target_ring(), v);
        rep.result["integral"] = to_string(integral);
        rep.lines.push_back("integral: " + to_string(integral));
      }
    } else if (*count_cmd) {
      MapModel f = models::resolve(model);
      MultiSingType t = MultiSingType::parse(type, f.kappa());
      Rational n = count_points(f, t, db);
      rep.command = "count";
      rep.inputs = {{"model", model}, {"type", t.to_string()}, {"kappa", f.kappa()}};
      rep.result["count"] = to_string(n);
      rep.lines.push_back(to_string(n));
    } else if (*porteous_cmd) {
      SymbolicExpr e = thom_porteous(kappa, k);
      rep.command = "porteous";
      rep.inputs = {{"kappa", kappa}, {"k", k}};
      rep.result["polynomial"] = e.to_string();
      rep.lines.push_back(e.to_string());
    } else if (*extract_cmd) {
      MultiSingType t = MultiSingType::parse(type, kappa);
      Side s = parse_side(side);
      SymbolicExpr given = parse_expr(known, kappa, s);
      if (normalized) given *= Rational(s == Side::Target ? t.aut_order() : t.aut_order_rest());
      SymbolicExpr R = extract_residual(t, given, s, db);
      std::string record = ResidualDB::format_record(ResidualKey::of(t), R);
      rep.command = "extract";
      rep.inputs = {{"type", t.to_string()}, {"kappa", kappa}, {"side", side}, {"known", known}, {"normalized", normalized}};
      rep.result["residual"] = R.to_string();
      rep.result["record"] = record;
      rep.lines.push_back(record);
    } else if (*interp_cmd) {
      MultiSingType t = MultiSingType::parse(type, kappa);
      std::vector<CountConstraint> cons;
      json cons_json = json::array();
      for (const auto& c : constraints) {
        auto eq = c.rfind('=');
        if (eq == std::string::npos) throw UnknownModel("constraint must read model=count: '" + c + "'");
        std::string name = c.substr(0, eq);
        Rational count;
        try {
          std::string value = c.substr(eq + 1);
          bool negative = !value.empty() && value[0] == '-';
          count = parse_rational(negative ? value.substr(1) : value);
          if (negative) count = -count;
        } catch (const ParseError&) {
          throw UnknownModel("bad count in constraint '" + c + "'");
        }
        cons.push_back({name, models::resolve(name), count});
        cons_json.push_back({{"model", name}, {"count", to_string(count)}});
      }
      LinearSystem sys = assemble_system(t, db, cons);
      rep.command = "interp";
      rep.inputs = {{"type", t.to_string()}, {"kappa", kappa}, {"constraints", cons_json}};
      json rows = json::array();
      for (const auto& r : sys.rows) {
        json coeffs = json::array();
        for (const auto& x : r.coefficients) coeffs.push_back(to_string(x));
        rows.push_back({{"label", r.label}, {"coefficients", coeffs}, {"rhs", to_string(r.rhs)}});
      }
      json unknowns = json::array();
      for (const auto& m : sys.unknowns) {
        SymbolicExpr e(Side::Source, kappa);
        e.add_term(m, 1);
        unknowns.push_back(e.to_string());
      }
      rep.result["unknowns"] = unknowns;
      rep.result["rows"] = rows;
      SolveResult sol = solve_exact(sys);
      if (auto* u = std::get_if<UniqueSolution>(&sol)) {
        SymbolicExpr R = to_residual(sys, *u);
        std::string record = ResidualDB::format_record(ResidualKey::of(t), R);
        rep.result["status"] = "unique";
        rep.result["residual"] = R.to_string();
        rep.result["record"] = record;
        rep.lines.push_back(record);
      } else if (auto* under = std::get_if<Underdetermined>(&sol)) {
        rep.result["status"] = "underdetermined";
        rep.result["rank"] = under->rank;
        json kernel = json::array();
        for (const auto& v : under->kernel) {
          json vec = json::array();
          for (const auto& x : v) vec.push_back(to_string(x));
          kernel.push_back(vec);
        }
        rep.result["kernel"] = kernel;
        rep.lines.push_back("underdetermined: rank " + std::to_string(under->rank) + " of " +
                            std::to_string(sys.unknowns.size()) + " unknowns, kernel dimension " +
                            std::to_string(under->kernel.size()));
      } else {
        const auto& bad = std::get<Inconsistent>(sol);
        rep.result["status"] = "inconsistent";
        rep.result["violated"] = bad.violated;
        std::string labels;
        for (const auto& l : bad.violated) labels += (labels.empty() ? "" : ", ") + l;
        rep.lines.push_back("inconsistent: " + labels);
        rep.exit_code = 1;
      }
    } else if (*oracle_cmd) {
      CurveParam c = parse_curve(curve);
      int degree = c.degree();
      int delta2 = double_point_degree(c);
      int predicted = (degree - 1) * (degree - 2);
      rep.command = "oracle";
      rep.inputs = {{"curve", curve}};
      rep.result = {{"degree", degree}, {"double_point_degree", delta2}, {"predicted", predicted}};
      rep.lines.push_back("degree: " + std::to_string(degree));
      rep.lines.push_back("resultant double-point degree: " + std::to_string(delta2));
      rep.lines.push_back("double-point formula (d-1)(d-2): " + std::to_string(predicted));
    } else if (*verify_cmd) {
      rep = checks_report("verify", run_suite(suite, db));
      rep.inputs = {{"suite", suite}};
    } else if (*model_cmd) {
      MapModel f = models::resolve(model);
      rep.command = "model";
      rep.inputs = {{"model", model}};
      rep.result = {{"source_dimension", f.source().dimension},
                    {"target_dimension", f.target().dimension},
                    {"kappa", f.kappa()},
                    {"quotient_chern", f.quotient_chern().to_string()},
                    {"s_0", f.landweber_novikov(LNIndex()).to_string()}};
      rep.lines.push_back("dim X = " + std::to_string(f.source().dimension) + ", dim Y = " +
                          std::to_string(f.target().dimension) + ", kappa = " + std::to_string(f.kappa()));
      rep.lines.push_back("c(f) = " + f.quotient_chern().to_string());
      rep.lines.push_back("s_0 = " + f.landweber_novikov(LNIndex()).to_string());
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(rep, as_json, timing, elapsed, out);
  return rep.exit_code;
}

}  // namespace tpcalc::cli
