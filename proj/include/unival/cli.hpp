#pragma once

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unival/checks.hpp"
#include "unival/expr.hpp"
#include "unival/tables.hpp"

namespace unival::cli {

/*
 * Command-line front end. Exit codes: 0 success, 1 verification failure
 * or table mismatch, 2 usage / parse / I-O errors.
 */
inline json valuation_to_json(const Valuation& v) {
  json coeffs = json::object();
  for (const auto& [idx, c] : v.coeffs())
    coeffs["mu_" + std::to_string(idx.k) + "_" + std::to_string(idx.q)] = pi_scalar_to_json(c);
  return {{"n", v.n()}, {"coeffs", coeffs}};
}

inline json measure_to_json(const AreaMeasure& m) {
  json coeffs = json::object();
  for (const auto& [idx, c] : m.coeffs())
    coeffs[to_string(idx.kind) + "_" + std::to_string(idx.k) + "_" + std::to_string(idx.q)] =
        pi_scalar_to_json(c);
  return {{"n", m.n()}, {"coeffs", coeffs}};
}

inline json poly_to_json(const GradedPoly& p) {
  const char* aname = p.coords() == Coords::ST ? "s_exp" : "u_exp";
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{aname, e.a}, {"t_exp", e.b}, {"coeff", pi_scalar_to_json(c)}});
  return {{"coords", to_string(p.coords())}, {"terms", terms}};
}

namespace detail {

inline bool emit(const std::string& text, const std::string& path, std::ostream& out,
                 std::ostream& err) {
  if (path.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return true;
  }
  std::ofstream file(path);
  if (!file) {
    err << "error: cannot write to " << path << '\n';
    return false;
  }
  file << text;
  return file.good();
}

inline Coords parse_coords(const std::string& s) {
  if (s == "st") return Coords::ST;
  if (s == "tu") return Coords::TU;
  throw CLI::ValidationError("--coords must be st or tu");
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computer algebra for unitarily invariant valuations and area measures"};
  app.require_subcommand(1);

  // common option storage
  int n = 0, kk = 0;
  std::string coords = "st", format = "text", expr_a, expr_b, family, out_path, filter,
              map_name = "b", kind, diff_against, check_expr;
  int classical_k = -1;

  auto* poly_cmd = app.add_subcommand("poly", "print a generating-function polynomial");
  poly_cmd->add_option("family", family, "fk, pk, or qk")->required();
  poly_cmd->add_option("--k", kk, "index k")->required();
  poly_cmd->add_option("--coords", coords, "st or tu");
  poly_cmd->add_option("--format", format, "text or json");

  auto add_expr_cmd = [&](const char* name, const char* help, int exprs) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--n", n, "ambient complex dimension")->required();
    cmd->add_option("expr_a", expr_a, "first expression")->required();
    if (exprs > 1) cmd->add_option("expr_b", expr_b, "second expression")->required();
    cmd->add_option("--format", format, "text or json");
    return cmd;
  };

  auto* mul_cmd = add_expr_cmd("mul", "Alesker product of two valuation expressions", 2);
  auto* conv_cmd = add_expr_cmd("conv", "convolution of two valuation expressions", 2);
  auto* fourier_cmd = add_expr_cmd("fourier", "Fourier transform of a valuation", 1);
  auto* topoly_cmd = add_expr_cmd("topoly", "canonical polynomial representative", 1);
  auto* evalball_cmd = add_expr_cmd("evalball", "unit-ball value of a top-degree valuation", 1);
  auto* delta_cmd = add_expr_cmd("delta", "first variation of a valuation", 1);
  auto* glob_cmd = app.add_subcommand("glob", "globalize an area measure");
  glob_cmd->add_option("--n", n, "ambient complex dimension")->required();
  glob_cmd->add_option("expr_a", expr_a, "measure expression")->required();
  glob_cmd->add_option("--format", format, "text or json");

  auto* frompoly_cmd = app.add_subcommand("frompoly", "valuation defined by a polynomial");
  frompoly_cmd->add_option("--n", n, "ambient complex dimension")->required();
  frompoly_cmd->add_option("--coords", coords, "st or tu");
  frompoly_cmd->add_option("expr_a", expr_a, "polynomial expression")->required();
  frompoly_cmd->add_option("--format", format, "text or json");

  auto* act_cmd = app.add_subcommand("act", "act by a valuation on an area measure");
  act_cmd->add_option("--n", n, "ambient complex dimension")->required();
  act_cmd->add_option("val", expr_a, "valuation expression")->required();
  act_cmd->add_option("measure", expr_b, "measure expression")->required();
  act_cmd->add_option("--format", format, "text or json");

  auto* bg_cmd = app.add_subcommand("bg", "apply the b or g module map to a valuation");
  bg_cmd->add_option("--n", n, "ambient complex dimension")->required();
  bg_cmd->add_option("--map", map_name, "b or g");
  bg_cmd->add_option("val", expr_a, "valuation expression")->required();
  bg_cmd->add_option("--format", format, "text or json");

  auto* angular_cmd = app.add_subcommand("angular", "angular subspace queries");
  angular_cmd->add_option("--n", n, "ambient complex dimension")->required();
  angular_cmd->add_option("--check", check_expr, "test a measure expression for angularity");
  angular_cmd->add_option("--classical", classical_k,
                          "print the classical angular measure of a degree");

  auto* present_cmd = app.add_subcommand("present", "check the two-generator presentation");
  present_cmd->add_option("--n", n, "ambient complex dimension")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("--n", n, "largest ambient dimension")->required();
  verify_cmd->add_option("--filter", filter, "restrict to checks whose name contains this");
  verify_cmd->add_option("--format", format, "text or json");

  auto* export_cmd = app.add_subcommand("export", "export tables");
  export_cmd->add_option("kind", kind, "t-table, s-table, dims, or basis")->required();
  export_cmd->add_option("--n", n, "ambient complex dimension")->required();
  export_cmd->add_option("--format", format, "json or csv");
  export_cmd->add_option("--out", out_path, "output path (default stdout)");

  auto* oracle_cmd = app.add_subcommand("oracle", "forms-level oracle tables");
  oracle_cmd->add_option("kind", kind, "t-table")->required();
  oracle_cmd->add_option("--n", n, "ambient complex dimension")->required();
  oracle_cmd->add_option("--diff-against", diff_against, "module: compare with the module table");
  oracle_cmd->add_option("--format", format, "json or csv");
  oracle_cmd->add_option("--out", out_path, "output path (default stdout)");

  std::vector<const char*> argv;
  argv.push_back("unival");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (app.got_subcommand(poly_cmd)) {
      Coords c = detail::parse_coords(coords);
      GradedPoly p(Coords::ST);
      if (family == "fk")
        p = fu_f(kk, c);
      else if (family == "pk")
        p = fu_p(kk, c);
      else if (family == "qk")
        p = fu_q(kk, c);
      else {
        err << "usage error: family must be fk, pk, or qk\n";
        return 2;
      }
      out << (format == "json" ? poly_to_json(p).dump(2) : p.to_string()) << '\n';
      return 0;
    }

    auto print_valuation = [&](const Valuation& v) {
      out << (format == "json" ? valuation_to_json(v).dump(2) : v.to_string()) << '\n';
    };
    auto print_measure = [&](const AreaMeasure& m) {
      out << (format == "json" ? measure_to_json(m).dump(2) : m.to_string()) << '\n';
    };

    if (app.got_subcommand(mul_cmd))
      print_valuation(val_product(parse_valuation(expr_a, n), parse_valuation(expr_b, n)));
    else if (app.got_subcommand(conv_cmd))
      print_valuation(val_convolution(parse_valuation(expr_a, n), parse_valuation(expr_b, n)));
    else if (app.got_subcommand(fourier_cmd))
      print_valuation(fourier(parse_valuation(expr_a, n)));
    else if (app.got_subcommand(topoly_cmd)) {
      GradedPoly p = to_poly(parse_valuation(expr_a, n));
      out << (format == "json" ? poly_to_json(p).dump(2) : p.to_string()) << '\n';
    } else if (app.got_subcommand(frompoly_cmd))
      print_valuation(from_poly(n, parse_poly(expr_a, detail::parse_coords(coords))));
    else if (app.got_subcommand(evalball_cmd))
      out << eval_ball_top(parse_valuation(expr_a, n)).to_string() << '\n';
    else if (app.got_subcommand(delta_cmd))
      print_measure(delta_map(parse_valuation(expr_a, n)));
    else if (app.got_subcommand(glob_cmd))
      print_valuation(glob(parse_measure(expr_a, n)));
    else if (app.got_subcommand(act_cmd))
      print_measure(act(parse_valuation(expr_a, n), parse_measure(expr_b, n)));
    else if (app.got_subcommand(bg_cmd)) {
      if (map_name != "b" && map_name != "g") {
        err << "usage error: --map must be b or g\n";
        return 2;
      }
      Valuation v = parse_valuation(expr_a, n);
      print_measure(map_name == "b" ? frak_b(v) : frak_g(v));
    } else if (app.got_subcommand(angular_cmd)) {
      if (!check_expr.empty()) {
        bool ang = is_angular(parse_measure(check_expr, n));
        out << (ang ? "angular" : "not angular") << '\n';
        return 0;
      }
      if (classical_k >= 0) {
        print_measure(classical_delta(n, classical_k));
        return 0;
      }
      for (const auto& idx : angular_basis(n)) out << idx.to_string() << '\n';
    } else if (app.got_subcommand(present_cmd)) {
      PresentationReport report = presentation_check(n);
      out << report.to_string();
      return report.ok() ? 0 : 1;
    } else if (app.got_subcommand(verify_cmd)) {
      std::vector<CheckResult> results = run_verification(n, filter);
      bool all_pass = true;
      if (format == "json") {
        // durations stay out of the serialized report so output is
        // byte-identical across runs
        json rows = json::array();
        for (const auto& r : results) {
          all_pass = all_pass && r.pass;
          rows.push_back(
              {{"name", r.name}, {"n", r.n}, {"pass", r.pass}, {"detail", r.detail}});
        }
        out << json{{"n_max", n}, {"results", rows}}.dump(2) << '\n';
      } else {
        for (const auto& r : results) {
          all_pass = all_pass && r.pass;
          out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
          if (r.n > 0) out << " (n=" << r.n << ")";
          out << "  " << r.detail << '\n';
        }
        out << (all_pass ? "all checks passed" : "CHECK FAILURES PRESENT") << '\n';
      }
      return all_pass ? 0 : 1;
    } else if (app.got_subcommand(export_cmd)) {
      std::string text;
      if (kind == "t-table" || kind == "s-table") {
        StructureTable t = module_table_cached(n, kind[0] == 't' ? 't' : 's');
        text = format == "csv" ? table_to_csv(t) : table_to_json(t).dump(2) + "\n";
      } else if (kind == "dims") {
        text = format == "csv" ? dims_to_csv(n) : dims_to_json(n).dump(2) + "\n";
      } else if (kind == "basis") {
        text = format == "csv" ? basis_to_csv(n) : basis_to_json(n).dump(2) + "\n";
      } else {
        err << "usage error: export kind must be t-table, s-table, dims, or basis\n";
        return 2;
      }
      return detail::emit(text, out_path, out, err) ? 0 : 2;
    } else if (app.got_subcommand(oracle_cmd)) {
      if (kind != "t-table") {
        err << "usage error: the oracle derives only the t-table\n";
        return 2;
      }
      StructureTable oracle = derive_reeb_table(n);
      if (!diff_against.empty()) {
        if (diff_against != "module") {
          err << "usage error: --diff-against only supports \"module\"\n";
          return 2;
        }
        StructureTable module = module_structure_table(n, 't');
        if (oracle == module) {
          out << "oracle and module t-tables are identical (" << oracle.entries.size()
              << " entries)\n";
          return 0;
        }
        out << "tables differ\n";
        for (const auto& e : oracle.entries) {
          bool found = false;
          for (const auto& f : module.entries)
            if (f.from == e.from && f.to == e.to) {
              found = true;
              if (!(f.coeff == e.coeff))
                out << "  " << e.from.to_string() << " -> " << e.to.to_string() << ": oracle "
                    << e.coeff.to_string() << " vs module " << f.coeff.to_string() << '\n';
            }
          if (!found)
            out << "  " << e.from.to_string() << " -> " << e.to.to_string()
                << ": missing from module table\n";
        }
        return 1;
      }
      std::string text =
          format == "csv" ? table_to_csv(oracle) : table_to_json(oracle).dump(2) + "\n";
      return detail::emit(text, out_path, out, err) ? 0 : 2;
    }
    return 0;
  } catch (const ExprError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

} // namespace unival::cli
