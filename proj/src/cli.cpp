#include "homocurv/cli.hpp"

#include "homocurv/goldens.hpp"
#include "homocurv/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <string>

namespace homocurv {

namespace {

struct Globals {
  double tol = kDefaultTol;
  double cluster_tol = kDefaultClusterTol;
  std::uint64_t seed = 0x5eed;

  DecomposeOptions decompose_options() const {
    DecomposeOptions o;
    o.seed = seed;
    o.tol = tol;
    return o;
  }
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot write " + path);
  f << text;
}

double parse_value(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    double x = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return x;
  } catch (const std::exception&) {
    throw ValidationError("bad " + what + ": " + s);
  }
}

// "n=<value>" along the catalog sequence, "t=<value>" along the catalog direction, or a JSON file.
struct ResolvedMetric {
  GeneralMetric general;
  std::optional<DiagonalMetric> diagonal;
};

ResolvedMetric resolve_metric(const CatalogEntry& e, const std::string& ref) {
  const auto& s = e.space;
  ResolvedMetric r;
  if (ref.rfind("n=", 0) == 0) {
    if (!e.sequence) throw ValidationError("space has no built-in sequence for " + ref);
    r.diagonal = e.sequence->at(parse_value(ref.substr(2), "n"), s.dims());
  } else if (ref.rfind("t=", 0) == 0) {
    if (!e.direction) throw ValidationError("space has no built-in direction for " + ref);
    r.diagonal = geodesic(*e.direction, s.dims(), parse_value(ref.substr(2), "t"));
  } else {
    Json j = read_json_file(ref);
    if (j.contains("lambdas")) {
      DiagonalMetric g{j["lambdas"].get<std::vector<double>>(), s.dims()};
      g.check();
      r.diagonal = g;
    } else {
      r.general = metric_from_json(j, s.decomposition);
      return r;
    }
  }
  r.general = to_general(*r.diagonal, s.decomposition);
  return r;
}

SequenceSpec resolve_sequence(const CatalogEntry& e, const std::string& ref) {
  if (ref == "default") {
    if (!e.sequence) throw ValidationError("space has no built-in sequence");
    return *e.sequence;
  }
  return sequence_from_json(read_json_file(ref));
}

std::vector<double> resolve_direction(const CatalogEntry& e, const std::string& ref) {
  if (ref == "default") {
    if (!e.direction) throw ValidationError("space has no built-in direction");
    return *e.direction;
  }
  return direction_from_json(read_json_file(ref));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int error_exit(std::ostream& err, const char* kind, const std::string& msg, int code) {
  err << Json{{"error", kind}, {"message", msg}, {"exit_code", code}}.dump() << "\n";
  return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvature and asymptotics of invariant metrics on compact homogeneous spaces", "homocurv"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--tol", g.tol, "Numerical tolerance")->check(CLI::PositiveNumber);
  app.add_option("--cluster-tol", g.cluster_tol, "Tolerance for grouping equal eigenvalues")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized steps");

  std::string spec, metric_ref, csv_path, seq_ref = "default", dir_ref = "default", grid = "0:200:401";
  bool most_shrinking = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check Lie algebra axioms and the isotropy data");
  validate_cmd->add_option("spec", spec, "Catalog name or JSON file")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Split m into irreducible isotropy modules");
  decompose_cmd->add_option("spec", spec)->required();

  auto* coeffs_cmd = app.add_subcommand("coeffs", "Structure coefficients b_i, c_i, [ijk]");
  coeffs_cmd->add_option("spec", spec)->required();

  auto* curv_cmd = app.add_subcommand("curvature", "Curvature of one invariant metric");
  curv_cmd->add_option("spec", spec)->required();
  curv_cmd->add_option("--metric", metric_ref, "JSON file, n=<value> or t=<value>")->required();
  curv_cmd->add_option("--operator-csv", csv_path, "Write the curvature operator matrix");

  auto* scan_cmd = app.add_subcommand("geodesic-scan", "Curvature along a geodesic ray");
  scan_cmd->add_option("spec", spec)->required();
  scan_cmd->add_option("--direction", dir_ref, "JSON file or 'default'");
  scan_cmd->add_option("--t", grid, "start:stop:count");
  scan_cmd->add_option("--csv", csv_path, "Write the trajectory here instead of stdout");

  auto* classify_cmd = app.add_subcommand("classify", "Asymptotic report for a diverging sequence");
  classify_cmd->add_option("spec", spec)->required();
  classify_cmd->add_option("--sequence", seq_ref, "JSON file or 'default'");

  auto* collapse_cmd = app.add_subcommand("collapse", "Algebraic collapse of a sequence");
  collapse_cmd->add_option("spec", spec)->required();
  collapse_cmd->add_option("--sequence", seq_ref, "JSON file or 'default'");
  collapse_cmd->add_flag("--most-shrinking", most_shrinking, "Normalize the smallest eigenvalue to 1 first");

  auto* goldens_cmd = app.add_subcommand("goldens", "Run the reference checks and print a pass/fail table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return error_exit(err, "usage", e.what(), 1);
  }

  try {
    if (goldens_cmd->parsed()) {
      auto checks = acceptance_checks();
      auto ex = example_checks();
      checks.insert(checks.end(), ex.begin(), ex.end());
      out << golden_table(checks);
      for (const auto& c : checks)
        if (!c.pass) return 2;
      return 0;
    }

    if (validate_cmd->parsed()) {
      bool builtin = false;
      for (const auto& n : catalog_names()) builtin = builtin || n == spec;
      LieAlgebra alg = builtin ? catalog_entry(spec).space.algebra : algebra_from_json(read_json_file(spec));
      ValidationReport rep = validate(alg, g.tol);
      Json j{{"algebra", validation_to_json(rep)}};
      if (!rep.valid) {
        emit(out, j);
        return error_exit(err, "validation", "Lie algebra axioms fail", 1);
      }
      auto e = load_space(spec, g.decompose_options());
      j["space"] = {{"name", e.space.name},
                    {"dim_g", e.space.algebra.dim()},
                    {"dim_h", e.space.isotropy.dim()},
                    {"block_dims", e.space.dims()},
                    {"pi1_finite", e.space.pi1_finite},
                    {"coefficients_consistent", e.space.coeffs.consistent(g.tol)}};
      emit(out, j);
      return 0;
    }

    auto entry = load_space(spec, g.decompose_options());
    const auto& s = entry.space;

    if (decompose_cmd->parsed()) {
      DecomposeOptions o = g.decompose_options();
      o.component_generators = s.component_generators;
      emit(out, decomposition_to_json(decompose(s.algebra, s.isotropy, o)));
      return 0;
    }
    if (coeffs_cmd->parsed()) {
      if (!s.coeffs.consistent(g.tol)) {
        emit(out, coefficients_to_json(s.coeffs));
        return error_exit(err, "tolerance", "dbc identity residual above tolerance", 2);
      }
      emit(out, coefficients_to_json(s.coeffs));
      return 0;
    }
    if (curv_cmd->parsed()) {
      auto m = resolve_metric(entry, metric_ref);
      CurvatureReport rep = m.diagonal ? curvature_report(s.algebra, s.isotropy, s.decomposition, *m.diagonal)
                                       : curvature_report(s.algebra, s.isotropy, m.general);
      Json j = curvature_to_json(rep);
      if (m.diagonal) {
        j["lambdas"] = m.diagonal->lambdas;
        j["scal_closed_form"] = scalar_curvature(s.coeffs, *m.diagonal);
        j["ric_closed_form"] = ricci_diagonal(s.coeffs, *m.diagonal);
      }
      if (!csv_path.empty()) write_file(csv_path, matrix_csv(rep.rm_matrix));
      emit(out, j);
      return 0;
    }
    if (scan_cmd->parsed()) {
      auto v = resolve_direction(entry, dir_ref);
      auto scan = geodesic_scan(s, v, parse_grid(grid));
      std::string csv = trajectory_csv(scan);
      Json tails{{"scal", scan.scal_tail}, {"ric_norm", scan.ric_tail}, {"rm_norm", scan.rm_tail}};
      if (csv_path.empty()) {
        out << csv;
        err << Json{{"tails", tails}}.dump() << "\n";
      } else {
        write_file(csv_path, csv);
        emit(out, Json{{"rows", scan.rows.size()}, {"tails", tails}, {"csv", csv_path}});
      }
      return 0;
    }
    if (classify_cmd->parsed()) {
      auto seq = resolve_sequence(entry, seq_ref);
      emit(out, sequence_report_to_json(classify_sequence(seq, s, g.tol, g.cluster_tol)));
      return 0;
    }
    if (collapse_cmd->parsed()) {
      auto seq = resolve_sequence(entry, seq_ref);
      if (most_shrinking) seq = normalize_most_shrinking(seq);
      Json j = collapse_limit_to_json(collapse_limit(seq, s.coeffs));
      j["isotropy_part"] = isotropy_bracket_part(s);
      j["pi1_finite"] = s.pi1_finite;
      emit(out, j);
      return 0;
    }
  } catch (const ValidationError& e) {
    return error_exit(err, "validation", e.what(), 1);
  } catch (const ToleranceError& e) {
    return error_exit(err, "tolerance", e.what(), 2);
  } catch (const std::exception& e) {
    return error_exit(err, "validation", e.what(), 1);
  }
  return error_exit(err, "usage", "no subcommand", 1);
}

}  // namespace homocurv
