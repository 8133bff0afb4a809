#include "homocurv/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace homocurv {

namespace {

Json num(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

Json vec_json(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

Json ints_json(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

Mat matrix_from_rows(const Json& rows, const char* what) {
  if (!rows.is_array() || rows.empty()) throw ValidationError(std::string(what) + ": expected a non-empty list of rows");
  const size_t nc = rows.front().size();
  Mat m(rows.size(), nc);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != nc) throw ValidationError(std::string(what) + ": ragged rows");
    for (size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c].get<double>();
  }
  return m;
}

Json matrix_rows(const Mat& m) {
  Json a = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(num(m(r, c)));
    a.push_back(row);
  }
  return a;
}

Json subalgebra_json(const SubalgebraVerdict& v) {
  return Json{{"label", v.label}, {"blocks", ints_json(v.blocks)}, {"dim", v.dim}, {"subalgebra", v.subalgebra},
              {"subalgebra_residual", v.subalgebra_residual}, {"toral", v.toral}, {"toral_residual", v.toral_residual}};
}

Json violation_json(const ConditionViolation& v) {
  return Json{{"triple", {v.triple[0], v.triple[1], v.triple[2]}}, {"bracket", v.bracket}, {"p_kj", num(v.p_kj)},
              {"base", v.base}};
}

Json limit_json(const AsymptoticLimit& l) {
  return Json{{"limit", l.describe()}, {"leading_exponent", l.leading_exponent}};
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
}

LieAlgebra algebra_from_json(const Json& j) {
  try {
    std::string name = j.value("name", std::string("unnamed"));
    int dim = j.at("dim").get<int>();
    std::vector<BracketEntry> entries;
    for (const auto& e : j.value("brackets", Json::array()))
      entries.push_back({e.at("i").get<int>(), e.at("j").get<int>(), e.at("k").get<int>(), e.at("c").get<double>()});
    return LieAlgebra(name, dim, entries);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed Lie algebra spec: ") + e.what());
  }
}

Json algebra_to_json(const LieAlgebra& g) {
  Json br = Json::array();
  for (const auto& e : g.entries()) br.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"c", e.c}});
  return Json{{"name", g.name()}, {"dim", g.dim()}, {"brackets", br}};
}

HomogeneousSpace space_from_json(const Json& j, const DecomposeOptions& opts_in) {
  LieAlgebra alg = algebra_from_json(j);
  const int n = alg.dim();
  try {
    Subspace h = Subspace::zero(n, "h");
    if (j.contains("isotropy") && !j["isotropy"].empty()) {
      Mat rows = matrix_from_rows(j["isotropy"], "isotropy");
      if (rows.cols() != n) throw ValidationError("isotropy vectors have the wrong length");
      h = Subspace::from_vectors(rows.transpose(), "h");
    }
    DecomposeOptions opts = opts_in;
    for (const auto& g : j.value("component_generators", Json::array()))
      opts.component_generators.push_back(matrix_from_rows(g, "component generator"));
    bool pi1 = j.value("pi1_finite", false);
    std::string name = j.value("name", std::string("unnamed"));
    if (j.contains("decomposition")) {
      const Json& d = j["decomposition"];
      Mat rows = matrix_from_rows(d.at("basis"), "decomposition basis");
      if (rows.cols() != n) throw ValidationError("decomposition vectors have the wrong length");
      Mat basis = rows.transpose();
      std::vector<int> dims = d.at("block_dims").get<std::vector<int>>();
      return make_space(name, std::move(alg), std::move(h), &basis, &dims, opts, pi1);
    }
    return make_space(name, std::move(alg), std::move(h), nullptr, nullptr, opts, pi1);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed space spec: ") + e.what());
  }
}

CatalogEntry load_space(const std::string& ref, const DecomposeOptions& opts) {
  for (const auto& n : catalog_names())
    if (n == ref) return catalog_entry(ref);
  CatalogEntry e;
  e.space = space_from_json(read_json_file(ref), opts);
  return e;
}

Json validation_to_json(const ValidationReport& r) {
  return Json{{"valid", r.valid},
              {"antisymmetry_residual", r.antisymmetry_residual},
              {"jacobi_residual", r.jacobi_residual},
              {"invariance_residual", r.invariance_residual},
              {"failures", r.failures}};
}

Json decomposition_to_json(const Decomposition& d) {
  return Json{{"basis", matrix_rows(d.basis.transpose())},
              {"block_dims", ints_json(d.block_dims)},
              {"casimir", vec_json(d.casimir)},
              {"provenance", {{"seed", d.seed}, {"tolerance", d.tol}}},
              {"notes", d.notes}};
}

Json coefficients_to_json(const CoefficientTable& t) {
  Json tr = Json::array();
  for (int i = 0; i < t.size(); ++i)
    for (int j = i; j < t.size(); ++j)
      for (int k = j; k < t.size(); ++k)
        if (std::abs(t.t(i, j, k)) > 1e-12) tr.push_back({{"i", i}, {"j", j}, {"k", k}, {"value", t.t(i, j, k)}});
  return Json{{"dims", ints_json(t.dims)}, {"b", vec_json(t.b)},        {"c", vec_json(t.c)},
              {"triples", tr},            {"b_gh", t.b_gh()},           {"dbc_residual", t.dbc_residual},
              {"block_scalar_residual", t.block_scalar_residual}};
}

CoefficientTable coefficients_from_json(const Json& j) {
  try {
    CoefficientTable t;
    t.dims = j.at("dims").get<std::vector<int>>();
    t.b = j.at("b").get<std::vector<double>>();
    t.c = j.at("c").get<std::vector<double>>();
    const int l = t.size();
    if (static_cast<int>(t.b.size()) != l || static_cast<int>(t.c.size()) != l) throw ValidationError("coefficient lists differ in length");
    t.triples.assign(static_cast<size_t>(l) * l * l, 0.0);
    for (const auto& e : j.value("triples", Json::array())) {
      int a = e.at("i").get<int>(), b = e.at("j").get<int>(), c = e.at("k").get<int>();
      double v = e.at("value").get<double>();
      if (a < 0 || c >= l || !(a <= b && b <= c)) throw ValidationError("triples must satisfy 0 <= i <= j <= k < l");
      if (v < 0) throw ValidationError("triple coefficients are nonnegative");
      int p[3] = {a, b, c};
      std::sort(p, p + 3);
      do {
        t.t(p[0], p[1], p[2]) = v;
      } while (std::next_permutation(p, p + 3));
    }
    t.recompute_dbc_residual();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed coefficient table: ") + e.what());
  }
}

GeneralMetric metric_from_json(const Json& j, const Decomposition& d) {
  try {
    if (j.contains("lambdas")) {
      DiagonalMetric g{j["lambdas"].get<std::vector<double>>(), d.block_dims};
      g.check();
      return to_general(g, d);
    }
    if (j.contains("A")) {
      GeneralMetric g{d.basis, matrix_from_rows(j["A"], "metric")};
      g.check();
      return g;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed metric: ") + e.what());
  }
  throw ValidationError("metric needs \"lambdas\" or \"A\"");
}

SequenceSpec sequence_from_json(const Json& j) {
  try {
    SequenceSpec s;
    std::string model = j.value("model", std::string("power"));
    s.unit_volume = j.value("unit_volume", true);
    if (model == "power") {
      s.model = SequenceSpec::Model::Power;
      for (const auto& b : j.at("blocks")) s.blocks.push_back({b.at("c").get<double>(), b.at("a").get<double>()});
      if (s.blocks.empty()) throw ValidationError("empty sequence");
    } else if (model == "samples") {
      s.model = SequenceSpec::Model::Samples;
      s.rows = j.at("rows").get<std::vector<std::vector<double>>>();
      if (s.rows.empty()) throw ValidationError("empty sample table");
    } else {
      throw ValidationError("unknown sequence model: " + model);
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed sequence: ") + e.what());
  }
}

Json sequence_to_json(const SequenceSpec& s) {
  if (s.model == SequenceSpec::Model::Samples) return Json{{"model", "samples"}, {"rows", s.rows}, {"unit_volume", s.unit_volume}};
  Json b = Json::array();
  for (const auto& x : s.blocks) b.push_back({{"c", x.c}, {"a", x.a}});
  return Json{{"model", "power"}, {"blocks", b}, {"unit_volume", s.unit_volume}};
}

std::vector<double> direction_from_json(const Json& j) {
  try {
    if (j.is_array()) return j.get<std::vector<double>>();
    return j.at("v").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed direction: ") + e.what());
  }
}

Json curvature_to_json(const CurvatureReport& r) {
  return Json{{"ric", vec_json(r.ric)},
              {"scal", num(r.scal)},
              {"ric_norm", num(r.ric_norm)},
              {"traceless_ric_norm", num(r.traceless_ric_norm)},
              {"rm_frobenius", num(r.rm_frobenius)},
              {"rm_over_ric", num(r.rm_over_ric)}};
}

Json sequence_report_to_json(const SequenceReport& r) {
  Json classes = Json::array();
  for (const auto& s : r.classes.sets) classes.push_back(ints_json(s));
  Json flag = Json::array();
  for (const auto& f : r.flag) flag.push_back(subalgebra_json(f));
  Json cb = Json::array(), eb = Json::array();
  for (const auto& v : r.condition_b_violations) cb.push_back(violation_json(v));
  for (const auto& v : r.extended_b_violations) eb.push_back(violation_json(v));
  Json ric = Json::array();
  for (const auto& l : r.ric_limits) ric.push_back(l.describe());
  Json aijk = Json::array();
  for (const auto& a : r.a_ijk) aijk.push_back({{"triple", {a.triple[0], a.triple[1], a.triple[2]}}, {"limit", a.limit}});
  Json out{{"v_inf", vec_json(r.v_inf)},
           {"classes", classes},
           {"p", r.p},
           {"I_sh", ints_json(r.i_sh)},
           {"I_gb", ints_json(r.i_gb)},
           {"p_inf", matrix_rows(r.p_inf)},
           {"flag", flag},
           {"l_prime", subalgebra_json(r.l_prime)},
           {"l", subalgebra_json(r.l)},
           {"conditionA", {{"holds", r.condition_a}, {"note", r.condition_a_note}}},
           {"conditionB", {{"holds", r.condition_b}, {"violations", cb}}},
           {"extendedB_on_Igb", {{"holds", r.extended_b}, {"violations", eb}}},
           {"scal_limit", limit_json(r.scal_limit)},
           {"ric_limits", ric},
           {"a_ijk", aijk},
           {"notes", r.notes}};
  if (r.has_extended_b_witness) out["extendedB_on_Igb"]["witness"] = violation_json(r.extended_b_witness);
  return out;
}

Json collapse_report_to_json(const CollapseReport& r) {
  return Json{{"isotropy_part", r.isotropy_part}, {"mu_h", r.mu_h}, {"mu_m", r.mu_m}, {"total", r.total}};
}

Json collapse_limit_to_json(const CollapseLimit& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms)
    terms.push_back({{"kind", t.kind}, {"indices", ints_json(t.indices)}, {"coef", t.coef}, {"exponent", t.exponent}});
  Json samples = Json::array();
  for (const auto& s : r.samples) samples.push_back({s.first, num(s.second)});
  Json out{{"verdict", r.verdict}, {"dominant_exponent", num(r.dominant_exponent)}, {"terms", terms}};
  if (!r.samples.empty()) out["samples"] = samples;
  return out;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string trajectory_csv(const ScanResult& scan, const std::string& axis) {
  std::string out = axis + ",scal,ric_norm,traceless_ric_norm,rm_norm\n";
  for (const auto& r : scan.rows) {
    out += format_double(r.t) + "," + format_double(r.scal) + "," + format_double(r.ric_norm) + "," +
           format_double(r.traceless_ric_norm) + "," + format_double(r.rm_norm) + "\n";
  }
  return out;
}

std::string matrix_csv(const Mat& m) {
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out += ",";
      out += format_double(m(r, c));
    }
    out += "\n";
  }
  return out;
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw ValidationError("grid must look like start:stop:count");
  auto parse = [](const std::string& s) {
    double x = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw ValidationError("bad number in grid: " + s);
    return x;
  };
  double a = parse(parts[0]), b = parse(parts[1]);
  double cnt = parse(parts[2]);
  if (cnt < 1 || cnt != std::floor(cnt)) throw ValidationError("grid count must be a positive integer");
  int n = static_cast<int>(cnt);
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
  return out;
}

}  // namespace homocurv
