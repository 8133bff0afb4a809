#include "homocurv/asymptotics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <thread>

namespace homocurv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<int> blocks_of_classes(const IndexPartition& part, int upto) {
  std::vector<int> out;
  for (int s = 0; s < upto; ++s) out.insert(out.end(), part.sets[s].begin(), part.sets[s].end());
  std::sort(out.begin(), out.end());
  return out;
}

bool member(const std::vector<int>& set, int x) { return std::find(set.begin(), set.end(), x) != set.end(); }

SubalgebraVerdict verdict_for(const HomogeneousSpace& s, const std::vector<int>& blocks, std::string label, double tol) {
  SubalgebraVerdict v;
  v.label = std::move(label);
  v.blocks = blocks;
  Subspace k = s.subalgebra_from_blocks(blocks, v.label);
  v.dim = k.dim();
  Residual sub = is_subalgebra(s.algebra, k, tol);
  v.subalgebra = sub.holds;
  v.subalgebra_residual = sub.residual;
  Residual tor = is_toral(s.algebra, s.isotropy, k, tol);
  v.toral = tor.holds;
  v.toral_residual = tor.residual;
  return v;
}

double block_sum(const CoefficientTable& t, const std::vector<int>& a, const std::vector<int>& b,
                 const std::vector<int>& c) {
  double s = 0.0;
  for (int i : a)
    for (int j : b)
      for (int k : c) s += t.t(i, j, k);
  return s;
}

}  // namespace

int IndexPartition::class_of(int index) const {
  for (int s = 0; s < num_classes(); ++s)
    if (member(sets[s], index)) return s;
  throw std::out_of_range("index not in partition");
}

IndexPartition partition(const std::vector<double>& v, double cluster_tol) {
  if (v.empty()) throw ValidationError("empty direction");
  double vmax = 0.0;
  for (double x : v) vmax = std::max(vmax, std::abs(x));
  if (vmax == 0.0) throw ValidationError("zero direction");
  IndexPartition p;
  p.order.resize(v.size());
  std::iota(p.order.begin(), p.order.end(), 0);
  std::stable_sort(p.order.begin(), p.order.end(), [&](int a, int b) { return v[a] < v[b]; });
  double thr = cluster_tol * std::max(1.0, vmax);
  for (int idx : p.order) {
    if (p.sets.empty() || v[idx] - p.values.back() >= thr) {
      p.values.push_back(v[idx]);
      p.sets.push_back({});
    }
    p.sets.back().push_back(idx);
  }
  p.r.push_back(0);
  for (auto& s : p.sets) {
    std::sort(s.begin(), s.end());
    p.r.push_back(p.r.back() + static_cast<int>(s.size()));
  }
  p.single_class = p.sets.size() == 1;
  return p;
}

SubmersionVerdict is_submersion_direction(const std::vector<double>& v, const CoefficientTable& t, double tol) {
  if (static_cast<int>(v.size()) != t.size()) throw ValidationError("direction does not match the coefficient table");
  double vmin = *std::min_element(v.begin(), v.end());
  SubmersionVerdict out;
  const int l = t.size();
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      for (int k = 0; k < l; ++k)
        if (t.t(i, j, k) > tol && v[i] - v[j] - v[k] + vmin > tol) out.witnesses.push_back({i, j, k});
  out.holds = out.witnesses.empty();
  return out;
}

std::vector<std::vector<double>> sigma_grid(const std::vector<int>& dims, int resolution) {
  const int l = static_cast<int>(dims.size());
  if (l < 2) return {};
  Vec u(l);
  for (int i = 0; i < l; ++i) u(i) = std::sqrt(static_cast<double>(dims[i]));
  Mat b = complement_basis(u);  // l x (l-1)
  std::vector<Vec> sphere;
  const double pi = std::acos(-1.0);
  resolution = std::max(resolution, 4);
  if (l == 2) {
    sphere = {Vec::Constant(1, 1.0), Vec::Constant(1, -1.0)};
  } else if (l == 3) {
    for (int k = 0; k < resolution; ++k) {
      double th = 2.0 * pi * k / resolution;
      Vec s(2);
      s << std::cos(th), std::sin(th);
      sphere.push_back(s);
    }
  } else if (l == 4) {
    int nt = resolution / 2;
    for (int a = 0; a <= nt; ++a) {
      double th = pi * a / nt;
      int nphi = (a == 0 || a == nt) ? 1 : resolution;
      for (int c = 0; c < nphi; ++c) {
        double ph = 2.0 * pi * c / resolution;
        Vec s(3);
        s << std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th);
        sphere.push_back(s);
      }
    }
  } else {
    std::mt19937_64 rng(0x5167);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int k = 0; k < resolution * resolution; ++k) {
      Vec s(l - 1);
      for (int i = 0; i < l - 1; ++i) s(i) = gauss(rng);
      sphere.push_back(s.normalized());
    }
  }
  std::vector<std::vector<double>> out;
  for (const auto& s : sphere) {
    Vec y = b * s;
    std::vector<double> v(l);
    for (int i = 0; i < l; ++i) v[i] = y(i) / u(i);
    out.push_back(v);
  }
  return out;
}

std::vector<std::vector<double>> submersion_grid_search(const CoefficientTable& t, int resolution, double tol) {
  std::vector<std::vector<double>> out;
  for (const auto& v : sigma_grid(t.dims, resolution)) {
    if (!is_submersion_direction(v, t, tol).holds) continue;
    bool dup = false;
    for (const auto& w : out) {
      double d = 0.0;
      for (size_t i = 0; i < v.size(); ++i) d = std::max(d, std::abs(v[i] - w[i]));
      if (d < 1e-12) dup = true;
    }
    if (!dup) out.push_back(v);
  }
  return out;
}

InducedSubalgebra induced_subalgebra(const std::vector<double>& v, const HomogeneousSpace& s, double tol,
                                     double cluster_tol) {
  IndexPartition part = partition(v, cluster_tol);
  if (part.single_class) throw ValidationError("lowest eigenvalue class is everything");
  if (!is_submersion_direction(v, s.coeffs, tol).holds) throw ValidationError("not a submersion direction");
  InducedSubalgebra out;
  out.blocks = part.sets[0];
  out.k = s.subalgebra_from_blocks(out.blocks, "k_1");
  Residual sub = is_subalgebra(s.algebra, out.k, tol);
  out.subalgebra_residual = sub.residual;
  if (!sub.holds) throw ToleranceError("induced subspace is not a subalgebra");
  for (int a = 0; a < part.num_classes(); ++a)
    for (int b = 0; b < part.num_classes(); ++b)
      if (a != b) out.crucial_residual = std::max(out.crucial_residual, block_sum(s.coeffs, part.sets[0], part.sets[a], part.sets[b]));
  out.toral = is_toral(s.algebra, s.isotropy, out.k, tol).holds;
  return out;
}

FlagCheck flag_check(const std::vector<double>& v, const std::vector<Subspace>& flag, const HomogeneousSpace& s,
                     double tol, double cluster_tol) {
  if (flag.empty()) throw ValidationError("empty flag");
  for (size_t q = 0; q < flag.size(); ++q) {
    if (!contains(flag[q], s.isotropy, 1e-8)) throw ValidationError("flag member does not contain the isotropy");
    if (q > 0 && (!contains(flag[q], flag[q - 1], 1e-8) || flag[q].dim() <= flag[q - 1].dim()))
      throw ValidationError("flag is not strictly nested");
  }
  if (flag.back().dim() >= s.algebra.dim()) throw ValidationError("flag member equals the whole algebra");
  IndexPartition part = partition(v, cluster_tol);
  FlagCheck out;
  out.condition_i = true;
  for (size_t q = 0; q < flag.size(); ++q) {
    int upto = static_cast<int>(q) + 1;
    if (upto >= part.num_classes()) {
      out.condition_i = false;
      out.failures.push_back("flag longer than the eigenvalue classes allow");
      break;
    }
    Subspace expected = s.subalgebra_from_blocks(blocks_of_classes(part, upto));
    if (!same_subspace(flag[q], expected, 1e-8)) {
      out.condition_i = false;
      out.failures.push_back("k_" + std::to_string(upto) + " is not h plus the first " + std::to_string(upto) + " classes");
    }
  }
  out.condition_ii = true;
  const int nc = part.num_classes();
  for (size_t q = 0; q < flag.size(); ++q) {
    const int qq = static_cast<int>(q);
    for (int a = qq; a < nc; ++a)
      for (int b = qq; b < nc; ++b)
        for (int c = qq; c < nc; ++c) {
          if (block_sum(s.coeffs, part.sets[a], part.sets[b], part.sets[c]) <= tol) continue;
          double ex = part.values[a] - part.values[b] - part.values[c] + part.values[qq];
          if (ex > tol) {
            out.condition_ii = false;
            out.violations.push_back({qq, a, b, c, ex});
          }
        }
  }
  out.holds = out.condition_i && out.condition_ii;
  if (out.holds) {
    for (double t : {0.5, 2.0}) {
      GeneralMetric g = to_general(geodesic(v, s.dims(), t), s.decomposition);
      for (const auto& k : flag) {
        SubmersionCheck sc = is_submersion_metric(s.algebra, s.isotropy, g, k, 1e-8);
        out.submersion_residual = std::max({out.submersion_residual, sc.orthogonality_residual, sc.equivariance_residual});
        if (!sc.holds) {
          out.holds = false;
          out.failures.push_back("sampled geodesic metric is not a submersion metric");
        }
      }
    }
  }
  return out;
}

namespace {

// scal(gamma_v(t)) = sum_e coef_e exp(t e), equal exponents merged so that cancelling terms cancel exactly
PowerSum geodesic_exponentials(const std::vector<double>& v, const CoefficientTable& t) {
  const int l = t.size();
  if (static_cast<int>(v.size()) != l) throw ValidationError("direction does not match the coefficient table");
  PowerSum terms;
  for (int i = 0; i < l; ++i) {
    terms.add(0.5 * t.dims[i] * t.b[i], -v[i]);
    for (int j = 0; j < l; ++j)
      for (int k = 0; k < l; ++k)
        if (t.t(i, j, k) != 0.0) terms.add(-0.25 * t.t(i, j, k), v[i] - v[j] - v[k]);
  }
  return terms.simplified(1e-12, 1e-12);
}

}  // namespace

double scal_along_geodesic(const std::vector<double>& v, const CoefficientTable& t, double time) {
  if (static_cast<int>(v.size()) != t.size()) throw ValidationError("direction does not match the coefficient table");
  bool representable = true;
  for (double x : v) {
    double lam = std::exp(time * x);
    representable = representable && std::isnormal(lam);
  }
  if (representable) return scalar_curvature(t, geodesic(v, t.dims, time));
  const PowerSum terms = geodesic_exponentials(v, t);
  double s = 0.0;
  for (const auto& term : terms.terms()) s += term.coef * std::exp(time * term.exponent);
  return s;
}

double scal_along_geodesic_derivative(const std::vector<double>& v, const CoefficientTable& t, double time) {
  const PowerSum terms = geodesic_exponentials(v, t);
  double d = 0.0;
  for (const auto& term : terms.terms())
    d += term.coef * term.exponent * std::exp(time * term.exponent);
  return d;
}

std::string classify_tail(const std::vector<double>& values) {
  if (values.size() < 4) return "insufficient";
  size_t len = std::max<size_t>(2, values.size() / 4);
  std::vector<double> tail(values.end() - static_cast<long>(len), values.end());
  for (double x : tail)
    if (!std::isfinite(x)) return "diverges";
  double first = std::abs(tail.front()), last = std::abs(tail.back());
  double peak = 0.0;
  for (double x : tail) peak = std::max(peak, std::abs(x));
  if (last > 10.0 * std::max(1.0, first) && last >= peak) return "diverges";
  if (last < 1e-6 && last <= first) return "vanishes";
  return "bounded";
}

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("HOMOCURV_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && n >= 1) return static_cast<int>(std::min<long>(n, 256));
  }
  return hw;
}

ScanResult geodesic_scan(const HomogeneousSpace& s, const std::vector<double>& v, const std::vector<double>& ts,
                         int threads) {
  if (!in_sigma(v, s.dims(), 1e-8)) throw ValidationError("direction is not in Sigma");
  ScanResult out;
  out.rows.resize(ts.size());
  int nw = threads > 0 ? threads : worker_count();
  nw = std::max(1, std::min<int>(nw, static_cast<int>(ts.size())));
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i = next++; i < ts.size(); i = next++) {
      TrajectoryRow row;
      row.t = ts[i];
      DiagonalMetric g = geodesic(v, s.dims(), ts[i]);
      CurvatureReport rep = curvature_report(s.algebra, s.isotropy, s.decomposition, g);
      // closed forms keep full precision when the eigenvalues spread far apart
      row.scal = scalar_curvature(s.coeffs, g);
      row.ric_norm = rep.ric_norm;
      row.traceless_ric_norm = rep.traceless_ric_norm;
      row.rm_norm = rep.rm_frobenius;
      row.ric = ricci_diagonal(s.coeffs, g);
      out.rows[i] = std::move(row);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < nw; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  std::vector<double> sc, rn, rm;
  for (const auto& r : out.rows) {
    sc.push_back(r.scal);
    rn.push_back(r.ric_norm);
    rm.push_back(r.rm_norm);
  }
  out.scal_tail = classify_tail(sc);
  out.ric_tail = classify_tail(rn);
  out.rm_tail = classify_tail(rm);
  return out;
}

int SequenceSpec::size() const {
  if (model == Model::Power) return static_cast<int>(blocks.size());
  return rows.empty() ? 0 : static_cast<int>(rows.front().size()) - 1;
}

DiagonalMetric SequenceSpec::at(double n, const std::vector<int>& dims) const {
  if (size() != static_cast<int>(dims.size())) throw ValidationError("sequence does not match the decomposition");
  DiagonalMetric g{{}, dims};
  if (model == Model::Power) {
    for (const auto& b : blocks) g.lambdas.push_back(b.c * std::pow(n, b.a));
  } else {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r[0] == n; });
    if (it == rows.end()) throw ValidationError("no sample at the requested n");
    g.lambdas.assign(it->begin() + 1, it->end());
  }
  g.check();
  return g;
}

PowerFit fit_power_law(const std::vector<std::vector<double>>& rows_in, double r2_gate) {
  if (rows_in.size() < 4) throw ValidationError("too few samples to fit exponents");
  auto rows = rows_in;
  const size_t width = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != width || width < 2) throw ValidationError("ragged sample table");
    for (double x : r)
      if (!(x > 0.0) || !std::isfinite(x)) throw ValidationError("samples must be positive");
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
  std::vector<std::vector<double>> tail(rows.begin() + static_cast<long>(rows.size() / 2), rows.end());
  std::vector<double> x;
  for (const auto& r : tail) x.push_back(std::log(r[0]));
  const double xm = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
  double sxx = 0.0;
  for (double xi : x) sxx += (xi - xm) * (xi - xm);
  if (sxx <= 0.0) throw ValidationError("samples do not vary in n");
  PowerFit fit;
  for (size_t b = 1; b < width; ++b) {
    std::vector<double> y;
    for (const auto& r : tail) y.push_back(std::log(r[b]));
    double ym = std::accumulate(y.begin(), y.end(), 0.0) / y.size();
    double sxy = 0.0, syy = 0.0;
    for (size_t i = 0; i < y.size(); ++i) {
      sxy += (x[i] - xm) * (y[i] - ym);
      syy += (y[i] - ym) * (y[i] - ym);
    }
    double a = sxy / sxx;
    double intercept = ym - a * xm;
    double ssr = 0.0;
    for (size_t i = 0; i < y.size(); ++i) ssr += std::pow(y[i] - (intercept + a * x[i]), 2);
    double r2 = syy <= 1e-24 * std::max(1.0, ym * ym) ? 1.0 : 1.0 - ssr / syy;
    if (r2 < r2_gate) throw ValidationError("power-law fit rejected for block " + std::to_string(b - 1));
    fit.blocks.push_back({std::exp(intercept), std::abs(a) < 1e-12 ? 0.0 : a});
    fit.r_squared.push_back(r2);
  }
  return fit;
}

std::vector<PowerLawBlock> power_model(const SequenceSpec& seq) {
  if (seq.model == SequenceSpec::Model::Power) {
    for (const auto& b : seq.blocks)
      if (!(b.c > 0.0) || !std::isfinite(b.a)) throw ValidationError("power-law blocks need c > 0 and finite a");
    return seq.blocks;
  }
  return fit_power_law(seq.rows).blocks;
}

PowerSum scal_expansion(const std::vector<PowerLawBlock>& seq, const CoefficientTable& t) {
  const int l = t.size();
  PowerSum s;
  for (int i = 0; i < l; ++i) {
    s.add(0.5 * t.dims[i] * t.b[i] / seq[i].c, -seq[i].a);
    for (int j = 0; j < l; ++j)
      for (int k = 0; k < l; ++k)
        if (t.t(i, j, k) != 0.0)
          s.add(-0.25 * t.t(i, j, k) * seq[i].c / (seq[j].c * seq[k].c), seq[i].a - seq[j].a - seq[k].a);
  }
  return s;
}

PowerSum ric_expansion(const std::vector<PowerLawBlock>& seq, const CoefficientTable& t, int i) {
  const int l = t.size();
  PowerSum s;
  s.add(t.b[i] / (2.0 * seq[i].c), -seq[i].a);
  for (int j = 0; j < l; ++j)
    for (int k = 0; k < l; ++k) {
      double c = t.t(i, j, k);
      if (c == 0.0) continue;
      s.add(-c / (2.0 * t.dims[i]) * seq[k].c / (seq[i].c * seq[j].c), seq[k].a - seq[i].a - seq[j].a);
      s.add(c / (4.0 * t.dims[i]) * seq[i].c / (seq[j].c * seq[k].c), seq[i].a - seq[j].a - seq[k].a);
    }
  return s;
}

SequenceReport classify_sequence(const SequenceSpec& seq, const HomogeneousSpace& s, double tol, double cluster_tol) {
  std::vector<PowerLawBlock> blocks = power_model(seq);
  const int l = s.num_blocks();
  if (static_cast<int>(blocks.size()) != l) throw ValidationError("sequence does not match the decomposition");
  const auto& dims = s.dims();
  const CoefficientTable& t = s.coeffs;
  SequenceReport rep;
  if (seq.model == SequenceSpec::Model::Samples) rep.notes.push_back("exponents fitted from samples");

  bool divergent = false;
  for (const auto& b : blocks)
    if (std::abs(b.a) > tol) divergent = true;
  if (!divergent) throw ValidationError("not divergent");

  double m = 0.0, trace = 0.0, logvol = 0.0;
  for (int i = 0; i < l; ++i) {
    m += dims[i];
    trace += dims[i] * blocks[i].a;
    logvol += dims[i] * std::log(blocks[i].c);
  }
  if (std::abs(trace) > tol || std::abs(logvol) > 1e-9) {
    for (auto& b : blocks) {
      b.a -= trace / m;
      b.c *= std::exp(-logvol / m);
    }
    rep.notes.push_back("sequence rescaled to unit volume");
  }
  double norm = 0.0;
  for (int i = 0; i < l; ++i) norm += dims[i] * blocks[i].a * blocks[i].a;
  norm = std::sqrt(norm);
  for (const auto& b : blocks) rep.v_inf.push_back(b.a / norm);
  rep.classes = partition(rep.v_inf, cluster_tol);
  const double zero_thr = cluster_tol * std::max(1.0, norm);
  for (int c = 0; c < rep.classes.num_classes(); ++c)
    if (rep.classes.values[c] * norm <= zero_thr) rep.p = c + 1;
  for (int i = 0; i < l; ++i)
    if (blocks[i].a < -zero_thr) rep.i_sh.push_back(i);
  rep.i_gb = blocks_of_classes(rep.classes, rep.p);

  rep.p_inf = Mat(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      double da = blocks[i].a - blocks[j].a;
      rep.p_inf(i, j) = da < -zero_thr ? 0.0 : (da > zero_thr ? kInf : blocks[i].c / blocks[j].c);
    }

  for (int q = 1; q <= rep.p; ++q) {
    std::string label = q < rep.p ? "k_" + std::to_string(q) : "l'";
    rep.flag.push_back(verdict_for(s, blocks_of_classes(rep.classes, q), label, tol));
  }
  if (rep.p > 0) rep.l_prime = rep.flag.back();
  rep.l = verdict_for(s, rep.i_sh, "l", tol);

  rep.condition_a = true;
  rep.condition_a_note = "vacuous for a fixed decomposition: [ijk] is constant along the sequence";

  auto check_b = [&](const std::vector<int>& set, std::vector<ConditionViolation>& out) {
    for (int i : set)
      for (int j = 0; j < l; ++j)
        for (int k = 0; k < l; ++k) {
          double c = t.t(i, j, k);
          if (c <= tol) continue;
          double p = rep.p_inf(k, j);
          if (std::isfinite(p) && std::abs(p - 1.0) <= 1e-9) continue;
          out.push_back({{i, j, k}, c, p, !member(set, j) && !member(set, k)});
        }
    return out.empty();
  };
  rep.condition_b = check_b(rep.i_sh, rep.condition_b_violations);
  rep.extended_b = check_b(rep.i_gb, rep.extended_b_violations);
  for (const auto& v : rep.extended_b_violations)
    if (v.base) {
      rep.extended_b_witness = v;
      rep.has_extended_b_witness = true;
      break;
    }
  if (!rep.has_extended_b_witness && !rep.extended_b_violations.empty()) {
    rep.extended_b_witness = rep.extended_b_violations.front();
    rep.has_extended_b_witness = true;
  }

  rep.scal_limit = scal_expansion(blocks, t).limit();
  for (int i = 0; i < l; ++i) rep.ric_limits.push_back(ric_expansion(blocks, t, i).limit());

  auto pfrac = [&](int x, int y) { return PowerSum::monomial(blocks[x].c / blocks[y].c, blocks[x].a - blocks[y].a); };
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      for (int k = 0; k < l; ++k) {
        if (t.t(i, j, k) <= tol) continue;
        PowerSum f1 = pfrac(j, k) + PowerSum::constant(-1.0);
        PowerSum f2 = -2.0 * pfrac(i, j) + PowerSum::constant(1.0) + 3.0 * pfrac(k, j);
        rep.a_ijk.push_back({{i, j, k}, (t.t(i, j, k) * (f1 * f2)).limit().describe()});
      }
  return rep;
}

EstimateCheck toral_scal_estimate_check(const SequenceSpec& seq, const HomogeneousSpace& s, int q,
                                        const std::vector<double>& n_grid, double tol, double cluster_tol) {
  std::vector<PowerLawBlock> blocks = power_model(seq);
  const int l = s.num_blocks();
  if (static_cast<int>(blocks.size()) != l) throw ValidationError("sequence does not match the decomposition");
  double norm = 0.0;
  for (int i = 0; i < l; ++i) norm += s.dims()[i] * blocks[i].a * blocks[i].a;
  if (norm <= 0.0) throw ValidationError("not divergent");
  std::vector<double> v;
  for (const auto& b : blocks) v.push_back(b.a / std::sqrt(norm));
  IndexPartition part = partition(v, cluster_tol);
  if (q < 1 || q > part.num_classes()) throw ValidationError("flag level out of range");
  std::vector<int> inner = blocks_of_classes(part, q);
  EstimateCheck out;
  if (static_cast<int>(inner.size()) == l) {
    out.verdict = "vacuous";
    return out;
  }
  Subspace kq = s.subalgebra_from_blocks(inner, "k_q");
  if (!is_subalgebra(s.algebra, kq, tol).holds || !is_toral(s.algebra, s.isotropy, kq, tol).holds)
    throw ValidationError("k_q is not a toral subalgebra");
  std::vector<int> outer;
  for (int i = 0; i < l; ++i)
    if (!member(inner, i)) outer.push_back(i);
  const CoefficientTable& t = s.coeffs;
  out.min_margin = kInf;
  bool ok = true;
  for (double n : n_grid) {
    DiagonalMetric g = seq.at(n, s.dims());
    const auto& lam = g.lambdas;
    EstimateRow row;
    row.n = n;
    row.scal = scalar_curvature(t, g);
    double s1 = 0.0, s2 = 0.0;
    for (int i : outer) {
      s1 += t.dims[i] * t.b[i] / lam[i];
      for (int j : outer)
        for (int k : outer) s2 += t.t(i, j, k) * lam[i] / (lam[j] * lam[k]);
    }
    row.bound = 0.5 * s1 - 0.25 * s2;
    row.margin = row.bound - row.scal;
    out.min_margin = std::min(out.min_margin, row.margin);
    if (row.margin < -tol * std::max(1.0, std::abs(row.scal))) ok = false;
    out.rows.push_back(row);
  }
  out.verdict = ok ? "holds" : "fails";
  return out;
}

}  // namespace homocurv
