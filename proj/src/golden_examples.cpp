#include "homocurv/goldens.hpp"

#include "homocurv/collapse.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

namespace homocurv {

namespace {

const double kS6 = std::sqrt(6.0);

std::string num(double x) {
  std::ostringstream s;
  s << std::setprecision(10) << x;
  return s.str();
}

struct Lines {
  std::vector<GoldenCheck> out;

  // body returns an empty string on success, else what went wrong
  void add(const std::string& name, const std::function<std::string()>& body) {
    GoldenCheck g;
    g.name = name;
    try {
      std::string why = body();
      g.pass = why.empty();
      g.detail = why.empty() ? "ok" : why;
    } catch (const std::exception& ex) {
      g.pass = false;
      g.detail = std::string("exception: ") + ex.what();
    }
    out.push_back(g);
  }
};

std::string near(double got, double want, double tol, const std::string& what) {
  if (std::abs(got - want) <= tol) return {};
  return what + ": got " + num(got) + ", want " + num(want);
}

// Concatenates the failures of several comparisons.
std::string all(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& p : parts)
    if (!p.empty()) s += (s.empty() ? "" : "; ") + p;
  return s;
}

}  // namespace

std::vector<GoldenCheck> example_checks() {
  Lines L;
  const auto berger = catalog_entry("su2_berger");
  const auto stiefel = catalog_entry("so5_stiefel");
  const auto s1s2 = catalog_entry("s1xs2");
  const auto& st = stiefel.space;
  const Subspace k1 = st.subalgebra_from_blocks({0}, "k1");
  const Subspace k2 = st.subalgebra_from_blocks({0, 1, 2}, "k2");
  const auto& vinf = *stiefel.direction;
  const auto vbar = *berger.direction;

  L.add("su(2) bracket [X1,X2] = -2 X3", [&] {
    const auto& g = berger.space.algebra;
    Vec br = g.bracket(Vec::Unit(3, 0), Vec::Unit(3, 1));
    return near((br - (-2.0) * Vec::Unit(3, 2)).norm(), 0.0, 1e-12, "bracket");
  });

  L.add("so(5) Killing form is -6 Q on every block", [&] {
    Mat k = killing_form(st.algebra);
    double worst = 0.0;
    for (int i = 0; i < st.num_blocks(); ++i) {
      Mat b = st.decomposition.block(i);
      worst = std::max(worst, (-(b.transpose() * k * b) - 6.0 * Mat::Identity(b.cols(), b.cols())).cwiseAbs().maxCoeff());
    }
    return near(worst, 0.0, 1e-9, "residual");
  });

  L.add("catalog block dims", [&] {
    std::string s;
    if (st.dims() != std::vector<int>{1, 2, 2, 2, 1, 1}) s += "so5_stiefel dims wrong; ";
    if (berger.space.dims() != std::vector<int>{1, 2}) s += "su2_berger dims wrong; ";
    if (s1s2.space.dims() != std::vector<int>{1, 2}) s += "s1xs2 dims wrong";
    return s;
  });

  L.add("so(5) h = span(E): 9-dim complement, 6 blocks", [&] {
    auto m = orthogonal_complement(st.algebra, st.isotropy);
    auto d = decompose(st.algebra, st.isotropy);
    auto dims = d.block_dims;
    std::sort(dims.begin(), dims.end());
    std::string s;
    if (m.dim() != 9) s += "complement dim " + std::to_string(m.dim()) + "; ";
    if (dims != std::vector<int>{1, 1, 1, 2, 2, 2}) s += "decompose dims differ";
    return s;
  });

  L.add("S1xS2 decomposition (1,2) and central E", [&] {
    auto d = decompose(s1s2.space.algebra, s1s2.space.isotropy);
    auto dims = d.block_dims;
    std::sort(dims.begin(), dims.end());
    std::string s;
    if (dims != std::vector<int>{1, 2}) s += "dims differ; ";
    Subspace e = Subspace::from_vectors(s1s2.space.decomposition.block(0));
    Subspace m2 = Subspace::from_vectors(s1s2.space.decomposition.block(1));
    int ker = representation_kernel(s1s2.space.algebra, e, m2);
    if (ker != 1) s += "kernel dim " + std::to_string(ker);
    return s;
  });

  L.add("Stiefel subalgebras: k1 toral, k2 non-toral", [&] {
    std::string s;
    if (!is_subalgebra(st.algebra, k1).holds) s += "k1 not closed; ";
    if (!is_subalgebra(st.algebra, k2).holds) s += "k2 not closed; ";
    if (!is_toral(st.algebra, st.isotropy, k1).holds) s += "k1 not toral; ";
    if (is_toral(st.algebra, st.isotropy, k2).holds) s += "k2 toral";
    return s;
  });

  L.add("Stiefel module equivalences", [&] {
    auto eq = module_equivalences(st.algebra, st.isotropy, st.decomposition);
    std::string s;
    for (int i : {1, 2, 3})
      for (int j : {1, 2, 3})
        if (eq(i, j) < 1) s += "m" + std::to_string(i + 1) + " !~ m" + std::to_string(j + 1) + "; ";
    for (int i : {0, 4, 5})
      for (int j : {0, 4, 5})
        if (eq(i, j) < 1) s += "m" + std::to_string(i + 1) + " !~ m" + std::to_string(j + 1) + "; ";
    for (int i : {0, 4, 5})
      for (int j : {1, 2, 3})
        if (eq(i, j) != 0) s += "trivial m" + std::to_string(i + 1) + " ~ m" + std::to_string(j + 1) + "; ";
    return s;
  });

  L.add("Berger geodesic lambdas", [&] {
    std::string s;
    for (double t : {0.0, 1.0, 3.0}) {
      auto g = geodesic(vbar, berger.space.dims(), t);
      s += all({near(g.lambdas[0], std::exp(-kS6 * t / 3.0), 1e-12, "lambda_1"),
                near(g.lambdas[1], std::exp(kS6 * t / 6.0), 1e-12, "lambda_2")});
    }
    return s;
  });

  L.add("Stiefel n=2 direction and time match v^(n)", [&] {
    auto dt = direction_and_time(stiefel.sequence->at(2.0, st.dims()));
    auto want = stiefel_direction(2.0);
    double worst = 0.0;
    for (int i = 0; i < 6; ++i) worst = std::max(worst, std::abs(dt.v[i] - want[i]));
    std::string s = near(worst, 0.0, 1e-12, "direction");
    if (!(dt.v[0] < 0 && 0 < dt.v[3] && dt.v[3] <= dt.v[4] && std::abs(dt.v[4] - dt.v[5]) < 1e-12))
      s += "; eigenvalue order";
    return s;
  });

  L.add("Stiefel g^(n) is a k1-submersion metric, not k2", [&] {
    std::string s;
    for (double n : {2.0, 5.0}) {
      auto g = to_general(stiefel.sequence->at(n, st.dims()), st.decomposition);
      if (!is_submersion_metric(st.algebra, st.isotropy, g, k1).holds) s += "k1 fails at n=" + num(n) + "; ";
      if (is_submersion_metric(st.algebra, st.isotropy, g, k2).holds) s += "k2 holds at n=" + num(n) + "; ";
      double ii = second_fundamental_form(st.algebra, st.isotropy, g, k1);
      if (ii > 1e-12) s += "k1 fibers not totally geodesic " + num(ii) + "; ";
    }
    return s;
  });

  L.add("U(X,X) = 0 inside a block", [&] {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ud(-1.0, 1.0);
    DiagonalMetric g{{}, st.dims()};
    for (int i = 0; i < st.num_blocks(); ++i) g.lambdas.push_back(std::exp(ud(rng)));
    Geometry geo(st.algebra, st.isotropy, to_general(g, st.decomposition));
    double worst = 0.0;
    for (int a = 0; a < 9; ++a) worst = std::max(worst, geo.u(Vec::Unit(9, a), Vec::Unit(9, a)).norm());
    return near(worst, 0.0, 1e-12, "|U(X,X)|");
  });

  L.add("Berger at t=0: sec = 1 on coordinate planes", [&] {
    auto gm = to_general(geodesic(vbar, berger.space.dims(), 0.0), berger.space.decomposition);
    std::string s;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        s += near(sectional_oracle(berger.space.algebra, berger.space.isotropy, gm, Vec::Unit(3, a), Vec::Unit(3, b)),
                  1.0, 1e-12, "sec");
    return s;
  });

  L.add("Stiefel Ricci limits (0, 7/4, 7/4, -3/2, 3/2, 3/2) and scal -> 7", [&] {
    auto pm = power_model(*stiefel.sequence);
    const double want[6] = {0, 1.75, 1.75, -1.5, 1.5, 1.5};
    std::string s;
    for (int i = 0; i < 6; ++i) {
      auto lim = ric_expansion(pm, st.coeffs, i).limit();
      if (!lim.finite()) s += "ric_" + std::to_string(i + 1) + " " + lim.describe() + "; ";
      else s += near(lim.value, want[i], 1e-9, "ric_" + std::to_string(i + 1));
    }
    auto sl = scal_expansion(pm, st.coeffs).limit();
    if (!sl.finite()) s += "scal " + sl.describe();
    else s += near(sl.value, 7.0, 1e-9, "scal limit");
    return s;
  });

  L.add("Stiefel scal(n=2) = 23007/2048", [&] {
    return near(scalar_curvature(st.coeffs, stiefel.sequence->at(2.0, st.dims())), 23007.0 / 2048.0, 1e-12, "scal");
  });

  L.add("Stiefel Rm(X1^X2) at n=2: 1/256 and 5/(256 sqrt2)", [&] {
    Mat m = curvature_report(st.algebra, st.isotropy, st.decomposition, stiefel.sequence->at(2.0, st.dims())).rm_matrix;
    // pair (0,1) is row 0; pair (5,8) is row 8+7+6+5+4 + 2 = 32
    return all({near(m(0, 0), 1.0 / 256.0, 1e-12, "diagonal"),
                near(m(0, 32), 5.0 / (256.0 * std::sqrt(2.0)), 1e-12, "X6^X9")});
  });

  L.add("S1xS2 |Rm| = 4/n, Rm diagonal", [&] {
    std::string s;
    for (double n : {1.0, 3.0, 50.0}) {
      auto r = curvature_report(s1s2.space.algebra, s1s2.space.isotropy, s1s2.space.decomposition,
                                s1s2.sequence->at(n, s1s2.space.dims()));
      s += all({near(r.rm_frobenius, 4.0 / n, 1e-9, "|Rm|"), near(r.rm_matrix(2, 2), 4.0 / n, 1e-9, "X2^X3")});
    }
    return s;
  });

  L.add("partitions of vbar and v_inf", [&] {
    auto pb = partition(vbar);
    auto ps = partition(vinf);
    std::string s;
    if (pb.sets != std::vector<std::vector<int>>{{0}, {1}}) s += "Berger classes; ";
    if (ps.sets != std::vector<std::vector<int>>{{0}, {1, 2}, {3, 4, 5}}) s += "Stiefel classes; ";
    s += near(pb.values[0], -kS6 / 3.0, 1e-12, "Berger v_1");
    return s;
  });

  L.add("submersion directions and induced subalgebras", [&] {
    std::string s;
    if (!is_submersion_direction(vbar, berger.space.coeffs).holds) s += "vbar rejected; ";
    auto rev = is_submersion_direction({-vbar[0], -vbar[1]}, berger.space.coeffs);
    if (rev.holds || rev.witnesses.empty()) s += "reversed vbar accepted; ";
    auto kb = induced_subalgebra(vbar, berger.space);
    if (kb.k.dim() != 1 || !kb.toral || std::abs(std::abs(kb.k.basis(0, 0)) - 1.0) > 1e-12) s += "Berger k; ";
    auto ks = induced_subalgebra(vinf, st);
    if (ks.k.dim() != 2 || !same_subspace(ks.k, k1)) s += "Stiefel k1; ";
    return s;
  });

  L.add("flag checks: v_inf in S(k1,k2), v^(n) in S(k1) only", [&] {
    std::string s;
    if (!flag_check(vinf, {k1}, st).holds) s += "v_inf (k1); ";
    if (!flag_check(vinf, {k1, k2}, st).holds) s += "v_inf (k1,k2); ";
    for (double n : {2.0, 8.0}) {
      auto vn = stiefel_direction(n);
      if (!flag_check(vn, {k1}, st).holds) s += "v^(" + num(n) + ") (k1); ";
      if (flag_check(vn, {k1, k2}, st).holds) s += "v^(" + num(n) + ") (k1,k2) accepted; ";
    }
    return s;
  });

  L.add("scal along gamma_{v^(n)}: eight-term form and limit -inf", [&] {
    std::string s;
    for (double n : {2.0, 4.0, 16.0}) {
      auto v = stiefel_direction(n);
      for (double t : {0.0, 0.5, 3.0, 10.0}) {
        double v1 = v[0], v4 = v[3], v5 = v[4];
        double want = 12 - 2 * std::exp(t * (v5 - v4)) - std::exp(t * v1) + 6 * std::exp(-t * v4) +
                      6 * std::exp(-t * v5) - 0.5 * std::exp(-t * (2 * v5 - v1)) - 2 * std::exp(-t * (v4 + v5)) -
                      2 * std::exp(-t * (v5 - v4));
        s += near(scal_along_geodesic(v, st.coeffs, t), want, 1e-9 * std::max(1.0, std::abs(want)), "scal");
      }
      if (scal_along_geodesic(v, st.coeffs, 2000.0) > -1e6) s += "no divergence at n=" + num(n) + "; ";
    }
    return s;
  });

  L.add("Berger |Rm| vanishes along vbar", [&] {
    std::vector<double> ts;
    for (int i = 0; i <= 80; ++i) ts.push_back(2.5 * i);
    auto scan = geodesic_scan(berger.space, vbar, ts, 1);
    return scan.rm_tail == "vanishes" ? std::string() : "rm tail " + scan.rm_tail;
  });

  L.add("Stiefel limit geodesic Ricci closed forms and tail (0,2,2,0,0,0)", [&] {
    std::string s;
    const double v1 = vinf[0], v4 = vinf[3];
    for (double t : {0.0, 1.0, 5.0, 20.0}) {
      auto ric = ricci_diagonal(st.coeffs, geodesic(vinf, st.dims(), t));
      double r1 = std::exp(t * v1) + 0.5 * std::exp(-t * (2 * v4 - v1));
      double r2 = 2 - 0.5 * std::exp(t * v1) + 0.5 * std::exp(-2 * t * v4);
      double r4 = 3 * std::exp(-t * v4) - std::exp(-2 * t * v4);
      double r5 = r4 - 0.5 * std::exp(-t * (2 * v4 - v1));
      const double want[6] = {r1, r2, r2, r4, r5, r5};
      for (int i = 0; i < 6; ++i) s += near(ric[i], want[i], 1e-9, "ric_" + std::to_string(i + 1) + "(t=" + num(t) + ")");
    }
    auto ric = ricci_diagonal(st.coeffs, geodesic(vinf, st.dims(), 200.0));
    const double lim[6] = {0, 2, 2, 0, 0, 0};
    for (int i = 0; i < 6; ++i) s += near(ric[i], lim[i], 1e-9, "tail ric_" + std::to_string(i + 1));
    std::vector<double> ts;
    for (int i = 0; i <= 40; ++i) ts.push_back(5.0 * i);
    auto scan = geodesic_scan(st, vinf, ts, 1);
    if (scan.rm_tail == "diverges") s += "; |Rm| diverges";
    return s;
  });

  L.add("ranks: su(2) = 1, so(5) = 2", [&] {
    std::string s;
    if (rank(berger.space.algebra, Subspace::whole(3)) != 1) s += "su(2); ";
    if (rank(st.algebra, Subspace::whole(10)) != 2) s += "so(5)";
    return s;
  });

  return L.out;
}

}  // namespace homocurv
