#include "homocurv/catalog.hpp"
#include "homocurv/collapse.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace homocurv;

namespace {

struct Brute {
  double hh = 0, hm = 0, mh = 0, mm = 0;
};

// Bracket of g measured in Q on h plus the metric on m, summed over ordered pairs of an orthonormal basis.
Brute brute_norms(const HomogeneousSpace& s, const DiagonalMetric& g) {
  const Mat& hb = s.isotropy.basis;
  const auto& d = s.decomposition;
  std::vector<Vec> e;
  std::vector<double> lam;
  for (int c = 0; c < d.m_dim(); ++c) {
    double l = g.lambdas[d.block_of(c)];
    e.push_back(d.basis.col(c) / std::sqrt(l));
    lam.push_back(l);
  }
  auto m_norm = [&](const Vec& x) {
    double sum = 0.0;
    for (int c = 0; c < d.m_dim(); ++c) sum += lam[c] * std::pow(d.basis.col(c).dot(x), 2);
    return sum;
  };
  auto h_norm = [&](const Vec& x) { return hb.cols() ? (hb.transpose() * x).squaredNorm() : 0.0; };
  Brute b;
  for (int z = 0; z < hb.cols(); ++z) {
    for (int w = 0; w < hb.cols(); ++w) b.hh += h_norm(s.algebra.bracket(hb.col(z), hb.col(w)));
    for (const auto& x : e) b.hm += m_norm(s.algebra.bracket(hb.col(z), x));
  }
  for (const auto& x : e)
    for (const auto& y : e) {
      Vec br = s.algebra.bracket(x, y);
      b.mh += h_norm(br);
      b.mm += m_norm(br);
    }
  return b;
}

}  // namespace

TEST(Collapse, BracketNormsMatchBruteForce) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (const auto& name : catalog_names()) {
    const auto s = catalog_entry(name).space;
    double iso = isotropy_bracket_part(s);
    for (int r = 0; r < 20; ++r) {
      DiagonalMetric g{{}, s.dims()};
      for (int i = 0; i < s.num_blocks(); ++i) g.lambdas.push_back(std::exp(u(rng)));
      CollapseReport rep = bracket_norms(s, g);
      Brute b = brute_norms(s, g);
      EXPECT_NEAR(rep.mu_h, b.mh, 1e-10 * (1 + b.mh)) << name;
      EXPECT_NEAR(rep.mu_m, b.mm, 1e-10 * (1 + b.mm)) << name;
      EXPECT_NEAR(rep.isotropy_part, b.hh + b.hm, 1e-10) << name;
      EXPECT_EQ(rep.isotropy_part, iso);
      EXPECT_NEAR(rep.total, rep.isotropy_part + rep.mu_h + rep.mu_m, 1e-12 * (1 + rep.total));
    }
  }
}

TEST(Collapse, StiefelSequenceCollapses) {
  const auto e = catalog_entry("so5_stiefel");
  CollapseLimit c = collapse_limit(*e.sequence, e.space.coeffs);
  EXPECT_EQ(c.verdict, "collapsed");
  EXPECT_NEAR(c.dominant_exponent, 4.0, 1e-12);
  // The terms reproduce the finite-n sum.
  for (double n : {2.0, 7.0, 30.0}) {
    CollapseReport rep = bracket_norms(e.space, e.sequence->at(n, e.space.dims()));
    double sum = 0.0;
    for (const auto& t : c.terms) sum += t.coef * std::pow(n, t.exponent);
    EXPECT_NEAR(sum, rep.mu_h + rep.mu_m, 1e-10 * (rep.mu_h + rep.mu_m));
  }
}

TEST(Collapse, MostShrinkingNormalization) {
  const auto e = catalog_entry("so5_stiefel");
  SequenceSpec ns = normalize_most_shrinking(*e.sequence);
  EXPECT_FALSE(ns.unit_volume);
  EXPECT_NEAR(ns.blocks[0].c, 1.0, 1e-15);
  EXPECT_EQ(ns.blocks[0].a, 0.0);
  for (const auto& b : ns.blocks) EXPECT_GE(b.a, 0.0);
  for (double n : {3.0, 11.0}) {
    auto a = e.sequence->at(n, e.space.dims()).lambdas;
    auto b = ns.at(n, e.space.dims()).lambdas;
    for (size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(b[i], a[i] / a[0], 1e-12 * b[i]);
  }
  CollapseLimit c = collapse_limit(ns, e.space.coeffs);
  EXPECT_EQ(c.verdict, "non-collapsed");
  EXPECT_NEAR(c.dominant_exponent, 0.0, 1e-12);
}

TEST(Collapse, BergerAndProduct) {
  const auto b = catalog_entry("su2_berger");
  EXPECT_EQ(collapse_limit(*b.sequence, b.space.coeffs).verdict, "collapsed");
  EXPECT_EQ(collapse_limit(normalize_most_shrinking(*b.sequence), b.space.coeffs).verdict, "non-collapsed");
  // Only the isotropy term 2*4/n^2 is present on the product.
  const auto p = catalog_entry("s1xs2");
  CollapseLimit c = collapse_limit(*p.sequence, p.space.coeffs);
  ASSERT_EQ(c.terms.size(), 1u);
  EXPECT_EQ(c.terms[0].kind, "mu_h");
  EXPECT_NEAR(c.terms[0].coef, 8.0, 1e-12);
  EXPECT_NEAR(c.terms[0].exponent, -2.0, 1e-15);
  EXPECT_EQ(c.verdict, "non-collapsed");
  EXPECT_FALSE(p.space.pi1_finite);
  EXPECT_TRUE(b.space.pi1_finite);
}

TEST(Collapse, SampleTables) {
  const auto e = catalog_entry("su2_berger");
  SequenceSpec grow, flat;
  grow.model = flat.model = SequenceSpec::Model::Samples;
  for (double n = 1; n <= 64; n *= 2) {
    grow.rows.push_back({n, 1.0 / (n * n), n});
    flat.rows.push_back({n, 1.0, 1.0 + 1.0 / n});
  }
  CollapseLimit g = collapse_limit(grow, e.space.coeffs);
  EXPECT_EQ(g.verdict, "unbounded-so-far");
  ASSERT_EQ(g.samples.size(), grow.rows.size());
  for (size_t i = 0; i < g.samples.size(); ++i) {
    double n = grow.rows[i][0];
    CollapseReport rep = bracket_norms(e.space, DiagonalMetric{{1.0 / (n * n), n}, {1, 2}});
    EXPECT_NEAR(g.samples[i].second, rep.mu_h + rep.mu_m, 1e-12 * (1 + g.samples[i].second));
  }
  EXPECT_EQ(collapse_limit(flat, e.space.coeffs).verdict, "bounded-so-far");
  SequenceSpec wrong;
  wrong.blocks = {{1, 0}};
  EXPECT_THROW(collapse_limit(wrong, e.space.coeffs), ValidationError);
}
