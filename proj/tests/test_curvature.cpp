#include "homocurv/catalog.hpp"
#include "homocurv/curvature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace homocurv;

namespace {

DiagonalMetric random_metric(const std::vector<int>& dims, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  DiagonalMetric g{{}, dims};
  for (size_t i = 0; i < dims.size(); ++i) g.lambdas.push_back(std::exp(u(rng)));
  return g;
}

// Normal homogeneous metric Q: sec(X,Y) = 1/4 |[X,Y]_m|^2 + |[X,Y]_h|^2 for Q-orthonormal X, Y.
double normal_sectional(const HomogeneousSpace& s, const Vec& x, const Vec& y) {
  Vec br = s.algebra.bracket(x, y);
  double hm = s.isotropy.dim() ? (s.isotropy.basis.transpose() * br).squaredNorm() : 0.0;
  double mm = (s.decomposition.basis.transpose() * br).squaredNorm();
  return 0.25 * mm + hm;
}

Vec random_in_m(const HomogeneousSpace& s, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Vec c(s.decomposition.m_dim());
  for (int i = 0; i < c.size(); ++i) c(i) = nd(rng);
  return s.decomposition.basis * c;
}

}  // namespace

TEST(Curvature, BergerClosedForms) {
  const auto s = catalog_entry("su2_berger").space;
  for (double x : {0.01, 0.3, 1.0, 2.0, 7.0})
    for (double y : {0.2, 1.0, 3.5}) {
      DiagonalMetric g{{x, y}, {1, 2}};
      auto ric = ricci_diagonal(s.coeffs, g);
      EXPECT_NEAR(ric[0], 2 * x / (y * y), 1e-12 * (1 + x / (y * y)));
      EXPECT_NEAR(ric[1], 4 / y - 2 * x / (y * y), 1e-12 * (1 + x / (y * y) + 1 / y));
      EXPECT_NEAR(scalar_curvature(s.coeffs, g), 8 / y - 2 * x / (y * y), 1e-12 * (1 + x / (y * y) + 1 / y));
      auto rep = curvature_report(s.algebra, s.isotropy, s.decomposition, g);
      EXPECT_NEAR(rep.scal, 8 / y - 2 * x / (y * y), 1e-11 * (1 + x / (y * y) + 1 / y));
      EXPECT_NEAR(rep.ric[0], ric[0], 1e-11 * (1 + std::abs(ric[0])));
      EXPECT_NEAR(rep.ric[1], ric[1], 1e-11 * (1 + std::abs(ric[1])));
    }
}

TEST(Curvature, RoundSphere) {
  const auto s = catalog_entry("su2_berger").space;
  DiagonalMetric g{{1, 1}, {1, 2}};
  Geometry geo(s.algebra, s.isotropy, to_general(g, s.decomposition));
  Mat op = geo.curvature_operator();
  EXPECT_LT((op - Mat::Identity(3, 3)).norm(), 1e-13);
  EXPECT_LT((geo.ricci_matrix() - 2.0 * Mat::Identity(3, 3)).norm(), 1e-13);
}

TEST(Curvature, NormalHomogeneousSectional) {
  std::mt19937_64 rng(21);
  for (const auto& name : catalog_names()) {
    const auto s = catalog_entry(name).space;
    DiagonalMetric q{std::vector<double>(s.num_blocks(), 1.0), s.dims()};
    GeneralMetric gm = to_general(q, s.decomposition);
    Geometry geo(s.algebra, s.isotropy, gm);
    for (int r = 0; r < 10; ++r) {
      Vec x = random_in_m(s, rng), y = random_in_m(s, rng);
      x.normalize();
      y -= y.dot(x) * x;
      y.normalize();
      double ref = normal_sectional(s, x, y);
      EXPECT_NEAR(sectional_oracle(s.algebra, s.isotropy, gm, x, y), ref, 1e-12) << name;
      EXPECT_NEAR(sectional_from_tensor(geo, x, y), ref, 1e-12) << name;
    }
  }
}

TEST(Curvature, SectionalPathsAgreeOnRandomMetrics) {
  std::mt19937_64 rng(22);
  for (const auto& name : catalog_names()) {
    const auto s = catalog_entry(name).space;
    for (int r = 0; r < 5; ++r) {
      DiagonalMetric g = random_metric(s.dims(), rng);
      GeneralMetric gm = to_general(g, s.decomposition);
      Geometry geo(s.algebra, s.isotropy, gm);
      const Mat& b = s.decomposition.basis;
      for (int a = 0; a < b.cols(); ++a)
        for (int c = a + 1; c < b.cols(); ++c) {
          double o = sectional_oracle(s.algebra, s.isotropy, gm, b.col(a), b.col(c));
          double t = sectional_from_tensor(geo, b.col(a), b.col(c));
          double d = sectional_diagonal(s.algebra, s.isotropy, s.decomposition, g, s.decomposition.block_of(a),
                                        s.decomposition.block_of(c), b.col(a), b.col(c));
          EXPECT_NEAR(o, t, 1e-10 * (1 + std::abs(o))) << name;
          EXPECT_NEAR(o, d, 1e-10 * (1 + std::abs(o))) << name;
        }
      // Mixed planes inside a block, through the slow paths.
      Vec x = random_in_m(s, rng), y = random_in_m(s, rng);
      EXPECT_NEAR(sectional_oracle(s.algebra, s.isotropy, gm, x, y), sectional_from_tensor(geo, x, y), 1e-9);
    }
  }
}

TEST(Curvature, RicciIsSumOfSectionals) {
  std::mt19937_64 rng(23);
  const auto s = catalog_entry("so5_stiefel").space;
  for (int r = 0; r < 5; ++r) {
    DiagonalMetric g = random_metric(s.dims(), rng);
    GeneralMetric gm = to_general(g, s.decomposition);
    auto ric = ricci_diagonal(s.coeffs, g);
    const Mat& b = s.decomposition.basis;
    double scal = 0.0;
    for (int i = 0; i < s.num_blocks(); ++i) {
      int col = s.decomposition.offset(i);
      double sum = 0.0;
      for (int c = 0; c < b.cols(); ++c)
        if (c != col) sum += sectional_oracle(s.algebra, s.isotropy, gm, b.col(col), b.col(c));
      EXPECT_NEAR(ric[i], sum, 1e-10 * (1 + std::abs(sum)));
      scal += s.dims()[i] * sum;
    }
    EXPECT_NEAR(scalar_curvature(s.coeffs, g), scal, 1e-9 * (1 + std::abs(scal)));
  }
}

TEST(Curvature, TensorSymmetries) {
  std::mt19937_64 rng(24);
  const auto s = catalog_entry("so5_stiefel").space;
  DiagonalMetric g = random_metric(s.dims(), rng);
  Geometry geo(s.algebra, s.isotropy, to_general(g, s.decomposition));
  Mat op = geo.curvature_operator();
  EXPECT_EQ(op.rows(), 36);
  EXPECT_LT((op - op.transpose()).norm(), 1e-10 * op.norm());
  EXPECT_LT(geo.bianchi_residual(), 1e-10 * op.norm());
  Mat ric = geo.ricci_matrix();
  EXPECT_LT((ric - ric.transpose()).norm(), 1e-10 * ric.norm());
  auto rep = curvature_report(s.algebra, s.isotropy, s.decomposition, g);
  EXPECT_NEAR(rep.rm_frobenius, op.norm(), 1e-10 * op.norm());
  EXPECT_NEAR(rep.scal, ric.trace(), 1e-10 * (1 + std::abs(rep.scal)));
  EXPECT_NEAR(rep.ric_norm, ric.norm(), 1e-10 * ric.norm());
  Mat tl = ric - ric.trace() / 9.0 * Mat::Identity(9, 9);
  EXPECT_NEAR(rep.traceless_ric_norm, tl.norm(), 1e-10 * (1 + ric.norm()));
}

TEST(Curvature, UTensorIdentity) {
  std::mt19937_64 rng(25);
  const auto s = catalog_entry("so5_stiefel").space;
  DiagonalMetric g = random_metric(s.dims(), rng);
  GeneralMetric gm = to_general(g, s.decomposition);
  Geometry geo(s.algebra, s.isotropy, gm);
  const Mat& f = gm.frame;
  auto br_m = [&](const Vec& a, const Vec& b) -> Vec { return f.transpose() * s.algebra.bracket(f * a, f * b); };
  std::normal_distribution<double> nd;
  for (int r = 0; r < 10; ++r) {
    Vec x(9), y(9), z(9);
    for (int i = 0; i < 9; ++i) {
      x(i) = nd(rng);
      y(i) = nd(rng);
      z(i) = nd(rng);
    }
    Vec u = geo.u(x, y);
    EXPECT_LT((u - geo.u(y, x)).norm(), 1e-12);
    double lhs = 2.0 * geo.inner(u, z);
    double rhs = geo.inner(br_m(z, x), y) + geo.inner(br_m(z, y), x);
    EXPECT_NEAR(lhs, rhs, 1e-10 * (1 + std::abs(rhs)));
  }
}

TEST(Curvature, InvariantUnderEquivalentModuleMixing) {
  const auto s = catalog_entry("so5_stiefel").space;
  DiagonalMetric g{{1, 2, 3, 1.5, 0.7, 0.9}, s.dims()};
  GeneralMetric gm = to_general(g, s.decomposition);
  gm.a(1, 3) = gm.a(3, 1) = 0.4;
  gm.a(2, 4) = gm.a(4, 2) = 0.4;
  auto direct = curvature_report(s.algebra, s.isotropy, gm);
  DiagonalizedMetric dm = diagonalize(s.algebra, s.isotropy, gm);
  auto via = curvature_report(s.algebra, s.isotropy, dm.decomposition, dm.metric);
  EXPECT_NEAR(direct.scal, via.scal, 1e-10);
  EXPECT_NEAR(direct.ric_norm, via.ric_norm, 1e-10);
  EXPECT_NEAR(direct.rm_frobenius, via.rm_frobenius, 1e-10);
  CoefficientTable t = coefficients(s.algebra, s.isotropy, dm.decomposition);
  EXPECT_NEAR(scalar_curvature(t, dm.metric), direct.scal, 1e-10);
}

TEST(Curvature, ProductOfCircleAndSphere) {
  // S^1 is flat; the sphere part is normal homogeneous with |[X2,X3]_h|^2 = 4.
  const auto s = catalog_entry("s1xs2").space;
  for (double n : {1.0, 3.0, 40.0}) {
    DiagonalMetric g{{std::pow(n, -2.0), n}, {1, 2}};
    auto rep = curvature_report(s.algebra, s.isotropy, s.decomposition, g);
    EXPECT_NEAR(rep.ric[0], 0.0, 1e-12);
    EXPECT_NEAR(rep.ric[1], 4.0 / n, 1e-12);
    EXPECT_NEAR(rep.scal, 8.0 / n, 1e-12);
    EXPECT_NEAR(rep.rm_frobenius, 4.0 / n, 1e-12);
  }
}

TEST(Curvature, ClosedFormsRejectMismatch) {
  const auto s = catalog_entry("su2_berger").space;
  EXPECT_THROW(ricci_diagonal(s.coeffs, DiagonalMetric{{1, 1, 1}, {1, 1, 1}}), ValidationError);
  EXPECT_THROW(scalar_curvature(s.coeffs, DiagonalMetric{{1, -1}, {1, 2}}), ValidationError);
}

TEST(Curvature, LargeSpreadStaysAccurate) {
  // Stable closed form against the exact Berger expression far from Q.
  const auto s = catalog_entry("su2_berger").space;
  const double n = 1e4;
  DiagonalMetric g{{std::pow(n, -2.0), n}, {1, 2}};
  const double exact = 8 / n - 2 * std::pow(n, -4.0);
  EXPECT_NEAR(scalar_curvature(s.coeffs, g), exact, 1e-14 * exact);
}

TEST(Curvature, FibersOfTorusAreTotallyGeodesic) {
  const auto e = catalog_entry("so5_stiefel");
  const auto& s = e.space;
  GeneralMetric gm = to_general(e.sequence->at(10.0, s.dims()), s.decomposition);
  EXPECT_LT(second_fundamental_form(s.algebra, s.isotropy, gm, s.subalgebra_from_blocks({0})), 1e-10);
  EXPECT_THROW(second_fundamental_form(s.algebra, s.isotropy, gm, s.subalgebra_from_blocks({0, 1})), ValidationError);
}
