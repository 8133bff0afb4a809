#include "homocurv/catalog.hpp"
#include "homocurv/metric_space.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace homocurv;

namespace {

const std::vector<int> kStiefelDims{1, 2, 2, 2, 1, 1};

std::vector<double> random_sigma(const std::vector<int>& dims, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  std::vector<double> v(dims.size());
  for (auto& x : v) x = nd(rng);
  return project_to_sigma(v, dims);
}

}  // namespace

TEST(MetricSpace, NormalizeVolume) {
  DiagonalMetric g{{2, 1, 1, 1, 1, 1}, kStiefelDims};
  EXPECT_NEAR(log_volume(g), std::log(2.0), 1e-15);
  DiagonalMetric u = normalize_volume(g);
  const double s = std::pow(2.0, -1.0 / 9.0);
  EXPECT_NEAR(u.lambdas[0], 2.0 * s, 1e-14);
  for (int i = 1; i < 6; ++i) EXPECT_NEAR(u.lambdas[i], s, 1e-14);
  EXPECT_NEAR(log_volume(u), 0.0, 1e-14);
}

TEST(MetricSpace, CheckRejectsBadMetrics) {
  EXPECT_THROW((DiagonalMetric{{1, 0}, {1, 2}}.check()), ValidationError);
  EXPECT_THROW((DiagonalMetric{{1, -1}, {1, 2}}.check()), ValidationError);
  EXPECT_THROW((DiagonalMetric{{1}, {1, 2}}.check()), ValidationError);
  EXPECT_THROW((DiagonalMetric{{1, NAN}, {1, 2}}.check()), ValidationError);
  GeneralMetric asym{Mat::Identity(3, 2), Mat::Identity(2, 2)};
  asym.a(0, 1) = 0.5;
  EXPECT_THROW(asym.check(), ValidationError);
  GeneralMetric indef{Mat::Identity(3, 2), Mat::Identity(2, 2)};
  indef.a(1, 1) = -1.0;
  EXPECT_THROW(indef.check(), ValidationError);
}

TEST(MetricSpace, SigmaProjection) {
  std::mt19937_64 rng(7);
  for (int r = 0; r < 20; ++r) {
    auto v = random_sigma(kStiefelDims, rng);
    EXPECT_TRUE(in_sigma(v, kStiefelDims));
    double s1 = 0, s2 = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      s1 += kStiefelDims[i] * v[i];
      s2 += kStiefelDims[i] * v[i] * v[i];
    }
    EXPECT_NEAR(s1, 0.0, 1e-12);
    EXPECT_NEAR(s2, 1.0, 1e-12);
    auto w = project_to_sigma(v, kStiefelDims);
    for (size_t i = 0; i < v.size(); ++i) EXPECT_NEAR(v[i], w[i], 1e-14);
  }
  EXPECT_FALSE(in_sigma({1, 1, 1, 1, 1, 1}, kStiefelDims));
  EXPECT_THROW(project_to_sigma({2, 2, 2, 2, 2, 2}, kStiefelDims), ValidationError);
}

TEST(MetricSpace, GeodesicAndInverse) {
  std::mt19937_64 rng(9);
  for (int r = 0; r < 20; ++r) {
    auto v = random_sigma(kStiefelDims, rng);
    double t = 0.1 + 3.0 * r;
    DiagonalMetric g = geodesic(v, kStiefelDims, t);
    for (size_t i = 0; i < v.size(); ++i) EXPECT_NEAR(std::log(g.lambdas[i]), t * v[i], 1e-12 * (1 + t));
    EXPECT_NEAR(log_volume(g), 0.0, 1e-10 * (1 + t));
    DirectionTime dt = direction_and_time(g);
    EXPECT_NEAR(dt.t, t, 1e-10 * (1 + t));
    for (size_t i = 0; i < v.size(); ++i) EXPECT_NEAR(dt.v[i], v[i], 1e-10);
  }
  EXPECT_THROW(direction_and_time(DiagonalMetric{{1, 1, 1, 1, 1, 1}, kStiefelDims}), ValidationError);
  EXPECT_THROW(direction_and_time(DiagonalMetric{{2, 1, 1, 1, 1, 1}, kStiefelDims}), ValidationError);
}

TEST(MetricSpace, BergerGeodesicOfSequence) {
  // lambda = (n^-2, n, n) is gamma_v(t) with v proportional to (-2, 1) and t = |(-2,1,1)| log n.
  const std::vector<int> dims{1, 2};
  const double n = 5.0;
  DirectionTime dt = direction_and_time(DiagonalMetric{{std::pow(n, -2.0), n}, dims});
  EXPECT_NEAR(dt.v[0], -std::sqrt(6.0) / 3.0, 1e-13);
  EXPECT_NEAR(dt.v[1], std::sqrt(6.0) / 6.0, 1e-13);
  EXPECT_NEAR(dt.t, std::sqrt(6.0) * std::log(n), 1e-12);
}

TEST(MetricSpace, ToGeneralMatchesDiagonal) {
  const auto s = catalog_entry("so5_stiefel").space;
  DiagonalMetric g{{0.5, 1, 2, 3, 4, 5}, kStiefelDims};
  GeneralMetric gm = to_general(g, s.decomposition);
  EXPECT_NO_THROW(gm.check());
  std::vector<double> diag{0.5, 1, 1, 2, 2, 3, 3, 4, 5};
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) EXPECT_NEAR(gm.a(i, j), i == j ? diag[i] : 0.0, 1e-15);
  EXPECT_THROW(to_general(DiagonalMetric{{1, 2}, {1, 2}}, s.decomposition), ValidationError);
}

TEST(MetricSpace, DiagonalizeMixedEquivalentModules) {
  // E45 acts identically on (E34,E35) and (E24,E25), so mixing them is invariant.
  const auto s = catalog_entry("so5_stiefel").space;
  DiagonalMetric g{{1, 2, 3, 1.5, 0.7, 0.9}, kStiefelDims};
  GeneralMetric gm = to_general(g, s.decomposition);
  const double off = 0.4;
  gm.a(1, 3) = gm.a(3, 1) = off;
  gm.a(2, 4) = gm.a(4, 2) = off;
  DiagonalizedMetric dm = diagonalize(s.algebra, s.isotropy, gm);
  Eigen::Matrix2d sub;
  sub << 2, off, off, 3;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(sub);
  std::vector<double> expected{1, es.eigenvalues()(0), es.eigenvalues()(0), es.eigenvalues()(1),
                               es.eigenvalues()(1), 1.5, 1.5, 0.7, 0.9};
  std::vector<double> got;
  for (int i = 0; i < dm.metric.size(); ++i)
    for (int k = 0; k < dm.metric.dims[i]; ++k) got.push_back(dm.metric.lambdas[i]);
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  ASSERT_EQ(got.size(), expected.size());
  for (size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], expected[i], 1e-10);
  // The new basis diagonalizes the ambient metric tensor.
  Mat ambient = gm.frame * gm.a * gm.frame.transpose();
  Mat inner = dm.decomposition.basis.transpose() * ambient * dm.decomposition.basis;
  int col = 0;
  for (int b = 0; b < dm.metric.size(); ++b)
    for (int k = 0; k < dm.metric.dims[b]; ++k, ++col) EXPECT_NEAR(inner(col, col), dm.metric.lambdas[b], 1e-10);
  EXPECT_LT((inner - Mat(inner.diagonal().asDiagonal())).norm(), 1e-10);
}

TEST(MetricSpace, SubmersionMetricOverTorusAndSo4) {
  const auto e = catalog_entry("so5_stiefel");
  const auto& s = e.space;
  Subspace k1 = s.subalgebra_from_blocks({0});
  Subspace k2 = s.subalgebra_from_blocks({0, 1, 2});
  for (double n : {2.0, 10.0, 100.0}) {
    GeneralMetric gm = to_general(e.sequence->at(n, s.dims()), s.decomposition);
    auto c1 = is_submersion_metric(s.algebra, s.isotropy, gm, k1);
    EXPECT_TRUE(c1.holds) << n;
    EXPECT_LT(c1.equivariance_residual, 1e-9);
    // so(4) moves E14 into E12 and E13, whose coefficients differ from it.
    EXPECT_FALSE(is_submersion_metric(s.algebra, s.isotropy, gm, k2).holds) << n;
  }
  // E23 swaps the second and third blocks: unequal coefficients break invariance.
  GeneralMetric bad = to_general(DiagonalMetric{{1, 1, 2, 1, 1, 1}, kStiefelDims}, s.decomposition);
  EXPECT_FALSE(is_submersion_metric(s.algebra, s.isotropy, bad, k1).holds);
  EXPECT_THROW(is_submersion_metric(s.algebra, s.isotropy, bad, s.subalgebra_from_blocks({0, 1})), ValidationError);
}
