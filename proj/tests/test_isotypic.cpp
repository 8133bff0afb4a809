#include "homocurv/catalog.hpp"
#include "homocurv/isotypic.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace homocurv;

namespace {

Mat cols(int n, std::initializer_list<int> idx) {
  Mat m = Mat::Zero(n, static_cast<Eigen::Index>(idx.size()));
  int c = 0;
  for (int i : idx) m(i, c++) = 1.0;
  return m;
}

// sum over Q-orthonormal bases of the three blocks of Q([x,y],z)^2
double brute_triple(const LieAlgebra& g, const Mat& a, const Mat& b, const Mat& c) {
  double s = 0.0;
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Vec br = g.bracket(a.col(i), b.col(j));
      for (int k = 0; k < c.cols(); ++k) s += std::pow(br.dot(c.col(k)), 2);
    }
  return s;
}

void expect_blocks_sound(const LieAlgebra& g, const Subspace& h, const Decomposition& d) {
  const int n = g.dim();
  EXPECT_EQ(d.m_dim() + h.dim(), n);
  EXPECT_LT((d.basis.transpose() * d.basis - Mat::Identity(d.m_dim(), d.m_dim())).norm(), 1e-10);
  EXPECT_LT((d.basis.transpose() * h.basis).norm(), 1e-10);
  for (int b = 0; b < d.num_blocks(); ++b) {
    Mat blk = d.block(b);
    Mat proj = blk * blk.transpose();
    for (int z = 0; z < h.dim(); ++z)
      for (int c = 0; c < blk.cols(); ++c) {
        Vec img = g.bracket(h.basis.col(z), blk.col(c));
        EXPECT_LT((img - proj * img).norm(), 1e-9) << "block " << b;
      }
  }
}

}  // namespace

TEST(Isotypic, StiefelDecomposition) {
  LieAlgebra g = so5_algebra();
  Subspace h = Subspace::from_vectors(cols(10, {0}));
  Decomposition d = decompose(g, h);
  std::vector<int> dims = d.block_dims;
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<int>{1, 1, 1, 2, 2, 2}));
  expect_blocks_sound(g, h, d);
  for (int b = 0; b < d.num_blocks(); ++b) EXPECT_NEAR(d.casimir[b], d.block_dims[b] == 1 ? 0.0 : 1.0, 1e-10);
}

TEST(Isotypic, DecompositionIsDeterministic) {
  LieAlgebra g = so5_algebra();
  Subspace h = Subspace::from_vectors(cols(10, {0}));
  Decomposition a = decompose(g, h), b = decompose(g, h);
  EXPECT_EQ(a.block_dims, b.block_dims);
  EXPECT_TRUE(a.basis == b.basis);
}

TEST(Isotypic, StiefelCoefficientsMatchBruteForce) {
  const auto s = catalog_entry("so5_stiefel").space;
  const auto& t = s.coeffs;
  ASSERT_EQ(t.size(), 6);
  Mat kf = killing_form(s.algebra);
  for (int i = 0; i < t.size(); ++i) {
    Mat blk = s.decomposition.block(i);
    // -B restricted to a block, and the Casimir of E45, both scalar.
    EXPECT_NEAR(t.b[i], -(blk.transpose() * kf * blk)(0, 0), 1e-12);
    EXPECT_NEAR(t.b[i], 6.0, 1e-12);
    EXPECT_NEAR(t.c[i], t.dims[i] == 1 ? 0.0 : 1.0, 1e-12);
    for (int j = 0; j < t.size(); ++j)
      for (int k = 0; k < t.size(); ++k)
        EXPECT_NEAR(t.t(i, j, k),
                    brute_triple(s.algebra, blk, s.decomposition.block(j), s.decomposition.block(k)), 1e-12);
  }
  EXPECT_LT(t.dbc_residual, 1e-12);
  EXPECT_TRUE(t.consistent());
  EXPECT_NEAR(t.b_gh(), 6.0 * 9, 1e-12);
  EXPECT_EQ(t.total_dim(), 9);
}

TEST(Isotypic, AutomaticDecompositionGivesSameInvariants) {
  const auto s = catalog_entry("so5_stiefel").space;
  Subspace h = Subspace::from_vectors(cols(10, {0}));
  Decomposition d = decompose(s.algebra, h);
  CoefficientTable t = coefficients(s.algebra, h, d);
  auto sorted = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  auto b1 = sorted(t.b), b2 = sorted(s.coeffs.b);
  auto c1 = sorted(t.c), c2 = sorted(s.coeffs.c);
  for (size_t i = 0; i < b1.size(); ++i) {
    EXPECT_NEAR(b1[i], b2[i], 1e-10);
    EXPECT_NEAR(c1[i], c2[i], 1e-10);
  }
  // The trivial blocks may be rotated, but the sum of all triples is basis independent.
  double s1 = 0, s2 = 0;
  for (double x : t.triples) s1 += x;
  for (double x : s.coeffs.triples) s2 += x;
  EXPECT_NEAR(s1, s2, 1e-9);
  EXPECT_LT(t.dbc_residual, 1e-10);
}

TEST(Isotypic, BergerAndProductCoefficients) {
  // Hand computation with [X1,X2] = -2X3 and cyclic.
  const auto b = catalog_entry("su2_berger").space.coeffs;
  EXPECT_NEAR(b.b[0], 8.0, 1e-12);
  EXPECT_NEAR(b.b[1], 8.0, 1e-12);
  EXPECT_NEAR(b.c[0], 0.0, 1e-12);
  EXPECT_NEAR(b.c[1], 0.0, 1e-12);
  EXPECT_NEAR(b.t(0, 1, 1), 8.0, 1e-12);
  EXPECT_NEAR(b.t(1, 0, 1), 8.0, 1e-12);
  EXPECT_NEAR(b.t(1, 1, 0), 8.0, 1e-12);
  EXPECT_NEAR(b.t(0, 0, 0), 0.0, 1e-12);
  EXPECT_NEAR(b.t(1, 1, 1), 0.0, 1e-12);

  const auto p = catalog_entry("s1xs2").space.coeffs;
  EXPECT_NEAR(p.b[0], 0.0, 1e-12);
  EXPECT_NEAR(p.b[1], 8.0, 1e-12);
  EXPECT_NEAR(p.c[0], 0.0, 1e-12);
  EXPECT_NEAR(p.c[1], 4.0, 1e-12);
  for (double x : p.triples) EXPECT_NEAR(x, 0.0, 1e-12);
  EXPECT_LT(p.dbc_residual, 1e-12);
}

TEST(Isotypic, TrivialIsotropySplitsIntoLines) {
  Decomposition d = decompose(su2_algebra(), Subspace::zero(3));
  EXPECT_EQ(d.block_dims, (std::vector<int>{1, 1, 1}));
  EXPECT_FALSE(d.notes.empty());
}

TEST(Isotypic, ModuleEquivalences) {
  const auto s = catalog_entry("so5_stiefel").space;
  Eigen::MatrixXi e = module_equivalences(s.algebra, s.isotropy, s.decomposition);
  // Blocks 0, 4, 5 are trivial lines; 1, 2, 3 are copies of the rotation of R^2.
  const std::vector<int> triv{0, 4, 5}, rot{1, 2, 3};
  for (int i : triv) {
    for (int j : triv) EXPECT_EQ(e(i, j), 1);
    for (int j : rot) EXPECT_EQ(e(i, j), 0);
  }
  for (int i : rot)
    for (int j : rot) EXPECT_EQ(e(i, j), 2);
  EXPECT_TRUE(e == e.transpose());
}

TEST(Isotypic, AdoptRejectsBadBases) {
  LieAlgebra g = so5_algebra();
  Subspace h = Subspace::from_vectors(cols(10, {0}));
  Mat good = cols(10, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  std::vector<int> dims{1, 2, 2, 2, 1, 1};
  Decomposition d = adopt_decomposition(g, h, good, dims);
  EXPECT_EQ(d.casimir.size(), 6u);

  // A line mixing a trivial and a rotated direction is not invariant.
  Mat mixed = good;
  mixed.col(0) = (good.col(0) + good.col(1)) / std::sqrt(2.0);
  mixed.col(1) = (good.col(0) - good.col(1)) / std::sqrt(2.0);
  EXPECT_THROW(adopt_decomposition(g, h, mixed, dims), ValidationError);

  Mat scaled = good;
  scaled.col(0) *= 2.0;
  EXPECT_THROW(adopt_decomposition(g, h, scaled, dims), ValidationError);
  EXPECT_THROW(adopt_decomposition(g, h, good, {1, 2, 2, 2, 1}), ValidationError);
  Mat with_h = cols(10, {0, 2, 3, 4, 5, 6, 7, 8, 9});
  EXPECT_THROW(adopt_decomposition(g, h, with_h, dims), ValidationError);
}

TEST(Isotypic, MakeSpaceChecksIsotropy) {
  // The u(1) factor is central, so it acts trivially on the complement.
  EXPECT_THROW(make_space("x", u1_su2_algebra(), Subspace::from_vectors(cols(4, {0}))), ValidationError);
  // span(E24) + E45 is not closed.
  EXPECT_THROW(make_space("x", so5_algebra(), Subspace::from_vectors(cols(10, {0, 4}))), ValidationError);
  auto s = make_space("x", so5_algebra(), Subspace::from_vectors(cols(10, {0})));
  EXPECT_EQ(s.num_blocks(), 6);
  EXPECT_TRUE(s.coeffs.consistent());
}

TEST(Isotypic, SubalgebraFromBlocks) {
  const auto s = catalog_entry("so5_stiefel").space;
  Subspace k = s.subalgebra_from_blocks({1});
  EXPECT_EQ(k.dim(), 3);
  EXPECT_TRUE(is_subalgebra(s.algebra, k).holds);
  EXPECT_FALSE(is_subalgebra(s.algebra, s.subalgebra_from_blocks({0, 1})).holds);
}
