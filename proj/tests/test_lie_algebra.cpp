#include "homocurv/catalog.hpp"
#include "homocurv/lie_algebra.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace homocurv;

namespace {

double q_matrix(const Mat& a, const Mat& b) { return -0.5 * (a * b).trace(); }

std::vector<Mat> so5_matrices() {
  const int pairs[10][2] = {{4, 5}, {2, 3}, {3, 4}, {3, 5}, {2, 4}, {2, 5}, {1, 4}, {1, 5}, {1, 3}, {1, 2}};
  std::vector<Mat> out;
  for (const auto& p : pairs) {
    Mat m = Mat::Zero(5, 5);
    m(p[1] - 1, p[0] - 1) = 1.0;
    m(p[0] - 1, p[1] - 1) = -1.0;
    out.push_back(m);
  }
  return out;
}

Vec unit(int n, int i) {
  Vec v = Vec::Zero(n);
  v(i) = 1.0;
  return v;
}

Subspace span_of(int n, std::initializer_list<int> idx) {
  Mat m = Mat::Zero(n, static_cast<Eigen::Index>(idx.size()));
  int c = 0;
  for (int i : idx) m(i, c++) = 1.0;
  return Subspace::from_vectors(m);
}

}  // namespace

TEST(LieAlgebra, Su2Brackets) {
  LieAlgebra g = su2_algebra();
  // [X1,X2] = -2X3, [X2,X3] = -2X1, [X3,X1] = -2X2
  EXPECT_DOUBLE_EQ(g.c(0, 1, 2), -2.0);
  EXPECT_DOUBLE_EQ(g.c(1, 2, 0), -2.0);
  EXPECT_DOUBLE_EQ(g.c(2, 0, 1), -2.0);
  EXPECT_DOUBLE_EQ(g.c(1, 0, 2), 2.0);
  Vec br = g.bracket(unit(3, 0), unit(3, 1));
  EXPECT_NEAR((br - (-2.0) * unit(3, 2)).norm(), 0.0, 1e-15);
  EXPECT_TRUE(validate(g).valid);
}

TEST(LieAlgebra, So5MatchesMatrixCommutators) {
  auto mats = so5_matrices();
  LieAlgebra g = so5_algebra();
  ASSERT_EQ(g.dim(), 10);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      Mat br = mats[i] * mats[j] - mats[j] * mats[i];
      for (int k = 0; k < 10; ++k) EXPECT_NEAR(g.c(i, j, k), q_matrix(br, mats[k]), 1e-14);
    }
  auto rep = validate(g);
  EXPECT_TRUE(rep.valid);
  EXPECT_LT(rep.jacobi_residual, 1e-12);
  EXPECT_LT(rep.invariance_residual, 1e-14);
}

TEST(LieAlgebra, AdColumnsAreBrackets) {
  LieAlgebra g = so5_algebra();
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  Vec x(10), y(10);
  for (int i = 0; i < 10; ++i) {
    x(i) = nd(rng);
    y(i) = nd(rng);
  }
  Vec direct = Vec::Zero(10);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      for (int k = 0; k < 10; ++k) direct(k) += x(i) * y(j) * g.c(i, j, k);
  EXPECT_LT((g.bracket(x, y) - direct).norm(), 1e-13);
  EXPECT_LT((g.ad(x) * y - direct).norm(), 1e-13);
}

TEST(LieAlgebra, KillingFormOfSo5) {
  // so(n): B(X,Y) = (n-2) tr(XY), and tr(XY) = -2 Q(X,Y)
  auto mats = so5_matrices();
  Mat b = killing_form(so5_algebra());
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) EXPECT_NEAR(b(i, j), 3.0 * (mats[i] * mats[j]).trace(), 1e-12);
  EXPECT_NEAR(b(0, 0), -6.0, 1e-12);
}

TEST(LieAlgebra, ValidateFlagsBrokenAxioms) {
  // Totally antisymmetric but random: invariant, not Jacobi.
  const int n = 5;  // in dimension 4 every such tensor is so(3)+R
  std::vector<double> c(n * n * n, 0.0);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        double v = u(rng);
        int p[3] = {i, j, k};
        int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
        for (int s = 0; s < 6; ++s) c[(p[perms[s][0]] * n + p[perms[s][1]]) * n + p[perms[s][2]]] = s < 3 ? v : -v;
      }
  auto rep = validate(LieAlgebra::from_tensor("bad", n, c));
  EXPECT_FALSE(rep.valid);
  EXPECT_GT(rep.jacobi_residual, 1e-3);
  EXPECT_LT(rep.invariance_residual, 1e-14);
  EXPECT_FALSE(rep.failures.empty());

  std::vector<double> c2(27, 0.0);
  c2[(0 * 3 + 1) * 3 + 2] = 1.0;  // [e0,e1] = e2 without the partner entry
  auto rep2 = validate(LieAlgebra::from_tensor("asym", 3, c2));
  EXPECT_FALSE(rep2.valid);
  EXPECT_GT(rep2.antisymmetry_residual, 0.5);
}

TEST(LieAlgebra, ConstructorRejectsMalformedEntries) {
  EXPECT_THROW(LieAlgebra("x", 3, {{0, 3, 1, 1.0}}), ValidationError);
  EXPECT_THROW(LieAlgebra("x", 3, {{1, 1, 0, 1.0}}), ValidationError);
  EXPECT_THROW(LieAlgebra("x", 3, {{0, 1, 2, 1.0}, {1, 0, 2, 1.0}}), ValidationError);
  EXPECT_NO_THROW(LieAlgebra("x", 3, {{0, 1, 2, 1.0}, {1, 0, 2, -1.0}}));
  EXPECT_THROW(LieAlgebra("x", 0, {}), ValidationError);
  EXPECT_THROW(LieAlgebra::from_tensor("x", 2, std::vector<double>(7, 0.0)), ValidationError);
}

TEST(LieAlgebra, FromMatricesRejectsBadBasis) {
  auto mats = so5_matrices();
  std::vector<Mat> scaled{2.0 * mats[0]};
  EXPECT_THROW(LieAlgebra::from_matrices("x", scaled), ValidationError);
  std::vector<Mat> open{mats[1], mats[2]};  // E23, E34 bracket to E24
  EXPECT_THROW(LieAlgebra::from_matrices("x", open), ValidationError);
}

TEST(LieAlgebra, ChangeBasisMatchesBrackets) {
  LieAlgebra g = so5_algebra();
  std::mt19937_64 rng(5);
  Mat p = random_orthogonal(10, rng);
  LieAlgebra h = g.change_basis(p);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      Vec br = g.bracket(p.col(i), p.col(j));
      for (int k = 0; k < 10; ++k) EXPECT_NEAR(h.c(i, j, k), br.dot(p.col(k)), 1e-12);
    }
  EXPECT_TRUE(validate(h).valid);
}

TEST(LieAlgebra, EntriesRoundTrip) {
  LieAlgebra g = so5_algebra();
  LieAlgebra h("copy", 10, g.entries());
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      for (int k = 0; k < 10; ++k) EXPECT_EQ(g.c(i, j, k), h.c(i, j, k));
}

TEST(LieAlgebra, SubspaceHelpers) {
  Mat v(3, 2);
  v << 1, 1, 0, 1, 0, 0;
  Subspace s = Subspace::from_vectors(v);
  EXPECT_EQ(s.dim(), 2);
  EXPECT_LT((s.basis.transpose() * s.basis - Mat::Identity(2, 2)).norm(), 1e-14);
  EXPECT_TRUE(same_subspace(s, span_of(3, {0, 1})));
  EXPECT_TRUE(contains(s, span_of(3, {1})));
  EXPECT_FALSE(contains(s, span_of(3, {2})));
  Mat dep(3, 2);
  dep << 1, 2, 0, 0, 0, 0;
  EXPECT_THROW(Subspace::from_vectors(dep), ValidationError);
  EXPECT_EQ(span_sum(span_of(3, {0}), span_of(3, {2})).dim(), 2);
}

TEST(LieAlgebra, SubalgebraAndToral) {
  LieAlgebra g = so5_algebra();
  // h = E45, m2 = (E34,E35), m1 = E23: h+m2 is so(3) on {3,4,5}; adding E23 is not closed.
  Subspace h = span_of(10, {0});
  Subspace k_ok = span_of(10, {0, 2, 3});
  Subspace k_bad = span_of(10, {0, 1, 2, 3});
  EXPECT_TRUE(is_subalgebra(g, k_ok).holds);
  auto bad = is_subalgebra(g, k_bad);
  EXPECT_FALSE(bad.holds);
  EXPECT_GT(bad.residual, 0.5);
  // h + E23 is abelian; so(3) is not.
  Subspace torus = span_of(10, {0, 1});
  EXPECT_TRUE(is_subalgebra(g, torus).holds);
  EXPECT_TRUE(is_toral(g, h, torus).holds);
  EXPECT_FALSE(is_toral(g, h, k_ok).holds);
  EXPECT_THROW(is_toral(g, span_of(10, {4}), torus), ValidationError);
}

TEST(LieAlgebra, RankAndNormalizer) {
  EXPECT_EQ(rank(su2_algebra(), Subspace::whole(3)), 1);
  EXPECT_EQ(rank(so5_algebra(), Subspace::whole(10)), 2);
  EXPECT_EQ(rank(u1_su2_algebra(), Subspace::whole(4)), 2);
  // Normalizer of so(2) on {4,5} inside so(5) is so(3) + so(2).
  Subspace n = normalizer_algebra(so5_algebra(), span_of(10, {0}));
  EXPECT_EQ(n.dim(), 4);
  EXPECT_TRUE(same_subspace(n, span_of(10, {0, 1, 8, 9})));
}

TEST(LieAlgebra, RepresentationKernel) {
  LieAlgebra g = u1_su2_algebra();
  // k = u(1) + span(X1) acting on span(X2,X3): the u(1) factor acts trivially.
  Subspace k = span_of(4, {0, 1});
  Subspace w = span_of(4, {2, 3});
  EXPECT_EQ(representation_kernel(g, k, w), 1);
  EXPECT_EQ(representation_kernel(so5_algebra(), span_of(10, {0}), span_of(10, {2, 3})), 0);
}

TEST(LieAlgebra, CasimirOnStiefelComplement) {
  LieAlgebra g = so5_algebra();
  Subspace h = span_of(10, {0});
  Mat m = Mat::Zero(10, 9);
  for (int i = 0; i < 9; ++i) m(i + 1, i) = 1.0;
  Mat c = casimir_operator(g, h, m);
  // Brute force: -sum ad(E)^2 on each basis vector.
  for (int a = 0; a < 9; ++a) {
    Vec x = m.col(a);
    Vec y = -g.bracket(unit(10, 0), g.bracket(unit(10, 0), x));
    for (int b = 0; b < 9; ++b) EXPECT_NEAR(c(b, a), y.dot(m.col(b)), 1e-14);
  }
  EXPECT_NEAR(c(0, 0), 0.0, 1e-14);
  EXPECT_NEAR(c(1, 1), 1.0, 1e-14);
}
