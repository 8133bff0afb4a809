#include "homocurv/catalog.hpp"

#include <cmath>

namespace homocurv {

Mat so_generator(int n, int a, int b) {
  Mat m = Mat::Zero(n, n);
  m(b - 1, a - 1) = 1.0;
  m(a - 1, b - 1) = -1.0;
  return m;
}

LieAlgebra su2_algebra() {
  return LieAlgebra("su2", 3, {{0, 1, 2, -2.0}, {1, 2, 0, -2.0}, {0, 2, 1, 2.0}});
}

LieAlgebra so5_algebra() {
  const int pairs[10][2] = {{4, 5}, {2, 3}, {3, 4}, {3, 5}, {2, 4}, {2, 5}, {1, 4}, {1, 5}, {1, 3}, {1, 2}};
  std::vector<Mat> basis;
  for (const auto& p : pairs) basis.push_back(so_generator(5, p[0], p[1]));
  return LieAlgebra::from_matrices("so5", basis);
}

LieAlgebra u1_su2_algebra() {
  return LieAlgebra("u1+su2", 4, {{1, 2, 3, -2.0}, {2, 3, 1, -2.0}, {1, 3, 2, 2.0}});
}

namespace {

Mat columns(int n, const std::vector<int>& idx) {
  Mat m = Mat::Zero(n, static_cast<Eigen::Index>(idx.size()));
  for (size_t c = 0; c < idx.size(); ++c) m(idx[c], static_cast<Eigen::Index>(c)) = 1.0;
  return m;
}

CatalogEntry berger() {
  CatalogEntry e;
  Mat basis = Mat::Identity(3, 3);
  std::vector<int> dims{1, 2};
  e.space = make_space("su2_berger", su2_algebra(), Subspace::zero(3, "h"), &basis, &dims, {}, true);
  SequenceSpec seq;
  seq.blocks = {{1.0, -2.0}, {1.0, 1.0}};
  e.sequence = seq;
  e.direction = std::vector<double>{-std::sqrt(6.0) / 3.0, std::sqrt(6.0) / 6.0};
  e.description = "SU(2) with H trivial; Berger blocks span(X1), span(X2,X3)";
  return e;
}

CatalogEntry stiefel() {
  CatalogEntry e;
  Mat basis = columns(10, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  std::vector<int> dims{1, 2, 2, 2, 1, 1};
  e.space = make_space("so5_stiefel", so5_algebra(), Subspace::from_vectors(columns(10, {0}), "h"), &basis, &dims, {},
                       true);
  SequenceSpec seq;
  seq.blocks = {{0.25, -4.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {2.0, 1.0}, {2.0, 1.0}};
  e.sequence = seq;
  const double r = std::sqrt(20.0);
  e.direction = std::vector<double>{-4.0 / r, 0.0, 0.0, 1.0 / r, 1.0 / r, 1.0 / r};
  e.description = "Stiefel manifold SO(5)/SO(2)";
  return e;
}

CatalogEntry s1xs2() {
  CatalogEntry e;
  Mat basis = columns(4, {0, 2, 3});
  std::vector<int> dims{1, 2};
  e.space = make_space("s1xs2", u1_su2_algebra(), Subspace::from_vectors(columns(4, {1}), "h"), &basis, &dims, {},
                       false);
  SequenceSpec seq;
  seq.blocks = {{1.0, -2.0}, {1.0, 1.0}};
  e.sequence = seq;
  e.description = "S^1 x S^2 = (U(1) x SU(2))/U(1)";
  return e;
}

}  // namespace

std::vector<std::string> catalog_names() { return {"su2_berger", "so5_stiefel", "s1xs2"}; }

CatalogEntry catalog_entry(const std::string& name) {
  if (name == "su2_berger") return berger();
  if (name == "so5_stiefel") return stiefel();
  if (name == "s1xs2") return s1xs2();
  throw ValidationError("unknown catalog space: " + name);
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& n : catalog_names()) out.push_back(catalog_entry(n));
  return out;
}

}  // namespace homocurv
