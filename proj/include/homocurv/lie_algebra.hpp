#pragma once

#include "homocurv/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace homocurv {

// [e_i, e_j] = sum_k c e_k
struct BracketEntry {
  int i = 0;
  int j = 0;
  int k = 0;
  double c = 0.0;
};

// Real Lie algebra with a fixed basis assumed orthonormal for an ad-invariant inner product Q.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  // Each unordered pair is listed once; the antisymmetric partner is filled in.
  LieAlgebra(std::string name, int dim, const std::vector<BracketEntry>& entries);

  // Structure constants from a dense tensor c[(i*dim + j)*dim + k], taken as is.
  static LieAlgebra from_tensor(std::string name, int dim, std::vector<double> c);
  // Matrix algebra with Q(A,B) = -1/2 tr(AB); the given matrices must be Q-orthonormal and closed.
  static LieAlgebra from_matrices(std::string name, const std::vector<Mat>& basis, double tol = kDefaultTol);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  double c(int i, int j, int k) const { return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k]; }

  // Column j is [e_i, e_j].
  const Mat& ad(int i) const { return ad_[i]; }
  Mat ad(const Vec& x) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  // Same algebra in the Q-orthonormal basis given by the columns of p.
  LieAlgebra change_basis(const Mat& p, double tol = kDefaultTol) const;

  // Nonzero entries with i < j.
  std::vector<BracketEntry> entries(double tol = 1e-14) const;

 private:
  void build_ad();

  std::string name_;
  int dim_ = 0;
  std::vector<double> c_;
  std::vector<Mat> ad_;
};

struct ValidationReport {
  double antisymmetry_residual = 0.0;
  double jacobi_residual = 0.0;
  double invariance_residual = 0.0;  // total antisymmetry of c, i.e. ad-invariance of Q
  bool valid = false;
  std::vector<std::string> failures;
};

ValidationReport validate(const LieAlgebra& g, double tol = kDefaultTol);

// Orthonormal basis of a subspace, columns in ambient coordinates.
struct Subspace {
  Mat basis;
  std::string label;

  int dim() const { return static_cast<int>(basis.cols()); }
  int ambient_dim() const { return static_cast<int>(basis.rows()); }
  Mat projector() const { return basis * basis.transpose(); }

  static Subspace zero(int n, std::string label = {});
  static Subspace whole(int n, std::string label = {});
  // Orthonormalizes the columns; rejects rank-deficient input.
  static Subspace from_vectors(const Mat& vectors, std::string label = {}, double tol = 1e-10);
};

Subspace span_sum(const Subspace& a, const Subspace& b, std::string label = {});
bool contains(const Subspace& big, const Subspace& small, double tol = kDefaultTol);
bool same_subspace(const Subspace& a, const Subspace& b, double tol = kDefaultTol);

struct Residual {
  bool holds = false;
  double residual = 0.0;
};

Mat killing_form(const LieAlgebra& g);

// C = -sum_z ad(z)^2 restricted to m, in the coordinates of m_basis. Requires h closed and [h,m] in m.
Mat casimir_operator(const LieAlgebra& g, const Subspace& h, const Mat& m_basis, double tol = kDefaultTol);

Residual is_subalgebra(const LieAlgebra& g, const Subspace& s, double tol = kDefaultTol);

// [k,k] inside h. Requires h inside k.
Residual is_toral(const LieAlgebra& g, const Subspace& h, const Subspace& k, double tol = kDefaultTol);

// Minimal centralizer dimension inside s over random elements of s.
int rank(const LieAlgebra& g, const Subspace& s, int samples = 8, std::uint64_t seed = 0x5eed,
         double tol = 1e-8);

// {X : [X,h] in h}
Subspace normalizer_algebra(const LieAlgebra& g, const Subspace& h, double tol = 1e-10);

// dim of {X in k : ad(X)|_w = 0}. Requires [k,w] in w.
int representation_kernel(const LieAlgebra& g, const Subspace& k, const Subspace& w, double tol = 1e-10);

}  // namespace homocurv
