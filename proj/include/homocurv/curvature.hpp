#pragma once

#include "homocurv/metric_space.hpp"

#include <vector>

namespace homocurv {

// Levi-Civita data of an invariant metric, in coordinates of the metric frame.
class Geometry {
 public:
  Geometry(const LieAlgebra& alg, const Subspace& h, const GeneralMetric& g);

  int dim() const { return n_; }
  const GeneralMetric& metric() const { return g_; }

  double inner(const Vec& x, const Vec& y) const { return x.dot(g_.a * y); }
  Mat ad_m(const Vec& x) const;     // y -> [x,y]_m
  Vec bracket_m(const Vec& x, const Vec& y) const { return ad_m(x) * y; }
  Vec bracket_h(const Vec& x, const Vec& y) const;  // coordinates in the isotropy basis
  Mat ad_h_on_m(const Vec& z) const;                // isotropy element acting on m

  Vec u(const Vec& x, const Vec& y) const;          // 2g(U(x,y),z) = g([z,x]_m,y) + g([z,y]_m,x)
  Mat lambda(const Vec& x) const;                   // Nomizu map: 1/2 [x,.]_m + U(x,.)
  Mat r(const Vec& x, const Vec& y) const;          // R(x,y) as an operator on m

  // Columns: a g-orthonormal basis (A^{-1/2}).
  const Mat& orthonormal_frame() const { return on_; }

  // Curvature operator on pairs (a<b) of the orthonormal frame, lexicographic order.
  // Entry (p,q) = g(R(u_a,u_b) u_d, u_c) for p=(a,b), q=(c,d).
  Mat curvature_operator() const;
  Mat ricci_matrix() const;  // Ric(u_a, u_b)
  double bianchi_residual() const;

 private:
  int n_ = 0;
  int nh_ = 0;
  GeneralMetric g_;
  Mat ainv_;
  Mat on_;
  std::vector<Mat> adm_;  // ad_m(f_a)
  std::vector<Mat> rz_;   // isotropy basis element acting on m
  Mat th_;                // (z, a*n+b) = Q([f_a,f_b], z)
};

struct CurvatureReport {
  std::vector<double> ric;  // per block, when the metric is block diagonal
  double scal = 0.0;
  double ric_norm = 0.0;
  double traceless_ric_norm = 0.0;
  double rm_frobenius = 0.0;
  double rm_over_ric = 0.0;  // infinite when Ric = 0
  Mat rm_matrix;
  Mat ricci_matrix;
};

// block_dims, when given, must describe the metric frame; then ric holds the per-block values.
CurvatureReport curvature_report(const LieAlgebra& alg, const Subspace& h, const GeneralMetric& g,
                                 const std::vector<int>& block_dims = {});
CurvatureReport curvature_report(const LieAlgebra& alg, const Subspace& h, const Decomposition& d,
                                 const DiagonalMetric& g);

// Closed forms in the structure coefficients.
std::vector<double> ricci_diagonal(const CoefficientTable& t, const DiagonalMetric& g);
double scalar_curvature(const CoefficientTable& t, const DiagonalMetric& g);

// Sectional curvature of span(x, y), x and y in m given in ambient coordinates.
// Slow path: formula in brackets and U only, no curvature tensor.
double sectional_oracle(const LieAlgebra& alg, const Subspace& h, const GeneralMetric& g, const Vec& x, const Vec& y);
// Fast path for Q-orthonormal x in m_i and y in m_j of a diagonal metric.
double sectional_diagonal(const LieAlgebra& alg, const Subspace& h, const Decomposition& d, const DiagonalMetric& g,
                          int i, int j, const Vec& x, const Vec& y);
// From the assembled tensor.
double sectional_from_tensor(const Geometry& geo, const Vec& x, const Vec& y);

// Largest |g(II(X1,X2), X3)| over X1,X2 in m_k and X3 in the g-complement of m_k.
// Requires k a subalgebra containing h.
double second_fundamental_form(const LieAlgebra& alg, const Subspace& h, const GeneralMetric& g, const Subspace& k);

}  // namespace homocurv
