#pragma once

#include "homocurv/isotypic.hpp"

#include <vector>

namespace homocurv {

// g = sum_i lambda_i Q|_{m_i} for a fixed decomposition.
struct DiagonalMetric {
  std::vector<double> lambdas;
  std::vector<int> dims;

  int size() const { return static_cast<int>(lambdas.size()); }
  int total_dim() const;
  void check() const;
};

// g(x, y) = (F^T x)^T A (F^T y) on m, where the columns of F are a Q-orthonormal basis of m.
struct GeneralMetric {
  Mat frame;
  Mat a;

  void check(double tol = 1e-9) const;
};

GeneralMetric to_general(const DiagonalMetric& g, const Decomposition& d);

// A decomposition adapted to both the isotropy and the metric, with g diagonal in it.
struct DiagonalizedMetric {
  Decomposition decomposition;
  DiagonalMetric metric;
};
DiagonalizedMetric diagonalize(const LieAlgebra& alg, const Subspace& h, const GeneralMetric& g,
                               const DecomposeOptions& opts = {});

double log_volume(const DiagonalMetric& g);  // sum d_i log lambda_i
DiagonalMetric normalize_volume(const DiagonalMetric& g);

// gamma_v(t): lambda_i = exp(t v_i)
DiagonalMetric geodesic(const std::vector<double>& v, const std::vector<int>& dims, double t);

struct DirectionTime {
  std::vector<double> v;
  double t = 0.0;
};
// Inverse of geodesic on unit-volume metrics other than Q.
DirectionTime direction_and_time(const DiagonalMetric& g, double tol = kDefaultTol);

// Sigma: sum d_i v_i = 0 and sum d_i v_i^2 = 1.
bool in_sigma(const std::vector<double>& v, const std::vector<int>& dims, double tol = kDefaultTol);
std::vector<double> project_to_sigma(const std::vector<double>& v, const std::vector<int>& dims);

struct SubmersionCheck {
  bool holds = false;
  double orthogonality_residual = 0.0;  // g(m_k, m_k^perp)
  double equivariance_residual = 0.0;   // Ad(K)-invariance of g on m_k^perp
};
// Requires k to be a subalgebra containing h.
SubmersionCheck is_submersion_metric(const LieAlgebra& alg, const Subspace& h, const GeneralMetric& g,
                                     const Subspace& k, double tol = kDefaultTol);

}  // namespace homocurv
