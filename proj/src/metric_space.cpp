#include "homocurv/metric_space.hpp"

#include <cmath>
#include <numeric>

namespace homocurv {

int DiagonalMetric::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

void DiagonalMetric::check() const {
  if (lambdas.size() != dims.size()) throw ValidationError("metric has wrong number of coefficients");
  for (double l : lambdas)
    if (!(l > 0.0) || !std::isfinite(l)) throw ValidationError("metric coefficients must be positive and finite");
}

void GeneralMetric::check(double tol) const {
  if (a.rows() != a.cols() || a.rows() != frame.cols()) throw ValidationError("metric matrix has wrong shape");
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > tol * std::max(1.0, a.cwiseAbs().maxCoeff()))
    throw ValidationError("metric matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  if (es.eigenvalues().minCoeff() <= 0.0) throw ValidationError("metric matrix is not positive definite");
}

GeneralMetric to_general(const DiagonalMetric& g, const Decomposition& d) {
  g.check();
  if (g.dims != d.block_dims) throw ValidationError("metric does not match the decomposition");
  GeneralMetric out{d.basis, Mat::Zero(d.m_dim(), d.m_dim())};
  for (int i = 0; i < g.size(); ++i) {
    int o = d.offset(i);
    for (int a = 0; a < d.block_dims[i]; ++a) out.a(o + a, o + a) = g.lambdas[i];
  }
  return out;
}

DiagonalizedMetric diagonalize(const LieAlgebra& alg, const Subspace& h, const GeneralMetric& g,
                               const DecomposeOptions& opts) {
  g.check();
  DecomposeOptions o = opts;
  o.symmetric_constraints.push_back(g.frame * g.a * g.frame.transpose());
  DiagonalizedMetric out;
  out.decomposition = decompose(alg, h, o);
  const Decomposition& d = out.decomposition;
  Mat coords = g.frame.transpose() * d.basis;
  Mat gm = coords.transpose() * g.a * coords;
  out.metric.dims = d.block_dims;
  for (int i = 0; i < d.num_blocks(); ++i) {
    int off = d.offset(i), di = d.block_dims[i];
    double lam = gm.block(off, off, di, di).trace() / di;
    out.metric.lambdas.push_back(lam);
  }
  Mat diag = Mat::Zero(d.m_dim(), d.m_dim());
  for (int i = 0; i < d.num_blocks(); ++i)
    diag.block(d.offset(i), d.offset(i), d.block_dims[i], d.block_dims[i]).diagonal().setConstant(out.metric.lambdas[i]);
  if ((gm - diag).cwiseAbs().maxCoeff() > 1e-7 * std::max(1.0, gm.cwiseAbs().maxCoeff()))
    throw ToleranceError("metric is not diagonal in the refined decomposition");
  return out;
}

double log_volume(const DiagonalMetric& g) {
  g.check();
  double s = 0.0;
  for (int i = 0; i < g.size(); ++i) s += g.dims[i] * std::log(g.lambdas[i]);
  return s;
}

DiagonalMetric normalize_volume(const DiagonalMetric& g) {
  double shift = std::exp(-log_volume(g) / g.total_dim());
  DiagonalMetric out = g;
  for (double& l : out.lambdas) l *= shift;
  return out;
}

DiagonalMetric geodesic(const std::vector<double>& v, const std::vector<int>& dims, double t) {
  if (v.size() != dims.size()) throw ValidationError("direction has wrong length");
  DiagonalMetric out{{}, dims};
  for (double vi : v) out.lambdas.push_back(std::exp(t * vi));
  return out;
}

DirectionTime direction_and_time(const DiagonalMetric& g, double tol) {
  double lv = log_volume(g);
  if (std::abs(lv) > tol * std::max(1.0, static_cast<double>(g.total_dim())))
    throw ValidationError("metric does not have unit volume");
  double norm2 = 0.0;
  for (int i = 0; i < g.size(); ++i) norm2 += g.dims[i] * std::pow(std::log(g.lambdas[i]), 2);
  double t = std::sqrt(norm2);
  if (t <= tol) throw ValidationError("metric is the base point Q; direction undefined");
  DirectionTime out{{}, t};
  for (double l : g.lambdas) out.v.push_back(std::log(l) / t);
  return out;
}

bool in_sigma(const std::vector<double>& v, const std::vector<int>& dims, double tol) {
  if (v.size() != dims.size()) return false;
  double s1 = 0.0, s2 = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    s1 += dims[i] * v[i];
    s2 += dims[i] * v[i] * v[i];
  }
  return std::abs(s1) <= tol && std::abs(s2 - 1.0) <= tol;
}

std::vector<double> project_to_sigma(const std::vector<double>& v, const std::vector<int>& dims) {
  if (v.size() != dims.size()) throw ValidationError("direction has wrong length");
  double m = 0.0, s1 = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    m += dims[i];
    s1 += dims[i] * v[i];
  }
  std::vector<double> w(v.size());
  double s2 = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = v[i] - s1 / m;
    s2 += dims[i] * w[i] * w[i];
  }
  if (s2 <= 1e-300) throw ValidationError("direction has no traceless part");
  for (double& x : w) x /= std::sqrt(s2);
  return w;
}

SubmersionCheck is_submersion_metric(const LieAlgebra& alg, const Subspace& h, const GeneralMetric& g,
                                     const Subspace& k, double tol) {
  g.check();
  if (!contains(k, h, 1e-8)) throw ValidationError("subalgebra does not contain the isotropy");
  if (!is_subalgebra(alg, k, 1e-8).holds) throw ValidationError("not a subalgebra");
  const Mat& f = g.frame;
  Mat pm = f * f.transpose();
  Mat mk = orthonormalize(pm * k.basis);  // k = h + m_k
  Mat mk_c = f.transpose() * mk;
  Mat perp_c = complement_basis(mk_c);  // inside frame coordinates
  SubmersionCheck out;
  if (mk_c.cols() > 0 && perp_c.cols() > 0)
    out.orthogonality_residual = (mk_c.transpose() * g.a * perp_c).cwiseAbs().maxCoeff();
  Mat ap = perp_c.transpose() * g.a * perp_c;
  Mat perp_amb = f * perp_c;
  for (int b = 0; b < k.dim(); ++b) {
    Mat r = perp_amb.transpose() * alg.ad(Vec(k.basis.col(b))) * perp_amb;
    if (ap.size() > 0) out.equivariance_residual = std::max(out.equivariance_residual, (ap * r - r * ap).cwiseAbs().maxCoeff());
  }
  double scale = std::max(1.0, g.a.cwiseAbs().maxCoeff());
  out.holds = out.orthogonality_residual <= tol * scale && out.equivariance_residual <= tol * scale;
  return out;
}

}  // namespace homocurv
