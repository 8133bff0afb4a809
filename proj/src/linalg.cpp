#include "homocurv/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace homocurv {

namespace {

double threshold(const Eigen::VectorXd& sv, double tol) {
  double smax = sv.size() > 0 ? sv.maxCoeff() : 0.0;
  return tol * std::max(1.0, smax);
}

}  // namespace

Mat null_space(const Mat& a, double tol) {
  const Eigen::Index n = a.cols();
  if (n == 0) return Mat(0, 0);
  if (a.rows() == 0) return Mat::Identity(n, n);
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  const Vec& sv = svd.singularValues();
  double thr = threshold(sv, tol);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > thr) ++r;
  return svd.matrixV().rightCols(n - r);
}

int numerical_rank(const Mat& a, double tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(a);
  const Vec& sv = svd.singularValues();
  double thr = threshold(sv, tol);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > thr) ++r;
  return r;
}

Mat orthonormalize(const Mat& a, double tol) {
  Mat out(a.rows(), 0);
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    Vec v = a.col(c);
    double n0 = v.norm();
    if (n0 <= tol) continue;
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index k = 0; k < out.cols(); ++k) v -= out.col(k).dot(v) * out.col(k);
    if (v.norm() <= tol * std::max(1.0, n0)) continue;
    out.conservativeResize(Eigen::NoChange, out.cols() + 1);
    out.col(out.cols() - 1) = v.normalized();
  }
  return out;
}

Mat complement_basis(const Mat& a, double tol) {
  const Eigen::Index n = a.rows();
  Mat q = orthonormalize(a, tol);
  Mat out(n, 0);
  // Greedy: take the standard vector with the largest residual each time.
  while (q.cols() + out.cols() < n) {
    Eigen::Index best = -1;
    double best_norm = 0.0;
    Vec best_v;
    for (Eigen::Index i = 0; i < n; ++i) {
      Vec v = Vec::Unit(n, i);
      for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index k = 0; k < q.cols(); ++k) v -= q.col(k).dot(v) * q.col(k);
        for (Eigen::Index k = 0; k < out.cols(); ++k) v -= out.col(k).dot(v) * out.col(k);
      }
      if (v.norm() > best_norm + 1e-12) {
        best_norm = v.norm();
        best = i;
        best_v = v;
      }
    }
    if (best < 0 || best_norm <= tol) throw std::logic_error("complement_basis: rank deficiency");
    out.conservativeResize(Eigen::NoChange, out.cols() + 1);
    out.col(out.cols() - 1) = best_v.normalized();
  }
  return out;
}

Mat random_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = gauss(rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  return q;
}

Mat spd_power(const Mat& a, double p) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  if (es.eigenvalues().minCoeff() <= 0.0) throw ValidationError("matrix is not positive definite");
  Vec d = es.eigenvalues().array().pow(p);
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

std::string shape_string(const Mat& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace homocurv
