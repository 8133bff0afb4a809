#include "homocurv/curvature.hpp"

#include <cmath>
#include <limits>

namespace homocurv {

Geometry::Geometry(const LieAlgebra& alg, const Subspace& h, const GeneralMetric& g)
    : n_(static_cast<int>(g.frame.cols())), nh_(h.dim()), g_(g) {
  g.check();
  if (g.frame.rows() != alg.dim() || n_ + nh_ != alg.dim())
    throw ValidationError("metric frame does not complement the isotropy");
  const Mat& f = g.frame;
  ainv_ = g.a.inverse();
  on_ = spd_power(g.a, -0.5);
  adm_.resize(n_);
  th_ = Mat::Zero(nh_, n_ * n_);
  for (int a = 0; a < n_; ++a) {
    Mat full = alg.ad(Vec(f.col(a))) * f;
    adm_[a] = f.transpose() * full;
    if (nh_ > 0) {
      Mat hp = h.basis.transpose() * full;
      for (int b = 0; b < n_; ++b) th_.col(a * n_ + b) = hp.col(b);
    }
  }
  for (int z = 0; z < nh_; ++z) rz_.push_back(f.transpose() * alg.ad(Vec(h.basis.col(z))) * f);
}

Mat Geometry::ad_m(const Vec& x) const {
  Mat m = Mat::Zero(n_, n_);
  for (int a = 0; a < n_; ++a)
    if (x(a) != 0.0) m += x(a) * adm_[a];
  return m;
}

Vec Geometry::bracket_h(const Vec& x, const Vec& y) const {
  Vec out = Vec::Zero(nh_);
  if (nh_ == 0) return out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) out += x(a) * y(b) * th_.col(a * n_ + b);
  return out;
}

Mat Geometry::ad_h_on_m(const Vec& z) const {
  Mat m = Mat::Zero(n_, n_);
  for (int k = 0; k < nh_; ++k) m += z(k) * rz_[k];
  return m;
}

Vec Geometry::u(const Vec& x, const Vec& y) const {
  Vec w = -(ad_m(x).transpose() * (g_.a * y)) - ad_m(y).transpose() * (g_.a * x);
  return 0.5 * ainv_ * w;
}

Mat Geometry::lambda(const Vec& x) const {
  Mat adx = ad_m(x);
  Vec ax = g_.a * x;
  Mat w = -adx.transpose() * g_.a;
  for (int b = 0; b < n_; ++b) w.col(b) -= adm_[b].transpose() * ax;
  return 0.5 * adx + 0.5 * ainv_ * w;
}

Mat Geometry::r(const Vec& x, const Vec& y) const {
  Mat lx = lambda(x), ly = lambda(y);
  return lx * ly - ly * lx - lambda(bracket_m(x, y)) - ad_h_on_m(bracket_h(x, y));
}

Mat Geometry::curvature_operator() const {
  const int np = n_ * (n_ - 1) / 2;
  std::vector<Mat> lu(n_);
  for (int a = 0; a < n_; ++a) lu[a] = lambda(Vec(on_.col(a)));
  Mat out(np, np);
  Mat gu = g_.a * on_;
  int p = 0;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b, ++p) {
      Vec ua = on_.col(a), ub = on_.col(b);
      Mat rab = lu[a] * lu[b] - lu[b] * lu[a] - lambda(bracket_m(ua, ub)) - ad_h_on_m(bracket_h(ua, ub));
      Mat img = gu.transpose() * rab * on_;  // (c, d) = g(u_c, R u_d)
      int q = 0;
      for (int c = 0; c < n_; ++c)
        for (int d = c + 1; d < n_; ++d, ++q) out(p, q) = img(c, d);
    }
  return out;
}

Mat Geometry::ricci_matrix() const {
  std::vector<Mat> lu(n_);
  for (int a = 0; a < n_; ++a) lu[a] = lambda(Vec(on_.col(a)));
  Mat gu = g_.a * on_;
  Mat ric = Mat::Zero(n_, n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (a == b) continue;
      Vec ua = on_.col(a), ub = on_.col(b);
      Mat rab = lu[a] * lu[b] - lu[b] * lu[a] - lambda(bracket_m(ua, ub)) - ad_h_on_m(bracket_h(ua, ub));
      // Ric(u_b, u_c) += g(R(u_a,u_b)u_c, u_a)
      ric.row(b) += gu.col(a).transpose() * rab * on_;
    }
  return 0.5 * (ric + ric.transpose());
}

double Geometry::bianchi_residual() const {
  std::vector<Mat> rr(static_cast<size_t>(n_) * n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) rr[a * n_ + b] = r(Vec(on_.col(a)), Vec(on_.col(b)));
  double res = 0.0;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c) {
        Vec s = rr[a * n_ + b] * on_.col(c) + rr[b * n_ + c] * on_.col(a) + rr[c * n_ + a] * on_.col(b);
        res = std::max(res, std::sqrt(std::max(0.0, inner(s, s))));
      }
  return res;
}

CurvatureReport curvature_report(const LieAlgebra& alg, const Subspace& h, const GeneralMetric& g,
                                 const std::vector<int>& block_dims) {
  Geometry geo(alg, h, g);
  CurvatureReport rep;
  rep.rm_matrix = geo.curvature_operator();
  rep.ricci_matrix = geo.ricci_matrix();
  const int n = geo.dim();
  rep.scal = rep.ricci_matrix.trace();
  rep.ric_norm = rep.ricci_matrix.norm();
  rep.traceless_ric_norm = (rep.ricci_matrix - (rep.scal / n) * Mat::Identity(n, n)).norm();
  rep.rm_frobenius = rep.rm_matrix.norm();
  rep.rm_over_ric = rep.ric_norm > 0.0 ? rep.rm_frobenius / rep.ric_norm : std::numeric_limits<double>::infinity();
  if (!block_dims.empty()) {
    Mat half = spd_power(g.a, 0.5);
    Mat ric_f = half * rep.ricci_matrix * half;
    int off = 0;
    for (int d : block_dims) {
      double s = 0.0;
      for (int a = off; a < off + d; ++a) s += ric_f(a, a) / g.a(a, a);
      rep.ric.push_back(s / d);
      off += d;
    }
    if (off != n) throw ValidationError("block dimensions do not match the metric frame");
  }
  return rep;
}

CurvatureReport curvature_report(const LieAlgebra& alg, const Subspace& h, const Decomposition& d,
                                 const DiagonalMetric& g) {
  return curvature_report(alg, h, to_general(g, d), d.block_dims);
}

namespace {

// a + b - c, subtracting the closer pair first so equal values cancel exactly.
double plus_plus_minus(double a, double b, double c) {
  return std::abs(a - c) <= std::abs(b - c) ? (a - c) + b : (b - c) + a;
}

}  // namespace

// With d_i b_i = 2 d_i c_i + sum_jk [ijk] substituted, each (j,k) term becomes
// [ijk] (l_i + l_k - l_j)(l_i + l_j - l_k) / (l_i l_j l_k), which has no large cancelling parts.
std::vector<double> ricci_diagonal(const CoefficientTable& t, const DiagonalMetric& g) {
  g.check();
  if (g.dims != t.dims) throw ValidationError("metric does not match the coefficient table");
  const int l = t.size();
  const auto& lam = g.lambdas;
  std::vector<double> ric(l);
  for (int i = 0; i < l; ++i) {
    double s = 0.0;
    for (int j = 0; j < l; ++j)
      for (int k = 0; k < l; ++k) {
        double c = t.t(i, j, k);
        if (c == 0.0) continue;
        double p = plus_plus_minus(lam[i], lam[k], lam[j]) / lam[j];
        double q = plus_plus_minus(lam[i], lam[j], lam[k]) / lam[k];
        s += c * p * q;
      }
    ric[i] = (t.c[i] + s / (4.0 * t.dims[i])) / lam[i];
  }
  return ric;
}

double scalar_curvature(const CoefficientTable& t, const DiagonalMetric& g) {
  auto ric = ricci_diagonal(t, g);
  double s = 0.0;
  for (int i = 0; i < t.size(); ++i) s += t.dims[i] * ric[i];
  return s;
}

namespace {

// Ambient-coordinate helpers for the oracle, kept separate from Geometry on purpose.
struct Ambient {
  const LieAlgebra& alg;
  const GeneralMetric& g;
  Mat pm;
  Mat ainv;
  Ambient(const LieAlgebra& a, const GeneralMetric& m) : alg(a), g(m), pm(m.frame * m.frame.transpose()), ainv(m.a.inverse()) {}

  double ip(const Vec& x, const Vec& y) const { return (g.frame.transpose() * x).dot(g.a * (g.frame.transpose() * y)); }
  Vec br(const Vec& x, const Vec& y) const { return alg.bracket(x, y); }
  Vec brm(const Vec& x, const Vec& y) const { return pm * br(x, y); }
  Vec uu(const Vec& x, const Vec& y) const {
    const Eigen::Index n = g.frame.cols();
    Vec w(n);
    for (Eigen::Index c = 0; c < n; ++c) {
      Vec fc = g.frame.col(c);
      w(c) = ip(brm(fc, x), y) + ip(brm(fc, y), x);
    }
    return g.frame * (0.5 * ainv * w);
  }
};

}  // namespace

double sectional_oracle(const LieAlgebra& alg, const Subspace& /*h*/, const GeneralMetric& g, const Vec& x, const Vec& y) {
  g.check();
  Ambient am(alg, g);
  Vec px = am.pm * x, py = am.pm * y;
  double nx = std::sqrt(am.ip(px, px));
  if (nx <= 0.0) throw ValidationError("degenerate plane");
  Vec xs = px / nx;
  Vec yr = py - am.ip(py, xs) * xs;
  double ny = std::sqrt(am.ip(yr, yr));
  if (ny <= 1e-12 * std::max(1.0, std::sqrt(am.ip(py, py)))) throw ValidationError("degenerate plane");
  Vec ys = yr / ny;
  Vec xy = am.br(xs, ys);
  Vec xym = am.pm * xy;
  double sec = -0.75 * am.ip(xym, xym);
  sec -= 0.5 * am.ip(am.pm * am.br(xs, xy), ys);
  sec -= 0.5 * am.ip(am.pm * am.br(ys, am.br(ys, xs)), xs);
  Vec uxy = am.uu(xs, ys);
  sec += am.ip(uxy, uxy);
  sec -= am.ip(am.uu(xs, xs), am.uu(ys, ys));
  return sec;
}

double sectional_diagonal(const LieAlgebra& alg, const Subspace& h, const Decomposition& d, const DiagonalMetric& g,
                          int i, int j, const Vec& x, const Vec& y) {
  g.check();
  if (i < 0 || j < 0 || i >= d.num_blocks() || j >= d.num_blocks()) throw ValidationError("block index out of range");
  Vec br = alg.bracket(x, y);
  const auto& lam = g.lambdas;
  double sec = 0.0;
  if (i == j) {
    double hpart = h.dim() > 0 ? (h.basis.transpose() * br).squaredNorm() : 0.0;
    sec += hpart / lam[i];
    for (int k = 0; k < d.num_blocks(); ++k) {
      double nk = (d.block(k).transpose() * br).squaredNorm();
      sec += (4.0 * lam[i] - 3.0 * lam[k]) / (4.0 * lam[i] * lam[i]) * nk;
    }
  } else {
    for (int k = 0; k < d.num_blocks(); ++k) {
      double nk = (d.block(k).transpose() * br).squaredNorm();
      if (nk == 0.0) continue;
      double li = lam[i], lj = lam[j], lk = lam[k];
      sec += (li * li + lj * lj - 3.0 * lk * lk - 2.0 * li * lj + 2.0 * li * lk + 2.0 * lj * lk) / (4.0 * li * lj * lk) * nk;
    }
  }
  return sec;
}

double sectional_from_tensor(const Geometry& geo, const Vec& x, const Vec& y) {
  const GeneralMetric& g = geo.metric();
  Vec xc = g.frame.transpose() * x, yc = g.frame.transpose() * y;
  double area = geo.inner(xc, xc) * geo.inner(yc, yc) - std::pow(geo.inner(xc, yc), 2);
  if (area <= 0.0) throw ValidationError("degenerate plane");
  return geo.inner(geo.r(xc, yc) * yc, xc) / area;
}

double second_fundamental_form(const LieAlgebra& alg, const Subspace& h, const GeneralMetric& g, const Subspace& k) {
  g.check();
  if (!contains(k, h, 1e-8)) throw ValidationError("subalgebra does not contain the isotropy");
  if (!is_subalgebra(alg, k, 1e-8).holds) throw ValidationError("not a subalgebra");
  const Mat& f = g.frame;
  Mat mk = f.transpose() * orthonormalize(f * f.transpose() * k.basis);
  // g-orthogonal complement of m_k inside m, frame coordinates
  Mat perp = null_space((g.a * mk).transpose());
  Geometry geo(alg, h, g);
  double res = 0.0;
  for (Eigen::Index a = 0; a < mk.cols(); ++a)
    for (Eigen::Index b = a; b < mk.cols(); ++b)
      for (Eigen::Index c = 0; c < perp.cols(); ++c) {
        Vec x1 = mk.col(a), x2 = mk.col(b), x3 = perp.col(c);
        double v = 0.5 * (geo.inner(geo.bracket_m(x3, x1), x2) + geo.inner(geo.bracket_m(x3, x2), x1));
        res = std::max(res, std::abs(v));
      }
  return res;
}

}  // namespace homocurv
