#include "homocurv/lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace homocurv {

namespace {

size_t idx(int n, int i, int j, int k) { return (static_cast<size_t>(i) * n + j) * n + k; }

std::string fmt_residual(const char* what, double r) {
  std::ostringstream os;
  os << what << " residual " << r;
  return os.str();
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, int dim, const std::vector<BracketEntry>& entries)
    : name_(std::move(name)), dim_(dim) {
  if (dim <= 0) throw ValidationError("dimension must be positive");
  c_.assign(static_cast<size_t>(dim) * dim * dim, 0.0);
  std::vector<char> seen(c_.size(), 0);
  for (const auto& e : entries) {
    if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= dim || e.j >= dim || e.k >= dim)
      throw ValidationError("bracket index out of range");
    if (e.i == e.j) {
      if (e.c != 0.0) throw ValidationError("antisymmetry violated: [e_i,e_i] != 0");
      continue;
    }
    int i = std::min(e.i, e.j), j = std::max(e.i, e.j);
    double c = e.i < e.j ? e.c : -e.c;
    size_t p = idx(dim, i, j, e.k);
    if (seen[p] && std::abs(c_[p] - c) > 0.0)
      throw ValidationError("antisymmetry violated: conflicting entries for one pair");
    seen[p] = 1;
    c_[p] = c;
    c_[idx(dim, j, i, e.k)] = -c;
  }
  build_ad();
}

LieAlgebra LieAlgebra::from_tensor(std::string name, int dim, std::vector<double> c) {
  if (dim <= 0 || c.size() != static_cast<size_t>(dim) * dim * dim)
    throw ValidationError("structure tensor has wrong size");
  LieAlgebra g;
  g.name_ = std::move(name);
  g.dim_ = dim;
  g.c_ = std::move(c);
  g.build_ad();
  return g;
}

LieAlgebra LieAlgebra::from_matrices(std::string name, const std::vector<Mat>& basis, double tol) {
  const int n = static_cast<int>(basis.size());
  if (n == 0) throw ValidationError("empty basis");
  auto q = [](const Mat& a, const Mat& b) { return -0.5 * (a * b).trace(); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (std::abs(q(basis[a], basis[b]) - (a == b ? 1.0 : 0.0)) > tol)
        throw ValidationError("matrix basis is not orthonormal for -1/2 tr");
  std::vector<double> c(static_cast<size_t>(n) * n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat br = basis[i] * basis[j] - basis[j] * basis[i];
      Mat rest = br;
      for (int k = 0; k < n; ++k) {
        double v = q(br, basis[k]);
        c[idx(n, i, j, k)] = v;
        rest -= v * basis[k];
      }
      if (rest.norm() > tol * std::max(1.0, br.norm())) throw ValidationError("matrix span is not closed under commutator");
    }
  return from_tensor(std::move(name), n, std::move(c));
}

void LieAlgebra::build_ad() {
  ad_.assign(dim_, Mat::Zero(dim_, dim_));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) ad_[i](k, j) = c(i, j, k);
}

Mat LieAlgebra::ad(const Vec& x) const {
  if (x.size() != dim_) throw ValidationError("vector length does not match algebra dimension");
  Mat m = Mat::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (x(i) != 0.0) m += x(i) * ad_[i];
  return m;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (y.size() != dim_) throw ValidationError("vector length does not match algebra dimension");
  return ad(x) * y;
}

LieAlgebra LieAlgebra::change_basis(const Mat& p, double tol) const {
  if (p.rows() != dim_ || p.cols() != dim_) throw ValidationError("change of basis must be square");
  if ((p.transpose() * p - Mat::Identity(dim_, dim_)).norm() > tol * dim_)
    throw ValidationError("change of basis is not orthogonal");
  std::vector<double> c(c_.size(), 0.0);
  for (int a = 0; a < dim_; ++a) {
    Mat ada = ad(Vec(p.col(a)));
    Mat img = p.transpose() * ada * p;  // column b: coordinates of [p_a, p_b]
    for (int b = 0; b < dim_; ++b)
      for (int k = 0; k < dim_; ++k) c[idx(dim_, a, b, k)] = img(k, b);
  }
  return from_tensor(name_, dim_, std::move(c));
}

std::vector<BracketEntry> LieAlgebra::entries(double tol) const {
  std::vector<BracketEntry> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (std::abs(c(i, j, k)) > tol) out.push_back({i, j, k, c(i, j, k)});
  return out;
}

ValidationReport validate(const LieAlgebra& g, double tol) {
  ValidationReport r;
  const int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        r.antisymmetry_residual = std::max(r.antisymmetry_residual, std::abs(g.c(i, j, k) + g.c(j, i, k)));
        r.invariance_residual = std::max(r.invariance_residual, std::abs(g.c(i, j, k) + g.c(i, k, j)));
      }
  // [ad_i, ad_j] = ad([e_i,e_j]) is the Jacobi identity.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat lhs = g.ad(i) * g.ad(j) - g.ad(j) * g.ad(i);
      Mat rhs = Mat::Zero(n, n);
      for (int k = 0; k < n; ++k)
        if (g.c(i, j, k) != 0.0) rhs += g.c(i, j, k) * g.ad(k);
      r.jacobi_residual = std::max(r.jacobi_residual, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  if (r.antisymmetry_residual > tol) r.failures.push_back(fmt_residual("antisymmetry", r.antisymmetry_residual));
  if (r.jacobi_residual > tol) r.failures.push_back(fmt_residual("jacobi", r.jacobi_residual));
  if (r.invariance_residual > tol)
    r.failures.push_back(fmt_residual("ad-invariance (total antisymmetry)", r.invariance_residual));
  r.valid = r.failures.empty();
  return r;
}

Subspace Subspace::zero(int n, std::string label) { return {Mat(n, 0), std::move(label)}; }

Subspace Subspace::whole(int n, std::string label) { return {Mat::Identity(n, n), std::move(label)}; }

Subspace Subspace::from_vectors(const Mat& vectors, std::string label, double tol) {
  Mat q = orthonormalize(vectors, tol);
  if (q.cols() != vectors.cols()) throw ValidationError("subspace vectors are linearly dependent");
  return {q, std::move(label)};
}

Subspace span_sum(const Subspace& a, const Subspace& b, std::string label) {
  if (a.ambient_dim() != b.ambient_dim()) throw ValidationError("ambient dimension mismatch");
  Mat all(a.ambient_dim(), a.dim() + b.dim());
  all << a.basis, b.basis;
  return {orthonormalize(all), std::move(label)};
}

bool contains(const Subspace& big, const Subspace& small, double tol) {
  if (small.dim() == 0) return true;
  Mat rest = small.basis - big.basis * (big.basis.transpose() * small.basis);
  return rest.cwiseAbs().maxCoeff() <= tol;
}

bool same_subspace(const Subspace& a, const Subspace& b, double tol) {
  return a.dim() == b.dim() && contains(a, b, tol) && contains(b, a, tol);
}

Mat killing_form(const LieAlgebra& g) {
  const int n = g.dim();
  Mat b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) b(i, j) = b(j, i) = (g.ad(i) * g.ad(j)).trace();
  return b;
}

Residual is_subalgebra(const LieAlgebra& g, const Subspace& s, double tol) {
  if (s.ambient_dim() != g.dim()) throw ValidationError("subspace lives in the wrong ambient space");
  Mat perp = Mat::Identity(g.dim(), g.dim()) - s.projector();
  double r = 0.0;
  for (int a = 0; a < s.dim(); ++a) {
    Mat ada = g.ad(Vec(s.basis.col(a)));
    for (int b = a + 1; b < s.dim(); ++b) r = std::max(r, (perp * (ada * s.basis.col(b))).norm());
  }
  return {r <= tol, r};
}

Residual is_toral(const LieAlgebra& g, const Subspace& h, const Subspace& k, double tol) {
  if (!contains(k, h, tol)) throw ValidationError("isotropy is not contained in the subalgebra");
  Mat perp = Mat::Identity(g.dim(), g.dim()) - h.projector();
  double r = 0.0;
  for (int a = 0; a < k.dim(); ++a) {
    Mat ada = g.ad(Vec(k.basis.col(a)));
    for (int b = a + 1; b < k.dim(); ++b) r = std::max(r, (perp * (ada * k.basis.col(b))).norm());
  }
  return {r <= tol, r};
}

Mat casimir_operator(const LieAlgebra& g, const Subspace& h, const Mat& m_basis, double tol) {
  if (!is_subalgebra(g, h, tol).holds) throw ValidationError("isotropy is not a subalgebra");
  const Eigen::Index nm = m_basis.cols();
  Mat cas = Mat::Zero(nm, nm);
  Mat pm = m_basis * m_basis.transpose();
  for (int z = 0; z < h.dim(); ++z) {
    Mat img = g.ad(Vec(h.basis.col(z))) * m_basis;
    if ((img - pm * img).norm() > tol * std::max(1.0, img.norm()))
      throw ValidationError("complement is not isotropy-invariant");
    Mat a = m_basis.transpose() * img;
    cas -= a * a;
  }
  return cas;
}

int rank(const LieAlgebra& g, const Subspace& s, int samples, std::uint64_t seed, double tol) {
  if (s.dim() == 0) return 0;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  int best = s.dim();
  for (int t = 0; t < std::max(samples, 1); ++t) {
    Vec coef(s.dim());
    for (int a = 0; a < s.dim(); ++a) coef(a) = gauss(rng);
    Vec x = s.basis * coef;
    Mat map = g.ad(x) * s.basis;
    best = std::min(best, static_cast<int>(s.dim()) - numerical_rank(map, tol));
  }
  return best;
}

Subspace normalizer_algebra(const LieAlgebra& g, const Subspace& h, double tol) {
  const int n = g.dim();
  if (h.dim() == 0) return Subspace::whole(n, "normalizer");
  Mat perp = Mat::Identity(n, n) - h.projector();
  // X -> P_perp [X, h_b] for each b, stacked.
  Mat sys(n * h.dim(), n);
  for (int i = 0; i < n; ++i) {
    Mat img = perp * g.ad(i) * h.basis;
    sys.col(i) = Eigen::Map<const Vec>(img.data(), img.size());
  }
  return {null_space(sys, tol), "normalizer"};
}

int representation_kernel(const LieAlgebra& g, const Subspace& k, const Subspace& w, double tol) {
  const int n = g.dim();
  Mat pw = w.projector();
  Mat sys(n * std::max(w.dim(), 1), k.dim());
  sys.setZero();
  for (int a = 0; a < k.dim(); ++a) {
    Mat img = g.ad(Vec(k.basis.col(a))) * w.basis;
    if ((img - pw * img).norm() > std::sqrt(tol)) throw ValidationError("subspace is not invariant under the subalgebra");
    if (w.dim() > 0) sys.col(a) = Eigen::Map<const Vec>(img.data(), img.size());
  }
  return static_cast<int>(null_space(sys, tol).cols());
}

}  // namespace homocurv
