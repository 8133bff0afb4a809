#include "homocurv/isotypic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace homocurv {

namespace {

// Basis of symmetric d x d matrices X with G X = X G for every G.
std::vector<Mat> symmetric_commutant(const std::vector<Mat>& gens, int d, double tol) {
  std::vector<Mat> basis_in;
  for (int p = 0; p < d; ++p)
    for (int q = p; q < d; ++q) {
      Mat e = Mat::Zero(d, d);
      e(p, q) = e(q, p) = (p == q) ? 1.0 : 1.0 / std::sqrt(2.0);
      basis_in.push_back(e);
    }
  const int nu = static_cast<int>(basis_in.size());
  if (gens.empty()) return basis_in;
  Mat sys(static_cast<Eigen::Index>(gens.size()) * d * d, nu);
  for (int u = 0; u < nu; ++u) {
    Vec col(sys.rows());
    Eigen::Index off = 0;
    for (const auto& g : gens) {
      Mat r = g * basis_in[u] - basis_in[u] * g;
      col.segment(off, d * d) = Eigen::Map<const Vec>(r.data(), d * d);
      off += d * d;
    }
    sys.col(u) = col;
  }
  double scale = 1.0;
  for (const auto& g : gens) scale = std::max(scale, g.norm());
  Mat ker = null_space(sys / scale, tol);
  std::vector<Mat> out;
  for (Eigen::Index c = 0; c < ker.cols(); ++c) {
    Mat x = Mat::Zero(d, d);
    for (int u = 0; u < nu; ++u) x += ker(u, c) * basis_in[u];
    out.push_back(x);
  }
  return out;
}

// Orthogonal projection (Frobenius) of target onto span(basis).
Mat project_onto(const std::vector<Mat>& basis, const Mat& target) {
  const int n = static_cast<int>(basis.size());
  Mat gram(n, n);
  Vec rhs(n);
  for (int a = 0; a < n; ++a) {
    rhs(a) = (basis[a].array() * target.array()).sum();
    for (int b = 0; b < n; ++b) gram(a, b) = (basis[a].array() * basis[b].array()).sum();
  }
  Vec coef = gram.ldlt().solve(rhs);
  Mat out = Mat::Zero(target.rows(), target.cols());
  for (int a = 0; a < n; ++a) out += coef(a) * basis[a];
  return out;
}

// Eigenvector groups of a symmetric matrix, split at eigenvalue gaps.
std::vector<Mat> eigen_clusters(const Mat& s, double gap_tol) {
  Eigen::SelfAdjointEigenSolver<Mat> es(s);
  const Vec& ev = es.eigenvalues();
  double spread = std::max(1.0, ev.cwiseAbs().maxCoeff());
  std::vector<Mat> out;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= ev.size(); ++i) {
    if (i == ev.size() || ev(i) - ev(i - 1) > gap_tol * spread) {
      out.push_back(es.eigenvectors().middleCols(start, i - start));
      start = i;
    }
  }
  return out;
}

// Basis of span(w) grown greedily from standard vectors, so coordinate-aligned spans get unit vectors.
Mat canonical_span_basis(const Mat& w) {
  const Eigen::Index n = w.rows(), d = w.cols();
  Mat q = orthonormalize(w);
  Mat out(n, 0);
  for (Eigen::Index step = 0; step < d; ++step) {
    Eigen::Index best = -1;
    double best_norm = 0.0;
    Vec best_v;
    for (Eigen::Index i = 0; i < n; ++i) {
      Vec v = q * (q.transpose() * Vec::Unit(n, i));
      for (int pass = 0; pass < 2; ++pass)
        for (Eigen::Index k = 0; k < out.cols(); ++k) v -= out.col(k).dot(v) * out.col(k);
      if (v.norm() > best_norm + 1e-9) {
        best_norm = v.norm();
        best = i;
        best_v = v;
      }
    }
    if (best < 0) throw std::logic_error("canonical_span_basis: degenerate span");
    out.conservativeResize(Eigen::NoChange, out.cols() + 1);
    out.col(out.cols() - 1) = best_v.normalized();
  }
  return out;
}

// a before b when a is lexicographically larger (so e_0 precedes e_1).
int lex_compare(const Vec& a, const Vec& b, double tol) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) > b(i) + tol) return -1;
    if (a(i) < b(i) - tol) return 1;
  }
  return 0;
}

std::vector<Mat> restrict_all(const std::vector<Mat>& gens, const Mat& w) {
  std::vector<Mat> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(w.transpose() * g * w);
  return out;
}

}  // namespace

int Decomposition::offset(int block) const {
  return std::accumulate(block_dims.begin(), block_dims.begin() + block, 0);
}

int Decomposition::block_of(int column) const {
  int acc = 0;
  for (int i = 0; i < num_blocks(); ++i) {
    acc += block_dims[i];
    if (column < acc) return i;
  }
  throw std::out_of_range("column outside decomposition");
}

Subspace Decomposition::block_span(const std::vector<int>& blocks, std::string label) const {
  int total = 0;
  for (int b : blocks) total += block_dims.at(b);
  Mat m(basis.rows(), total);
  int col = 0;
  for (int b : blocks) {
    m.middleCols(col, block_dims[b]) = block(b);
    col += block_dims[b];
  }
  return {m, std::move(label)};
}

Subspace orthogonal_complement(const LieAlgebra& g, const Subspace& h) {
  if (h.ambient_dim() != g.dim()) throw ValidationError("isotropy lives in the wrong ambient space");
  return {complement_basis(h.basis), "m"};
}

Decomposition decompose(const LieAlgebra& g, const Subspace& h, const DecomposeOptions& opts) {
  const int n = g.dim();
  if (!is_subalgebra(g, h, opts.tol).holds) throw ValidationError("isotropy is not a subalgebra");
  Mat m = orthogonal_complement(g, h).basis;
  const int nm = static_cast<int>(m.cols());
  Mat pm = m * m.transpose();

  std::vector<Mat> gens;
  bool nontrivial = false;
  for (int z = 0; z < h.dim(); ++z) {
    Mat img = g.ad(Vec(h.basis.col(z))) * m;
    if ((img - pm * img).norm() > 1e-8 * std::max(1.0, img.norm()))
      throw ValidationError("complement is not isotropy-invariant");
    Mat a = m.transpose() * img;
    if (a.norm() > opts.tol) nontrivial = true;
    gens.push_back(a);
  }
  for (const auto& cg : opts.component_generators) {
    if (cg.rows() != n || cg.cols() != n) throw ValidationError("component generator has wrong shape");
    if ((cg.transpose() * cg - Mat::Identity(n, n)).norm() > 1e-8) throw ValidationError("component generator is not orthogonal");
    Mat img = cg * m;
    if ((img - pm * img).norm() > 1e-8) throw ValidationError("component generator does not preserve the complement");
    gens.push_back(m.transpose() * img);
    nontrivial = true;
  }
  for (const auto& sc : opts.symmetric_constraints) {
    if (sc.rows() != n || sc.cols() != n) throw ValidationError("symmetric constraint has wrong shape");
    Mat img = sc * m;
    if ((img - pm * img).norm() > 1e-8 * std::max(1.0, img.norm())) throw ValidationError("symmetric constraint does not preserve the complement");
    gens.push_back(m.transpose() * img);
  }

  Decomposition out;
  out.seed = opts.seed;
  out.tol = opts.tol;
  if (!nontrivial)
    out.notes.push_back("trivial isotropy action: split into 1-dimensional blocks, which is not canonical");

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Mat> work{Mat::Identity(nm, nm)};
  std::vector<Mat> done;
  int iterations = 0;
  while (!work.empty()) {
    if (++iterations > opts.max_iterations * std::max(1, nm))
      throw ToleranceError("decompose: block splitting did not terminate");
    Mat w = work.back();
    work.pop_back();
    const int d = static_cast<int>(w.cols());
    std::vector<Mat> local = restrict_all(gens, w);
    std::vector<Mat> comm = symmetric_commutant(local, d, 1e-8);
    if (comm.size() <= 1) {
      done.push_back(w);
      continue;
    }
    // Deterministic first attempt keeps coordinate-aligned modules aligned.
    Mat diag = Mat::Zero(d, d);
    for (int i = 0; i < d; ++i) diag(i, i) = 1.0 + i;
    std::vector<Mat> parts = eigen_clusters(project_onto(comm, diag), 1e-7);
    int attempts = 0;
    while (parts.size() < 2) {
      if (++attempts > opts.max_iterations) throw ToleranceError("decompose: failed to split a reducible block");
      Mat s = Mat::Zero(d, d);
      for (const auto& k : comm) s += gauss(rng) * k;
      parts = eigen_clusters(s, 1e-7);
    }
    for (const auto& p : parts) work.push_back(w * p);
  }

  Mat cas_m = casimir_operator(g, h, m, 1e-8);

  struct Block {
    Mat amb;
    double casimir;
  };
  std::vector<Block> blocks;
  for (const auto& w : done) {
    Mat amb = canonical_span_basis(m * w);
    Mat wc = m.transpose() * amb;
    double cv = (wc.transpose() * cas_m * wc).trace() / static_cast<double>(wc.cols());
    blocks.push_back({amb, cv});
  }
  std::stable_sort(blocks.begin(), blocks.end(), [&](const Block& a, const Block& b) {
    if (a.amb.cols() != b.amb.cols()) return a.amb.cols() < b.amb.cols();
    if (std::abs(a.casimir - b.casimir) > 1e-8 * std::max(1.0, std::abs(a.casimir))) return a.casimir < b.casimir;
    return lex_compare(a.amb.col(0), b.amb.col(0), 1e-9) < 0;
  });
  out.basis = Mat(n, nm);
  int col = 0;
  for (const auto& b : blocks) {
    out.basis.middleCols(col, b.amb.cols()) = b.amb;
    col += static_cast<int>(b.amb.cols());
    out.block_dims.push_back(static_cast<int>(b.amb.cols()));
    out.casimir.push_back(b.casimir);
  }
  return out;
}

Decomposition adopt_decomposition(const LieAlgebra& g, const Subspace& h, const Mat& basis,
                                  const std::vector<int>& block_dims, double tol) {
  const int n = g.dim();
  if (basis.rows() != n) throw ValidationError("decomposition basis has wrong length");
  if (std::accumulate(block_dims.begin(), block_dims.end(), 0) != basis.cols())
    throw ValidationError("block dimensions do not add up to the basis size");
  if (basis.cols() + h.dim() != n) throw ValidationError("decomposition does not complement the isotropy");
  for (int d : block_dims)
    if (d <= 0) throw ValidationError("block dimensions must be positive");
  if ((basis.transpose() * basis - Mat::Identity(basis.cols(), basis.cols())).cwiseAbs().maxCoeff() > tol)
    throw ValidationError("decomposition basis is not orthonormal");
  if (h.dim() > 0 && (h.basis.transpose() * basis).cwiseAbs().maxCoeff() > tol)
    throw ValidationError("decomposition is not orthogonal to the isotropy");
  Decomposition out;
  out.basis = basis;
  out.block_dims = block_dims;
  out.tol = tol;
  Mat cas = casimir_operator(g, h, basis, 1e-8);
  for (int z = 0; z < h.dim(); ++z) {
    Mat img = g.ad(Vec(h.basis.col(z)));
    for (int i = 0; i < out.num_blocks(); ++i) {
      Mat blk = out.block(i);
      Mat im = img * blk;
      if ((im - blk * (blk.transpose() * im)).cwiseAbs().maxCoeff() > 1e-8)
        throw ValidationError("block " + std::to_string(i) + " is not isotropy-invariant");
    }
  }
  for (int i = 0; i < out.num_blocks(); ++i) {
    int o = out.offset(i), d = block_dims[i];
    out.casimir.push_back(cas.block(o, o, d, d).trace() / d);
  }
  return out;
}

int CoefficientTable::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

double CoefficientTable::b_gh() const {
  double s = 0.0;
  for (int i = 0; i < size(); ++i) s += dims[i] * b[i];
  return s;
}

void CoefficientTable::recompute_dbc_residual() {
  dbc_residual = 0.0;
  for (int i = 0; i < size(); ++i) {
    double s = 0.0;
    for (int j = 0; j < size(); ++j)
      for (int k = 0; k < size(); ++k) s += t(i, j, k);
    dbc_residual = std::max(dbc_residual, std::abs(dims[i] * b[i] - 2.0 * dims[i] * c[i] - s));
  }
}

CoefficientTable coefficients(const LieAlgebra& g, const Subspace& h, const Decomposition& d) {
  const int l = d.num_blocks();
  const int nm = d.m_dim();
  CoefficientTable t;
  t.dims = d.block_dims;
  t.b.assign(l, 0.0);
  t.c.assign(l, 0.0);
  t.triples.assign(static_cast<size_t>(l) * l * l, 0.0);

  Mat negb = -(d.basis.transpose() * killing_form(g) * d.basis);
  Mat cas = casimir_operator(g, h, d.basis, 1e-8);
  for (int i = 0; i < l; ++i) {
    int o = d.offset(i), di = d.block_dims[i];
    t.b[i] = negb.block(o, o, di, di).trace() / di;
    t.c[i] = cas.block(o, o, di, di).trace() / di;
    t.block_scalar_residual = std::max(
        {t.block_scalar_residual,
         (negb.block(o, o, di, di) - t.b[i] * Mat::Identity(di, di)).cwiseAbs().maxCoeff(),
         (cas.block(o, o, di, di) - t.c[i] * Mat::Identity(di, di)).cwiseAbs().maxCoeff()});
  }
  std::vector<int> owner(nm);
  for (int a = 0; a < nm; ++a) owner[a] = d.block_of(a);
  for (int a = 0; a < nm; ++a) {
    Mat proj = d.basis.transpose() * g.ad(Vec(d.basis.col(a))) * d.basis;  // (c, b) = Q([e_a,e_b], e_c)
    for (int b = 0; b < nm; ++b)
      for (int c = 0; c < nm; ++c) t.t(owner[a], owner[b], owner[c]) += proj(c, b) * proj(c, b);
  }
  t.recompute_dbc_residual();
  return t;
}

Eigen::MatrixXi module_equivalences(const LieAlgebra& g, const Subspace& h, const Decomposition& d,
                                    const std::vector<Mat>& component_generators, double tol) {
  const int l = d.num_blocks();
  std::vector<Mat> ambient;
  for (int z = 0; z < h.dim(); ++z) ambient.push_back(g.ad(Vec(h.basis.col(z))));
  for (const auto& cg : component_generators) ambient.push_back(cg);
  Eigen::MatrixXi out(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Mat bi = d.block(i), bj = d.block(j);
      const int di = d.block_dims[i], dj = d.block_dims[j];
      // X: m_i -> m_j with rho_j X = X rho_i, unknowns column-major in a dj x di matrix.
      Mat sys(static_cast<Eigen::Index>(ambient.size()) * dj * di, dj * di);
      sys.setZero();
      Eigen::Index row = 0;
      for (const auto& a : ambient) {
        Mat ri = bi.transpose() * a * bi;
        Mat rj = bj.transpose() * a * bj;
        // vec(rj X - X ri) = (I (x) rj - ri^T (x) I) vec(X)
        for (int q = 0; q < di; ++q)
          for (int p = 0; p < dj; ++p) {
            Eigen::Index r = row + q * dj + p;
            for (int u = 0; u < dj; ++u) sys(r, q * dj + u) += rj(p, u);
            for (int v = 0; v < di; ++v) sys(r, v * dj + p) -= ri(v, q);
          }
        row += dj * di;
      }
      out(i, j) = ambient.empty() ? di * dj : static_cast<int>(null_space(sys, tol).cols());
    }
  return out;
}

Subspace HomogeneousSpace::subalgebra_from_blocks(const std::vector<int>& blocks, std::string label) const {
  return span_sum(isotropy, decomposition.block_span(blocks), std::move(label));
}

HomogeneousSpace make_space(std::string name, LieAlgebra alg, Subspace h, const Mat* basis,
                            const std::vector<int>* block_dims, const DecomposeOptions& opts, bool pi1_finite) {
  ValidationReport vr = validate(alg, opts.tol);
  if (!vr.valid) throw ValidationError("invalid Lie algebra: " + vr.failures.front());
  if (h.ambient_dim() != alg.dim()) throw ValidationError("isotropy lives in the wrong ambient space");
  Residual sub = is_subalgebra(alg, h, opts.tol);
  if (!sub.holds) throw ValidationError("isotropy is not a subalgebra");
  HomogeneousSpace s;
  s.name = std::move(name);
  s.algebra = std::move(alg);
  s.isotropy = std::move(h);
  s.component_generators = opts.component_generators;
  s.pi1_finite = pi1_finite;
  if (basis && block_dims) {
    s.decomposition = adopt_decomposition(s.algebra, s.isotropy, *basis, *block_dims, 1e-9);
    s.decomposition.seed = opts.seed;
  } else {
    s.decomposition = decompose(s.algebra, s.isotropy, opts);
  }
  // Almost effectiveness: no element of h acts trivially on m.
  if (s.isotropy.dim() > 0) {
    Subspace m{s.decomposition.basis, "m"};
    if (representation_kernel(s.algebra, s.isotropy, m, 1e-10) > 0)
      throw ValidationError("isotropy contains elements acting trivially on the complement");
  }
  s.coeffs = coefficients(s.algebra, s.isotropy, s.decomposition);
  return s;
}

}  // namespace homocurv
