#pragma once

#include "homocurv/lie_algebra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace homocurv {

// Q-orthogonal splitting m = m_1 + ... + m_l into irreducible isotropy modules.
struct Decomposition {
  Mat basis;                    // N x dim(m); columns are the adapted basis, grouped by block
  std::vector<int> block_dims;
  std::vector<double> casimir;  // Casimir eigenvalue per block
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  std::vector<std::string> notes;

  int num_blocks() const { return static_cast<int>(block_dims.size()); }
  int m_dim() const { return static_cast<int>(basis.cols()); }
  int offset(int block) const;
  int block_of(int column) const;
  Mat block(int i) const { return basis.middleCols(offset(i), block_dims[i]); }
  Subspace block_span(const std::vector<int>& blocks, std::string label = {}) const;
};

struct DecomposeOptions {
  std::vector<Mat> component_generators;   // N x N orthogonal maps normalizing h (extra components of H)
  std::vector<Mat> symmetric_constraints;  // N x N symmetric maps preserving m that must also be diagonal
  std::uint64_t seed = 0x5eed;
  double tol = kDefaultTol;
  int max_iterations = 64;
};

Subspace orthogonal_complement(const LieAlgebra& g, const Subspace& h);

Decomposition decompose(const LieAlgebra& g, const Subspace& h, const DecomposeOptions& opts = {});

// Checks that an externally supplied decomposition is orthonormal, complementary to h and
// isotropy-invariant; fills in the Casimir values.
Decomposition adopt_decomposition(const LieAlgebra& g, const Subspace& h, const Mat& basis,
                                  const std::vector<int>& block_dims, double tol = kDefaultTol);

struct CoefficientTable {
  std::vector<int> dims;
  std::vector<double> b;
  std::vector<double> c;
  std::vector<double> triples;  // l^3 entries, symmetric under permutations
  double dbc_residual = 0.0;    // max_i |d_i b_i - 2 d_i c_i - sum_jk [ijk]|
  double block_scalar_residual = 0.0;  // how far -B and the Casimir are from scalars on blocks
  std::vector<std::string> notes;

  int size() const { return static_cast<int>(dims.size()); }
  double t(int i, int j, int k) const { return triples[(static_cast<size_t>(i) * size() + j) * size() + k]; }
  double& t(int i, int j, int k) { return triples[(static_cast<size_t>(i) * size() + j) * size() + k]; }
  int total_dim() const;
  double b_gh() const;  // sum d_i b_i
  bool consistent(double tol = kDefaultTol) const { return dbc_residual <= tol && block_scalar_residual <= tol; }
  void recompute_dbc_residual();
};

CoefficientTable coefficients(const LieAlgebra& g, const Subspace& h, const Decomposition& d);

// dim Hom_H(m_i, m_j) for every pair.
Eigen::MatrixXi module_equivalences(const LieAlgebra& g, const Subspace& h, const Decomposition& d,
                                    const std::vector<Mat>& component_generators = {},
                                    double tol = 1e-9);

// Algebra, isotropy and a fixed decomposition with its coefficients.
struct HomogeneousSpace {
  std::string name;
  LieAlgebra algebra;
  Subspace isotropy;
  std::vector<Mat> component_generators;
  Decomposition decomposition;
  CoefficientTable coeffs;
  bool pi1_finite = false;

  int num_blocks() const { return decomposition.num_blocks(); }
  const std::vector<int>& dims() const { return decomposition.block_dims; }
  // h plus the listed blocks.
  Subspace subalgebra_from_blocks(const std::vector<int>& blocks, std::string label = {}) const;
};

// Validates the algebra and isotropy, decomposes (or adopts the given basis) and computes coefficients.
HomogeneousSpace make_space(std::string name, LieAlgebra alg, Subspace h, const Mat* basis = nullptr,
                            const std::vector<int>* block_dims = nullptr, const DecomposeOptions& opts = {},
                            bool pi1_finite = false);

}  // namespace homocurv
