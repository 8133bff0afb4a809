#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace homocurv {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Malformed input: bad shapes, broken axioms, unmet preconditions.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical check exceeded its tolerance.
class ToleranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr double kDefaultTol = 1e-9;

// Orthonormal basis (columns) of ker(a). Singular values below tol * max(1, sigma_max) count as zero.
Mat null_space(const Mat& a, double tol = 1e-10);

// Numerical rank with the same threshold convention as null_space.
int numerical_rank(const Mat& a, double tol = 1e-10);

// Orthonormalize the columns of a (modified Gram-Schmidt, twice), dropping dependent ones.
Mat orthonormalize(const Mat& a, double tol = 1e-10);

// Orthonormal basis of span(a)^perp, grown greedily from standard basis vectors so that
// coordinate-aligned input gives coordinate-aligned output.
Mat complement_basis(const Mat& a, double tol = 1e-10);

// Haar-distributed orthogonal matrix of size n.
Mat random_orthogonal(int n, std::mt19937_64& rng);

// Symmetric positive definite power a^p via eigendecomposition.
Mat spd_power(const Mat& a, double p);

std::string shape_string(const Mat& a);

}  // namespace homocurv
