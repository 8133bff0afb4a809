#pragma once

#include "homocurv/asymptotics.hpp"

#include <string>
#include <vector>

namespace homocurv {

struct CollapseReport {
  double isotropy_part = 0.0;  // |mu restricted to h^g|^2, metric independent
  double mu_h = 0.0;  // sum_i d_i c_i / lambda_i^2
  double mu_m = 0.0;
  double total = 0.0;
};

// sum over ordered pairs of an orthonormal basis of h of |[z, z']|^2, plus sum d_i c_i
double isotropy_bracket_part(const HomogeneousSpace& s);

CollapseReport bracket_norms(const HomogeneousSpace& s, const DiagonalMetric& g);

struct CollapseTerm {
  std::string kind;          // "mu_h" or "mu_m"
  std::vector<int> indices;  // i for mu_h, (i, j, k) for mu_m
  double coef = 0.0;
  double exponent = 0.0;
};

struct CollapseLimit {
  std::string verdict;  // "collapsed", "non-collapsed", "bounded-so-far" or "unbounded-so-far"
  double dominant_exponent = 0.0;
  std::vector<CollapseTerm> terms;
  std::vector<std::pair<double, double>> samples;  // (n, mu_h + mu_m) for sample tables
};

CollapseLimit collapse_limit(const SequenceSpec& seq, const CoefficientTable& t);

// Rescale so the smallest eigenvalue is 1 (asymptotically smallest block for power laws).
SequenceSpec normalize_most_shrinking(const SequenceSpec& seq);

}  // namespace homocurv
