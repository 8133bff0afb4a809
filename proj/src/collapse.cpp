#include "homocurv/collapse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace homocurv {

double isotropy_bracket_part(const HomogeneousSpace& s) {
  const Mat& hb = s.isotropy.basis;
  double hh = 0.0;
  for (int a = 0; a < hb.cols(); ++a)
    for (int b = 0; b < hb.cols(); ++b) hh += s.algebra.bracket(hb.col(a), hb.col(b)).squaredNorm();
  double dc = 0.0;
  for (int i = 0; i < s.coeffs.size(); ++i) dc += s.coeffs.dims[i] * s.coeffs.c[i];
  return hh + dc;
}

CollapseReport bracket_norms(const HomogeneousSpace& s, const DiagonalMetric& g) {
  g.check();
  const CoefficientTable& t = s.coeffs;
  if (g.dims != t.dims) throw ValidationError("metric does not match the coefficient table");
  CollapseReport r;
  r.isotropy_part = isotropy_bracket_part(s);
  const int l = t.size();
  for (int i = 0; i < l; ++i) {
    r.mu_h += t.dims[i] * t.c[i] / (g.lambdas[i] * g.lambdas[i]);
    for (int j = 0; j < l; ++j)
      for (int k = 0; k < l; ++k)
        if (t.t(i, j, k) != 0.0) r.mu_m += t.t(i, j, k) * g.lambdas[k] / (g.lambdas[i] * g.lambdas[j]);
  }
  r.total = r.isotropy_part + r.mu_h + r.mu_m;
  return r;
}

CollapseLimit collapse_limit(const SequenceSpec& seq, const CoefficientTable& t) {
  const int l = t.size();
  if (seq.size() != l) throw ValidationError("sequence does not match the coefficient table");
  CollapseLimit out;
  if (seq.model == SequenceSpec::Model::Samples) {
    auto rows = seq.rows;
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
    for (const auto& r : rows) {
      DiagonalMetric g{{r.begin() + 1, r.end()}, t.dims};
      g.check();
      double tot = 0.0;
      for (int i = 0; i < l; ++i) {
        tot += t.dims[i] * t.c[i] / (g.lambdas[i] * g.lambdas[i]);
        for (int j = 0; j < l; ++j)
          for (int k = 0; k < l; ++k)
            if (t.t(i, j, k) != 0.0) tot += t.t(i, j, k) * g.lambdas[k] / (g.lambdas[i] * g.lambdas[j]);
      }
      out.samples.push_back({r[0], tot});
    }
    if (out.samples.empty()) throw ValidationError("empty sample table");
    double first = out.samples.front().second, last = out.samples.back().second;
    out.verdict = last > 10.0 * std::max(1.0, first) ? "unbounded-so-far" : "bounded-so-far";
    return out;
  }
  const auto& b = seq.blocks;
  for (int i = 0; i < l; ++i)
    if (t.c[i] != 0.0) out.terms.push_back({"mu_h", {i}, t.dims[i] * t.c[i] / (b[i].c * b[i].c), -2.0 * b[i].a});
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      for (int k = 0; k < l; ++k)
        if (t.t(i, j, k) != 0.0)
          out.terms.push_back({"mu_m", {i, j, k}, t.t(i, j, k) * b[k].c / (b[i].c * b[j].c), b[k].a - b[i].a - b[j].a});
  out.dominant_exponent = out.terms.empty() ? 0.0 : -std::numeric_limits<double>::infinity();
  for (const auto& term : out.terms) out.dominant_exponent = std::max(out.dominant_exponent, term.exponent);
  out.verdict = out.dominant_exponent > 1e-12 ? "collapsed" : "non-collapsed";
  return out;
}

SequenceSpec normalize_most_shrinking(const SequenceSpec& seq) {
  SequenceSpec out = seq;
  out.unit_volume = false;
  if (seq.model == SequenceSpec::Model::Samples) {
    for (auto& r : out.rows) {
      double mn = *std::min_element(r.begin() + 1, r.end());
      for (auto it = r.begin() + 1; it != r.end(); ++it) *it /= mn;
    }
    return out;
  }
  if (seq.blocks.empty()) throw ValidationError("empty sequence");
  size_t lo = 0;
  for (size_t i = 1; i < seq.blocks.size(); ++i) {
    const auto& a = seq.blocks[i];
    const auto& m = seq.blocks[lo];
    if (a.a < m.a || (a.a == m.a && a.c < m.c)) lo = i;
  }
  const PowerLawBlock ref = seq.blocks[lo];
  for (auto& b : out.blocks) {
    b.c /= ref.c;
    b.a -= ref.a;
  }
  return out;
}

}  // namespace homocurv
