#include "homocurv/power_terms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace homocurv {

std::string AsymptoticLimit::describe() const {
  switch (kind) {
    case Kind::PlusInfinity:
      return "+inf";
    case Kind::MinusInfinity:
      return "-inf";
    default: {
      std::ostringstream os;
      os.precision(17);
      os << value;
      return os.str();
    }
  }
}

void PowerSum::add(double coef, double exponent) {
  terms_.push_back({coef, exponent});
  scale_.push_back(std::abs(coef));
}

PowerSum& PowerSum::operator+=(const PowerSum& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  scale_.insert(scale_.end(), o.scale_.begin(), o.scale_.end());
  return *this;
}

PowerSum operator*(const PowerSum& a, const PowerSum& b) {
  PowerSum out;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    for (size_t j = 0; j < b.terms_.size(); ++j) {
      out.terms_.push_back({a.terms_[i].coef * b.terms_[j].coef, a.terms_[i].exponent + b.terms_[j].exponent});
      out.scale_.push_back(a.scale_[i] * b.scale_[j]);
    }
  return out;
}

PowerSum operator*(double s, PowerSum a) {
  for (auto& t : a.terms_) t.coef *= s;
  for (auto& sc : a.scale_) sc *= std::abs(s);
  return a;
}

// Like exponents are merged first; otherwise large cancelling terms swamp the result.
double PowerSum::eval(double n) const {
  const PowerSum merged = simplified();
  double s = 0.0;
  for (const auto& t : merged.terms_) s += t.coef * std::pow(n, t.exponent);
  return s;
}

PowerSum PowerSum::simplified(double exp_tol, double rel_tol) const {
  std::vector<size_t> idx(terms_.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return terms_[a].exponent < terms_[b].exponent; });
  PowerSum out;
  size_t i = 0;
  while (i < idx.size()) {
    double e0 = terms_[idx[i]].exponent;
    double c = 0.0, sc = 0.0;
    size_t j = i;
    while (j < idx.size() && terms_[idx[j]].exponent - e0 <= exp_tol) {
      c += terms_[idx[j]].coef;
      sc = std::max(sc, scale_[idx[j]]);
      ++j;
    }
    if (std::abs(c) > rel_tol * sc) {
      out.terms_.push_back({c, e0});
      out.scale_.push_back(sc);
    }
    i = j;
  }
  return out;
}

AsymptoticLimit PowerSum::limit(double exp_tol, double rel_tol) const {
  PowerSum s = simplified(exp_tol, rel_tol);
  AsymptoticLimit lim;
  if (s.terms_.empty()) return lim;
  const PowerTerm& lead = s.terms_.back();
  lim.leading_exponent = lead.exponent;
  lim.vanishes = false;
  if (lead.exponent > exp_tol) {
    lim.kind = lead.coef > 0 ? AsymptoticLimit::Kind::PlusInfinity : AsymptoticLimit::Kind::MinusInfinity;
  } else if (std::abs(lead.exponent) <= exp_tol) {
    lim.value = lead.coef;
  } else {
    lim.vanishes = true;
  }
  return lim;
}

}  // namespace homocurv
