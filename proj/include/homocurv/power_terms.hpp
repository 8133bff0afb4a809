#pragma once

#include <string>
#include <vector>

namespace homocurv {

// Finite sums sum_k c_k n^{e_k}, used for exact n -> infinity limits of power-law sequences.
struct PowerTerm {
  double coef = 0.0;
  double exponent = 0.0;
};

struct AsymptoticLimit {
  enum class Kind { Finite, PlusInfinity, MinusInfinity };
  Kind kind = Kind::Finite;
  double value = 0.0;             // meaningful when finite
  double leading_exponent = 0.0;  // largest exponent with a surviving coefficient
  bool vanishes = true;           // every term cancels or decays

  std::string describe() const;
  bool finite() const { return kind == Kind::Finite; }
};

class PowerSum {
 public:
  PowerSum() = default;
  static PowerSum constant(double c) {
    PowerSum s;
    s.add(c, 0.0);
    return s;
  }
  static PowerSum monomial(double c, double e) {
    PowerSum s;
    s.add(c, e);
    return s;
  }

  void add(double coef, double exponent);
  PowerSum& operator+=(const PowerSum& o);
  friend PowerSum operator+(PowerSum a, const PowerSum& b) { return a += b; }
  friend PowerSum operator*(const PowerSum& a, const PowerSum& b);
  friend PowerSum operator*(double s, PowerSum a);

  double eval(double n) const;
  // Terms with equal exponents merged; coefficients that cancel to relative rel_tol dropped.
  PowerSum simplified(double exp_tol = 1e-9, double rel_tol = 1e-9) const;
  AsymptoticLimit limit(double exp_tol = 1e-9, double rel_tol = 1e-9) const;
  const std::vector<PowerTerm>& terms() const { return terms_; }

 private:
  std::vector<PowerTerm> terms_;
  std::vector<double> scale_;  // largest magnitude that fed each term, for cancellation tests
};

}  // namespace homocurv
