#pragma once

#include "homocurv/catalog.hpp"

#include <string>
#include <vector>

namespace homocurv {

struct GoldenCheck {
  int criterion = 0;  // 0 for worked-example values outside the numbered suite
  std::string name;
  bool pass = false;
  std::string detail;
};

// One entry per numbered acceptance criterion (1..10).
std::vector<GoldenCheck> acceptance_checks();
// Worked-example values of the catalog spaces, one entry per operation.
std::vector<GoldenCheck> example_checks();

std::string golden_table(const std::vector<GoldenCheck>& checks);

// Coefficient of X_c^X_d in Rm(X_a^X_b) for the Stiefel sequence, frame X_i^(n), 0-based a<b, c<d.
struct AppendixEntry {
  int a, b, c, d;
  double value;
};
// corrected = false keeps the five misprinted coefficients as printed.
std::vector<AppendixEntry> stiefel_appendix(double n, bool corrected = true);

// Finite-n direction of the Stiefel sequence.
std::vector<double> stiefel_direction(double n);

}  // namespace homocurv
