#pragma once

#include "homocurv/asymptotics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homocurv {

struct CatalogEntry {
  HomogeneousSpace space;
  std::optional<SequenceSpec> sequence;     // the worked diverging sequence
  std::optional<std::vector<double>> direction;  // a distinguished direction in Sigma
  std::string description;
};

std::vector<std::string> catalog_names();
CatalogEntry catalog_entry(const std::string& name);
std::vector<CatalogEntry> catalog();

// so(n) basis element e^a (x) e_b - e^b (x) e_a, 1-based a < b
Mat so_generator(int n, int a, int b);

LieAlgebra su2_algebra();
LieAlgebra so5_algebra();    // basis (E, X1, ..., X9) of the Stiefel example
LieAlgebra u1_su2_algebra(); // basis (E, X1, X2, X3)

}  // namespace homocurv
