#pragma once

#include "homocurv/catalog.hpp"
#include "homocurv/collapse.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace homocurv {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);

LieAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const LieAlgebra& g);

// Algebra fields plus optional "isotropy" (list of vectors), "decomposition" {"basis", "block_dims"},
// "component_generators" (list of row-major matrices) and "pi1_finite".
HomogeneousSpace space_from_json(const Json& j, const DecomposeOptions& opts = {});
// A catalog name or a path to a JSON file.
CatalogEntry load_space(const std::string& ref, const DecomposeOptions& opts = {});

Json validation_to_json(const ValidationReport& r);
Json decomposition_to_json(const Decomposition& d);
Json coefficients_to_json(const CoefficientTable& t);
CoefficientTable coefficients_from_json(const Json& j);

// {"lambdas": [...]} or {"A": row-major matrix in the decomposition basis}
GeneralMetric metric_from_json(const Json& j, const Decomposition& d);
SequenceSpec sequence_from_json(const Json& j);
Json sequence_to_json(const SequenceSpec& s);
std::vector<double> direction_from_json(const Json& j);

Json curvature_to_json(const CurvatureReport& r);
Json sequence_report_to_json(const SequenceReport& r);
Json collapse_report_to_json(const CollapseReport& r);
Json collapse_limit_to_json(const CollapseLimit& r);

// Locale-independent shortest round-trip text.
std::string format_double(double x);
std::string trajectory_csv(const ScanResult& scan, const std::string& axis = "t");
std::string matrix_csv(const Mat& m);

// "start:stop:count", inclusive endpoints.
std::vector<double> parse_grid(const std::string& spec);

}  // namespace homocurv
