#pragma once

#include "homocurv/curvature.hpp"
#include "homocurv/power_terms.hpp"

#include <array>
#include <string>
#include <vector>

namespace homocurv {

constexpr double kDefaultClusterTol = 1e-8;

// Classes of equal entries of v, ordered by value.
struct IndexPartition {
  std::vector<double> values;            // distinct values, increasing
  std::vector<std::vector<int>> sets;    // original indices per class, increasing
  std::vector<int> order;                // indices sorted by value, ties by index
  std::vector<int> r;                    // r[0] = 0, r[s] = |I_1| + ... + |I_s|
  bool single_class = false;

  int num_classes() const { return static_cast<int>(sets.size()); }
  int class_of(int index) const;
};

IndexPartition partition(const std::vector<double>& v, double cluster_tol = kDefaultClusterTol);

using Triple = std::array<int, 3>;

struct SubmersionVerdict {
  bool holds = false;
  std::vector<Triple> witnesses;  // violating (i, j, k)
};

// [ijk] > 0  =>  v_i - v_j - v_k + min(v) <= 0
SubmersionVerdict is_submersion_direction(const std::vector<double>& v, const CoefficientTable& t,
                                          double tol = kDefaultTol);

// Points of a grid on Sigma (supports up to four blocks).
std::vector<std::vector<double>> sigma_grid(const std::vector<int>& dims, int resolution);

// Grid points of Sigma that are submersion directions, with near-duplicates merged.
std::vector<std::vector<double>> submersion_grid_search(const CoefficientTable& t, int resolution,
                                                        double tol = kDefaultTol);

struct InducedSubalgebra {
  Subspace k;
  std::vector<int> blocks;
  double subalgebra_residual = 0.0;
  double crucial_residual = 0.0;  // max over classes j1 != j2 of [I_1 I_j1 I_j2]
  bool toral = false;
};

InducedSubalgebra induced_subalgebra(const std::vector<double>& v, const HomogeneousSpace& s,
                                     double tol = kDefaultTol, double cluster_tol = kDefaultClusterTol);

struct FlagViolation {
  int q = 0;  // 0-based flag level
  int i = 0, j = 0, k = 0;  // 0-based class indices
  double excess = 0.0;
};

struct FlagCheck {
  bool holds = false;
  bool condition_i = false;
  bool condition_ii = false;
  std::vector<std::string> failures;
  std::vector<FlagViolation> violations;
  double submersion_residual = 0.0;  // worst is_submersion_metric residual along sampled gamma_v(t)
};

FlagCheck flag_check(const std::vector<double>& v, const std::vector<Subspace>& flag, const HomogeneousSpace& s,
                     double tol = kDefaultTol, double cluster_tol = kDefaultClusterTol);

double scal_along_geodesic(const std::vector<double>& v, const CoefficientTable& t, double time);
double scal_along_geodesic_derivative(const std::vector<double>& v, const CoefficientTable& t, double time);

struct TrajectoryRow {
  double t = 0.0;
  double scal = 0.0;
  double ric_norm = 0.0;
  double traceless_ric_norm = 0.0;
  double rm_norm = 0.0;
  std::vector<double> ric;
};

struct ScanResult {
  std::vector<TrajectoryRow> rows;
  std::string scal_tail;
  std::string ric_tail;
  std::string rm_tail;
};

// "diverges", "vanishes" or "bounded", judged on the last quarter of the samples.
std::string classify_tail(const std::vector<double>& values);

// Worker count: HOMOCURV_THREADS if set, else hardware concurrency.
int worker_count();

ScanResult geodesic_scan(const HomogeneousSpace& s, const std::vector<double>& v, const std::vector<double>& ts,
                         int threads = 0);

// lambda_i(n) = c_i n^{a_i}, or sampled rows (n, lambda_1, ..., lambda_l).
struct PowerLawBlock {
  double c = 1.0;
  double a = 0.0;
};

struct SequenceSpec {
  enum class Model { Power, Samples };
  Model model = Model::Power;
  std::vector<PowerLawBlock> blocks;
  std::vector<std::vector<double>> rows;
  bool unit_volume = true;

  int size() const;
  DiagonalMetric at(double n, const std::vector<int>& dims) const;
};

struct PowerFit {
  std::vector<PowerLawBlock> blocks;
  std::vector<double> r_squared;
};
// Log-log least squares over the last half of the rows; rejects fits with R^2 below the gate.
PowerFit fit_power_law(const std::vector<std::vector<double>>& rows, double r2_gate = 0.999);

// Power-law model of a sequence, fitting samples when needed.
std::vector<PowerLawBlock> power_model(const SequenceSpec& seq);

struct SubalgebraVerdict {
  std::string label;
  std::vector<int> blocks;  // 0-based block indices added to h
  int dim = 0;
  bool subalgebra = false;
  double subalgebra_residual = 0.0;
  bool toral = false;
  double toral_residual = 0.0;
};

struct ConditionViolation {
  Triple triple{};        // (i, j, k), 0-based
  double bracket = 0.0;   // [ijk]
  double p_kj = 0.0;      // limit of lambda_k / lambda_j
  bool base = false;      // j and k both outside the index set
};

struct TripleDiagnostic {
  Triple triple{};
  std::string limit;  // of a_ijk
};

struct SequenceReport {
  std::vector<double> v_inf;
  IndexPartition classes;
  int p = 0;  // number of bounded classes
  std::vector<int> i_sh;
  std::vector<int> i_gb;
  Mat p_inf;  // entries in [0, inf]
  std::vector<SubalgebraVerdict> flag;  // k_1, ..., k_{p-1}, then l'
  SubalgebraVerdict l_prime;
  SubalgebraVerdict l;
  bool condition_a = true;
  std::string condition_a_note;
  bool condition_b = true;
  std::vector<ConditionViolation> condition_b_violations;
  bool extended_b = true;
  std::vector<ConditionViolation> extended_b_violations;
  bool has_extended_b_witness = false;
  ConditionViolation extended_b_witness;  // first violation with j, k outside I_gb, else first violation
  AsymptoticLimit scal_limit;
  std::vector<AsymptoticLimit> ric_limits;
  std::vector<TripleDiagnostic> a_ijk;
  std::vector<std::string> notes;
};

SequenceReport classify_sequence(const SequenceSpec& seq, const HomogeneousSpace& s, double tol = kDefaultTol,
                                 double cluster_tol = kDefaultClusterTol);

// Closed-form expansions in n for a power-law sequence.
PowerSum scal_expansion(const std::vector<PowerLawBlock>& seq, const CoefficientTable& t);
PowerSum ric_expansion(const std::vector<PowerLawBlock>& seq, const CoefficientTable& t, int i);

struct EstimateRow {
  double n = 0.0;
  double scal = 0.0;
  double bound = 0.0;
  double margin = 0.0;
};

struct EstimateCheck {
  std::string verdict;  // "holds", "fails" or "vacuous"
  std::vector<EstimateRow> rows;
  double min_margin = 0.0;
};

// q is 1-based as a flag level. Requires k_q = h + blocks of the first q classes of the limit direction to be toral.
EstimateCheck toral_scal_estimate_check(const SequenceSpec& seq, const HomogeneousSpace& s, int q,
                                        const std::vector<double>& n_grid, double tol = kDefaultTol,
                                        double cluster_tol = kDefaultClusterTol);

}  // namespace homocurv
