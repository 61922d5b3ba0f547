#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "qubml/encoding.hpp"
#include "qubml/model.hpp"

namespace qubml {

struct SweepPoint {
  Model model = Model::regression;
  std::size_t n = 0;   // samples / points
  std::size_t d = 0;   // features
  std::size_t k = 0;   // clusters (kmeans)
  std::size_t kp = 0;  // precision entries (regression, svm)
};

struct ScalingRecord {
  SweepPoint point;
  std::size_t m = 0;           // realized variable count
  std::size_t expected_m = 0;  // closed-form count for the model
  std::size_t nonzeros = 0;
  double construction_seconds = 0.0;
};

// Signed ladder of K distinct powers of two, e.g. K=4 -> {-2,-1,1,2}.
PrecisionVector make_precision(std::size_t k);
// All-positive ladder {1, 2, ..., 2^(K-1)}.
PrecisionVector make_positive_precision(std::size_t k);

// Formulates every sweep point on synthetic data and records the realized
// variable count. Throws std::logic_error if any count misses its formula.
std::vector<ScalingRecord> audit_variable_counts(const std::vector<SweepPoint>& sweep);

// 30 desk-scale points covering all three models.
std::vector<SweepPoint> default_count_sweep();

struct AxisPoint {
  std::size_t size = 0;  // value of the varied dimension
  double seconds = 0.0;
  std::size_t m = 0;
};

struct AxisFit {
  Model model = Model::regression;
  std::string axis;                // which dimension varied: "N", "d", "k", "K"
  double expected_exponent = 0.0;  // documented construction complexity
  double allowance = 0.5;          // timing-noise margin on the fit
  double fitted_exponent = 0.0;
  bool within_bound = false;  // fitted <= expected + allowance
  std::vector<AxisPoint> points;
};

// Least-squares slope of log(seconds) against log(size).
// Refuses fewer than four points.
double fit_log_slope(const std::vector<AxisPoint>& points);

// Times QUBO construction along each dimension of each model with the other
// dimensions held fixed and parallelism disabled, then fits growth exponents.
// quick shrinks the instance sizes for fast test runs.
std::vector<AxisFit> audit_construction_scaling(bool quick = false);

void write_scaling_csv(const std::string& path,
                       const std::vector<ScalingRecord>& records);
nlohmann::json scaling_summary_json(const std::vector<AxisFit>& fits);

}  // namespace qubml
