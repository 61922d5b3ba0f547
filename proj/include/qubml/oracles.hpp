#pragma once

#include <string>
#include <vector>

#include "qubml/encoding.hpp"
#include "qubml/kmeans.hpp"
#include "qubml/regression.hpp"
#include "qubml/svm.hpp"

namespace qubml {

// Baselines computed without touching the QUBO assembly code, so the two
// routes can disagree loudly in tests and in `verify` runs.
struct OracleReport {
  std::string method;
  double objective = 0.0;
  std::vector<double> parameters;      // regression weights or svm (w..., bias)
  std::vector<std::size_t> assignment; // clustering only
  bool feasible = true;
  double wall_seconds = 0.0;
};

// Normal-equations least squares; objective is the optimal squared error.
OracleReport oracle_regression(const RegressionProblem& prob);

// Exhaustive search over balanced assignments; objective is the summed
// ordered same-cluster pair distance. Refuses more than max_points points.
OracleReport oracle_balanced_partitions(const KmeansProblem& prob,
                                        std::size_t max_points = 12);

// Scans every representable (w, bias) for separators with all margins >= 1
// and reports the one with the smallest ||w||^2; feasible says whether any
// exists. Refuses grids larger than max_grid.
OracleReport oracle_svm_margins(const SvmProblem& prob, const PrecisionVector& p,
                                std::size_t max_grid = 1000000);

}  // namespace qubml
