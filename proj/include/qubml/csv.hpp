#pragma once

#include <string>
#include <vector>

#include "qubml/kmeans.hpp"
#include "qubml/matrix.hpp"
#include "qubml/regression.hpp"
#include "qubml/svm.hpp"

namespace qubml {

struct CsvTable {
  std::vector<std::vector<double>> rows;
  bool had_header = false;
};

// Comma-separated numeric table with one optional header line. Ragged or
// unparseable rows raise IngestError with the 1-based line number.
CsvTable read_csv(const std::string& path);

// Last column is the regression target.
RegressionProblem load_regression_csv(const std::string& path);

// Last column is the class label: +1/-1, or 0/1 which is remapped to -1/+1.
SvmProblem load_svm_csv(const std::string& path);

// Every column is a coordinate.
Matrix load_points_csv(const std::string& path);

}  // namespace qubml
