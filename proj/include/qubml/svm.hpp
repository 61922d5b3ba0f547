#pragma once

#include <vector>

#include "qubml/encoding.hpp"
#include "qubml/matrix.hpp"
#include "qubml/qubo.hpp"

namespace qubml {

struct SvmProblem {
  Matrix x;               // N x d
  std::vector<double> y;  // N, each exactly +1 or -1, both classes present

  std::size_t n_samples() const { return x.rows(); }
  std::size_t n_features() const { return x.cols(); }

  static SvmProblem from_data(Matrix x, std::vector<double> y);
};

// Quadratic form of the dual objective over stacked parameters
// theta = [w (d); bias; lambda (N)]: L(theta) = theta^T u theta + v^T theta.
// u is returned raw (upper blocks populated); callers symmetrize during QUBO
// assembly.
struct SvmDualStructure {
  Matrix u;                  // (d+1+N) square
  std::vector<double> v;     // d+1+N
  Matrix x_hadamard_y;       // N x d, row i is y_i * x_i
};

SvmDualStructure build_dual_structure(const SvmProblem& prob);

// QUBO over the bit encoding of theta. Energy at a bit vector equals the
// dual objective of the decoded parameters. Assembled directly from the
// problem data so the cost stays linear in the sample count.
QuboInstance formulate_svm(const SvmProblem& prob, const PrecisionVector& p);

struct SvmSolution {
  std::vector<double> w;
  double bias = 0.0;
  std::vector<double> lambda;
  std::vector<double> margins;  // y_i * (w . x_i + bias)
  double dual_objective = 0.0;
};

SvmSolution decode_svm(const SvmProblem& prob, const PrecisionMatrix& pm,
                       const BitVector& z);

struct ClassifierReport {
  std::vector<double> margins;
  std::size_t violations = 0;  // margins below 1
  bool separated = false;      // every margin strictly positive
};

ClassifierReport validate_classifier(const SvmSolution& sol, const SvmProblem& prob);

}  // namespace qubml
