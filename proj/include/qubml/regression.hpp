#pragma once

#include <span>
#include <vector>

#include "qubml/encoding.hpp"
#include "qubml/matrix.hpp"
#include "qubml/qubo.hpp"

namespace qubml {

struct RegressionProblem {
  Matrix x;               // N x d, as loaded
  Matrix x_aug;           // N x (d+1), trailing column of ones for the intercept
  std::vector<double> y;  // N

  std::size_t n_samples() const { return x.rows(); }
  std::size_t n_features() const { return x.cols(); }

  static RegressionProblem from_data(Matrix x, std::vector<double> y);
};

// QUBO whose energy at a bit vector equals the squared training error of the
// decoded weights minus the constant y^T y.
QuboInstance formulate_regression(const RegressionProblem& prob,
                                  const PrecisionVector& p);

// Least-squares weights (d+1, intercept last) via rank-revealing SVD; the
// minimum-norm solution when the design is rank deficient.
std::vector<double> solve_regression_analytic(const RegressionProblem& prob);

double regression_sse(const RegressionProblem& prob, std::span<const double> w);

struct RegressionSolution {
  std::vector<double> w;  // d+1, intercept last
  double sse = 0.0;
  double qubo_energy = 0.0;
  BitVector bits;
};

// qubo_energy is carried through for the sse == energy + y^T y bookkeeping.
RegressionSolution decode_regression(const RegressionProblem& prob,
                                     const PrecisionMatrix& pm, const BitVector& z,
                                     double qubo_energy);

}  // namespace qubml
