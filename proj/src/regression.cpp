#include "qubml/regression.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "qubml/errors.hpp"
#include "qubml/kernels.hpp"

namespace qubml {

RegressionProblem RegressionProblem::from_data(Matrix x, std::vector<double> y) {
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  if (n == 0 || d == 0) throw IngestError("regression data must be non-empty");
  if (y.size() != n) throw IngestError("target length does not match sample count");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!std::isfinite(x.data()[i])) throw IngestError("non-finite feature value");
  for (double v : y)
    if (!std::isfinite(v)) throw IngestError("non-finite target value");

  Matrix aug(n, d + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < d; ++c) aug(r, c) = x(r, c);
    aug(r, d) = 1.0;
  }
  return RegressionProblem{std::move(x), std::move(aug), std::move(y)};
}

QuboInstance formulate_regression(const RegressionProblem& prob,
                                  const PrecisionVector& p) {
  const std::size_t da = prob.n_features() + 1;
  const std::size_t k = p.size();
  const auto& e = p.entries();

  const Matrix g = gram_matrix(prob.x_aug);
  const std::vector<double> c = transpose_matvec(prob.x_aug, prob.y);

  const std::size_t m = k * da;
  Matrix a(m, m);
  std::vector<double> b(m);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      const std::size_t row = i * k + t;
      for (std::size_t j = 0; j < da; ++j) {
        const double gij = g(i, j);
        for (std::size_t l = 0; l < k; ++l) a(row, j * k + l) = e[t] * e[l] * gij;
      }
      b[row] = -2.0 * e[t] * c[i];
    }
  return QuboInstance::from_symmetric(std::move(a), std::move(b));
}

std::vector<double> solve_regression_analytic(const RegressionProblem& prob) {
  const std::size_t n = prob.n_samples();
  const std::size_t da = prob.n_features() + 1;
  Eigen::MatrixXd x(n, da);
  Eigen::VectorXd y(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < da; ++c) x(r, c) = prob.x_aug(r, c);
    y(r) = prob.y[r];
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-10);
  Eigen::VectorXd w;
  if (svd.rank() == static_cast<Eigen::Index>(da)) {
    // Full rank: normal equations.
    w = (x.transpose() * x).ldlt().solve(x.transpose() * y);
  } else {
    // Singular design: minimum-norm least squares.
    w = svd.solve(y);
  }
  return std::vector<double>(w.data(), w.data() + w.size());
}

double regression_sse(const RegressionProblem& prob, std::span<const double> w) {
  if (w.size() != prob.n_features() + 1)
    throw ConfigError("weight length does not match feature count plus intercept");
  double sse = 0.0;
  for (std::size_t r = 0; r < prob.n_samples(); ++r) {
    double pred = 0.0;
    for (std::size_t c = 0; c < w.size(); ++c) pred += prob.x_aug(r, c) * w[c];
    const double res = pred - prob.y[r];
    sse += res * res;
  }
  return sse;
}

RegressionSolution decode_regression(const RegressionProblem& prob,
                                     const PrecisionMatrix& pm, const BitVector& z,
                                     double qubo_energy) {
  RegressionSolution sol;
  sol.w = pm.decode(z);
  sol.sse = regression_sse(prob, sol.w);
  sol.qubo_energy = qubo_energy;
  sol.bits = z;
  return sol;
}

}  // namespace qubml
