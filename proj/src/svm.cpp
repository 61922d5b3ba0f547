#include "qubml/svm.hpp"

#include <cmath>

#include "qubml/errors.hpp"

namespace qubml {

SvmProblem SvmProblem::from_data(Matrix x, std::vector<double> y) {
  const std::size_t n = x.rows();
  if (n == 0 || x.cols() == 0) throw IngestError("classifier data must be non-empty");
  if (y.size() != n) throw IngestError("label length does not match sample count");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!std::isfinite(x.data()[i])) throw IngestError("non-finite feature value");
  bool pos = false, neg = false;
  for (double v : y) {
    if (v == 1.0)
      pos = true;
    else if (v == -1.0)
      neg = true;
    else
      throw IngestError("labels must be exactly +1 or -1");
  }
  if (!pos || !neg) throw IngestError("training data needs both classes");
  return SvmProblem{std::move(x), std::move(y)};
}

SvmDualStructure build_dual_structure(const SvmProblem& prob) {
  const std::size_t n = prob.n_samples();
  const std::size_t d = prob.n_features();
  const std::size_t dim = d + 1 + n;

  SvmDualStructure s{Matrix(dim, dim), std::vector<double>(dim, 0.0), Matrix(n, d)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j)
      s.x_hadamard_y(i, j) = prob.y[i] * prob.x(i, j);

  for (std::size_t j = 0; j < d; ++j) s.u(j, j) = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) s.u(j, d + 1 + i) = s.x_hadamard_y(i, j);
    s.u(d, d + 1 + i) = prob.y[i];
    s.v[d + 1 + i] = -1.0;
  }
  return s;
}

QuboInstance formulate_svm(const SvmProblem& prob, const PrecisionVector& p) {
  const std::size_t n = prob.n_samples();
  const std::size_t d = prob.n_features();
  const auto& e = p.entries();
  const std::size_t k = e.size();
  const std::vector<double> ep = p.positive_entries();
  const std::size_t kp = ep.size();
  if (kp == 0)
    throw ConfigError(
        "the multiplier encoding needs at least one positive precision entry");

  const std::size_t wb_bits = (d + 1) * k;
  const std::size_t m = wb_bits + n * kp;
  Matrix a(m, m);
  std::vector<double> b(m);

  // w block diagonal: -w^T w
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t l = 0; l < k; ++l) a(j * k + t, j * k + l) = -e[t] * e[l];

  // couplings between (w, bias) bits and multiplier bits, already halved so
  // the assembled matrix is its own symmetrization
  for (std::size_t i = 0; i < n; ++i) {
    const double yi = prob.y[i];
    const std::size_t lam0 = wb_bits + i * kp;
    for (std::size_t j = 0; j <= d; ++j) {
      const double coeff = j < d ? yi * prob.x(i, j) : yi;
      for (std::size_t t = 0; t < k; ++t) {
        const std::size_t row = j * k + t;
        for (std::size_t s = 0; s < kp; ++s) {
          const double half = 0.5 * coeff * e[t] * ep[s];
          a(row, lam0 + s) = half;
          a(lam0 + s, row) = half;
        }
      }
    }
    for (std::size_t s = 0; s < kp; ++s) b[lam0 + s] = -ep[s];
  }
  return QuboInstance::from_symmetric(std::move(a), std::move(b));
}

SvmSolution decode_svm(const SvmProblem& prob, const PrecisionMatrix& pm,
                       const BitVector& z) {
  const std::size_t n = prob.n_samples();
  const std::size_t d = prob.n_features();
  const std::vector<double> theta = pm.decode(z);
  if (theta.size() != d + 1 + n)
    throw ConfigError("encoding does not match the problem shape");

  SvmSolution sol;
  sol.w.assign(theta.begin(), theta.begin() + d);
  sol.bias = theta[d];
  sol.lambda.assign(theta.begin() + d + 1, theta.end());

  double obj = 0.0;
  for (double wj : sol.w) obj -= wj * wj;
  double lam_y = 0.0;
  sol.margins.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double wx = 0.0;
    for (std::size_t j = 0; j < d; ++j) wx += sol.w[j] * prob.x(i, j);
    obj += sol.lambda[i] * prob.y[i] * wx;
    lam_y += sol.lambda[i] * prob.y[i];
    obj -= sol.lambda[i];
    sol.margins[i] = prob.y[i] * (wx + sol.bias);
  }
  sol.dual_objective = obj + sol.bias * lam_y;
  return sol;
}

ClassifierReport validate_classifier(const SvmSolution& sol, const SvmProblem& prob) {
  if (sol.w.size() != prob.n_features())
    throw ConfigError("weight length does not match feature count");
  ClassifierReport rep;
  rep.margins.resize(prob.n_samples());
  rep.separated = true;
  for (std::size_t i = 0; i < prob.n_samples(); ++i) {
    double wx = sol.bias;
    for (std::size_t j = 0; j < sol.w.size(); ++j) wx += sol.w[j] * prob.x(i, j);
    rep.margins[i] = prob.y[i] * wx;
    if (rep.margins[i] < 1.0) ++rep.violations;
    if (!(rep.margins[i] > 0.0)) rep.separated = false;
  }
  return rep;
}

}  // namespace qubml
