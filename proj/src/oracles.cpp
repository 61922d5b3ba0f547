#include "qubml/oracles.hpp"

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <string>

#include "qubml/errors.hpp"

namespace qubml {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

OracleReport oracle_regression(const RegressionProblem& prob) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = prob.n_samples();
  const std::size_t da = prob.n_features() + 1;

  // Normal equations assembled with plain loops, solved by a different
  // factorization than the production path uses.
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(da, da);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(da);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < da; ++i) {
      const double xi = prob.x_aug(r, i);
      rhs(i) += xi * prob.y[r];
      for (std::size_t j = 0; j < da; ++j) gram(i, j) += xi * prob.x_aug(r, j);
    }
  }
  Eigen::VectorXd w = gram.ldlt().solve(rhs);
  if (!w.allFinite()) {
    // Singular design: fall back to the pseudo-inverse route.
    w = gram.completeOrthogonalDecomposition().solve(rhs);
  }

  OracleReport rep;
  rep.method = "normal-equations";
  rep.parameters.assign(w.data(), w.data() + w.size());
  double sse = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    double pred = 0.0;
    for (std::size_t i = 0; i < da; ++i) pred += prob.x_aug(r, i) * w(i);
    const double res = pred - prob.y[r];
    sse += res * res;
  }
  rep.objective = sse;
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

namespace {

struct PartitionSearch {
  const Matrix* dist;
  std::size_t n, k, lo, hi;
  std::vector<std::size_t> current;
  std::vector<std::size_t> counts;
  std::vector<std::size_t> best;
  double best_cost;
  bool found;

  double cost_of(const std::vector<std::size_t>& a) const {
    double c = 0.0;
    for (std::size_t i1 = 0; i1 < n; ++i1)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        if (i1 != i2 && a[i1] == a[i2]) c += (*dist)(i1, i2);
    return c;
  }

  void walk(std::size_t point) {
    if (point == n) {
      for (std::size_t j = 0; j < k; ++j)
        if (counts[j] < lo || counts[j] > hi) return;
      const double c = cost_of(current);
      if (!found || c < best_cost) {
        found = true;
        best_cost = c;
        best = current;
      }
      return;
    }
    const std::size_t remaining = n - point;
    for (std::size_t j = 0; j < k; ++j) {
      if (counts[j] == hi) continue;
      // Enough points must remain to lift every cluster to its minimum.
      std::size_t deficit = 0;
      for (std::size_t jj = 0; jj < k; ++jj) {
        const std::size_t c = counts[jj] + (jj == j ? 1 : 0);
        deficit += c < lo ? lo - c : 0;
      }
      if (deficit > remaining - 1) continue;
      current[point] = j;
      ++counts[j];
      walk(point + 1);
      --counts[j];
    }
  }
};

}  // namespace

OracleReport oracle_balanced_partitions(const KmeansProblem& prob,
                                        std::size_t max_points) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = prob.n_points();
  const std::size_t d = prob.x.cols();
  if (n > max_points)
    throw SolverRefusal("balanced partition search handles at most " +
                        std::to_string(max_points) + " points");

  // Its own distance table, same per-entry arithmetic as the decode side.
  Matrix dist(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t c = 0; c < d; ++c) {
        const double diff = prob.x(i, c) - prob.x(j, c);
        s += diff * diff;
      }
      dist(i, j) = s;
    }

  PartitionSearch search;
  search.dist = &dist;
  search.n = n;
  search.k = prob.k;
  search.lo = n / prob.k;
  search.hi = search.lo + (n % prob.k == 0 ? 0 : 1);
  search.current.assign(n, 0);
  search.counts.assign(prob.k, 0);
  search.best_cost = 0.0;
  search.found = false;
  search.walk(0);

  OracleReport rep;
  rep.method = "balanced-partition-enumeration";
  rep.objective = search.best_cost;
  rep.assignment = search.best;
  rep.feasible = search.found;
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

OracleReport oracle_svm_margins(const SvmProblem& prob, const PrecisionVector& p,
                                std::size_t max_grid) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = prob.n_samples();
  const std::size_t d = prob.n_features();
  const std::vector<double> values = representable_values(p);

  double combos = 1.0;
  for (std::size_t c = 0; c <= d; ++c) combos *= static_cast<double>(values.size());
  if (combos > static_cast<double>(max_grid))
    throw SolverRefusal("separator grid has " +
                        std::to_string(static_cast<unsigned long long>(combos)) +
                        " points, above the cap of " + std::to_string(max_grid));

  // Odometer rolls the last coordinate fastest, so candidates appear in
  // lexicographic (w..., bias) order and the first optimum found wins ties.
  std::vector<std::size_t> idx(d + 1, 0);
  std::vector<double> wb(d + 1, 0.0);
  std::vector<double> best_wb;
  double best_norm_sq = 0.0;
  bool found = false;

  while (true) {
    for (std::size_t c = 0; c <= d; ++c) wb[c] = values[idx[c]];
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      double f = wb[d];
      for (std::size_t j = 0; j < d; ++j) f += wb[j] * prob.x(i, j);
      if (prob.y[i] * f < 1.0) ok = false;
    }
    if (ok) {
      double norm_sq = 0.0;
      for (std::size_t j = 0; j < d; ++j) norm_sq += wb[j] * wb[j];
      if (!found || norm_sq < best_norm_sq) {
        found = true;
        best_norm_sq = norm_sq;
        best_wb = wb;
      }
    }
    std::size_t c = d + 1;
    while (c > 0 && ++idx[c - 1] == values.size()) idx[--c] = 0;
    if (c == 0) break;
  }

  OracleReport rep;
  rep.method = "separator-grid-scan";
  rep.feasible = found;
  if (found) {
    rep.objective = best_norm_sq;
    rep.parameters = best_wb;
  }
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

}  // namespace qubml
