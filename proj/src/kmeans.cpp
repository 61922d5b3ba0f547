#include "qubml/kmeans.hpp"

#include <cmath>
#include <cstdint>

#include "qubml/errors.hpp"
#include "qubml/parallel.hpp"

namespace qubml {

KmeansProblem KmeansProblem::from_data(Matrix x, std::size_t k, double alpha,
                                       double beta) {
  const std::size_t n = x.rows();
  if (n == 0 || x.cols() == 0) throw IngestError("clustering data must be non-empty");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!std::isfinite(x.data()[i])) throw IngestError("non-finite feature value");
  if (k < 2 || k > n)
    throw ConfigError("cluster count must lie between 2 and the number of points");
  if (!(alpha >= 0.0) || !(beta >= 0.0) || !std::isfinite(alpha) || !std::isfinite(beta))
    throw ConfigError("penalty weights must be finite and non-negative");
  return KmeansProblem{std::move(x), k, alpha, beta};
}

Matrix build_distance_matrix(const Matrix& points) {
  const std::size_t n = points.rows();
  const std::size_t d = points.cols();
  Matrix out(n, n);
#pragma omp parallel for schedule(static) if (parallel::enabled())
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t c = 0; c < d; ++c) {
        const double diff = points(i, c) - points(j, c);
        s += diff * diff;
      }
      out(i, j) = s;
    }
  return out;
}

DistanceMatrix build_distance_matrix(const KmeansProblem& prob) {
  return build_distance_matrix(prob.x);
}

BitVector AssignmentMatrix::row_stacked() const {
  BitVector out(n * k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) out[i * k + j] = at(i, j);
  return out;
}

Matrix build_permutation(std::size_t n, std::size_t k) {
  Matrix q(n * k, n * k);
  for (std::size_t r = 0; r < n * k; ++r) q(r, n * (r % k) + r / k) = 1.0;
  return q;
}

QuboInstance formulate_kmeans(const KmeansProblem& prob) {
  const std::size_t n = prob.n_points();
  const std::size_t k = prob.k;
  const double alpha = prob.alpha;
  const double beta = prob.beta;
  const Matrix dist = build_distance_matrix(prob.x);

  const std::size_t m = n * k;
  Matrix a(m, m);

  // cluster-diagonal blocks: distances plus the balance penalty
  const double target = 2.0 * static_cast<double>(n) / static_cast<double>(k);
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t base = j * n;
    for (std::size_t i1 = 0; i1 < n; ++i1)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        a(base + i1, base + i2) +=
            dist(i1, i2) + (i1 == i2 ? alpha * (1.0 - target) : alpha);
  }

  // per-point coupling across clusters: the exactly-one penalty
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j1 = 0; j1 < k; ++j1)
      for (std::size_t j2 = 0; j2 < k; ++j2)
        a(j1 * n + i, j2 * n + i) += beta * (j1 == j2 ? -1.0 : 1.0);

  return QuboInstance::from_symmetric(std::move(a), std::vector<double>(m, 0.0));
}

KmeansSolution decode_kmeans(const KmeansProblem& prob, const BitVector& z) {
  const std::size_t n = prob.n_points();
  const std::size_t k = prob.k;
  if (z.size() != n * k)
    throw ConfigError("bit vector length does not match the membership layout");

  KmeansSolution sol;
  sol.assignment = AssignmentMatrix{n, k, std::vector<std::uint8_t>(z.begin(), z.end())};
  sol.row_sums.assign(n, 0);
  sol.col_sums.assign(k, 0);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint8_t bit = sol.assignment.at(i, j);
      sol.row_sums[i] += bit;
      sol.col_sums[j] += bit;
    }

  const std::size_t lo = n / k;
  const std::size_t hi = lo + (n % k == 0 ? 0 : 1);
  sol.feasible = true;
  for (std::size_t i = 0; i < n; ++i)
    if (sol.row_sums[i] != 1) sol.feasible = false;
  for (std::size_t j = 0; j < k; ++j)
    if (sol.col_sums[j] < lo || sol.col_sums[j] > hi) sol.feasible = false;

  const Matrix dist = build_distance_matrix(prob.x);
  if (sol.feasible) {
    sol.clusters.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (sol.assignment.at(i, j)) sol.clusters[i] = j;

    // Ordered-pair walk, the exact summation the partition oracle uses, so
    // the two costs compare equal without tolerance.
    double cost = 0.0;
    for (std::size_t i1 = 0; i1 < n; ++i1)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        if (i1 != i2 && sol.clusters[i1] == sol.clusters[i2]) cost += dist(i1, i2);
    sol.within_cost = cost;
  } else {
    // Infeasible patterns still get the quadratic-form cost with membership
    // multiplicity, purely for reporting.
    double cost = 0.0;
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i1 = 0; i1 < n; ++i1) {
        if (!sol.assignment.at(i1, j)) continue;
        for (std::size_t i2 = 0; i2 < n; ++i2)
          if (sol.assignment.at(i2, j)) cost += dist(i1, i2);
      }
    sol.within_cost = cost;
  }
  return sol;
}

Penalties suggest_penalties(const DistanceMatrix& distance) {
  const double w = static_cast<double>(distance.rows()) * max_abs(distance) + 1.0;
  return Penalties{w, w};
}

Penalties suggest_penalties(const KmeansProblem& prob) {
  return suggest_penalties(build_distance_matrix(prob.x));
}

}  // namespace qubml
