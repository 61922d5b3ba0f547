#pragma once

#include <cstdint>
#include <vector>

#include "qubml/matrix.hpp"
#include "qubml/qubo.hpp"

namespace qubml {

struct KmeansProblem {
  Matrix x;  // N x d
  std::size_t k = 2;
  double alpha = 0.0;  // balance penalty weight
  double beta = 0.0;   // one-cluster-per-point penalty weight

  std::size_t n_points() const { return x.rows(); }

  static KmeansProblem from_data(Matrix x, std::size_t k, double alpha, double beta);
};

// Symmetric, zero diagonal, nonnegative.
using DistanceMatrix = Matrix;

// Pairwise squared Euclidean distances between rows. OpenMP over rows; entry
// values match reference::distance_matrix exactly.
DistanceMatrix build_distance_matrix(const Matrix& points);
DistanceMatrix build_distance_matrix(const KmeansProblem& prob);

// 0/1 matrix that reorders a cluster-major stacked membership vector into
// point-major order. Size nk x nk.
Matrix build_permutation(std::size_t n, std::size_t k);

// Membership QUBO over cluster-major bits (bit j*N+i: point i in cluster j).
// Distances reward co-clustering; the penalties charge unbalanced clusters
// and points not assigned exactly once.
QuboInstance formulate_kmeans(const KmeansProblem& prob);

struct AssignmentMatrix {
  std::size_t n = 0, k = 0;
  std::vector<std::uint8_t> cells;  // cluster-major (column-stacked), cells[j*n+i]

  std::uint8_t at(std::size_t i, std::size_t j) const { return cells[j * n + i]; }
  BitVector column_stacked() const { return BitVector(cells.begin(), cells.end()); }
  BitVector row_stacked() const;
};

struct KmeansSolution {
  AssignmentMatrix assignment;
  std::vector<std::size_t> row_sums;  // per point
  std::vector<std::size_t> col_sums;  // per cluster
  bool feasible = false;              // rows all one, columns within floor/ceil of N/k
  std::vector<std::size_t> clusters;  // per point, only when feasible
  double within_cost = 0.0;           // summed ordered same-cluster pair distances
};

KmeansSolution decode_kmeans(const KmeansProblem& prob, const BitVector& z);

struct Penalties {
  double alpha = 0.0;
  double beta = 0.0;
};

// Large enough to dominate any distance the assignment can save.
Penalties suggest_penalties(const DistanceMatrix& distance);
Penalties suggest_penalties(const KmeansProblem& prob);

}  // namespace qubml
