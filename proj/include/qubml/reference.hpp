#pragma once

#include "qubml/matrix.hpp"
#include "qubml/solvers.hpp"

// Serial counterparts of the OpenMP kernels. These stay deliberately plain
// (direct evaluation, no incremental updates) so tests and the benchmark can
// compare the fast paths against them.
namespace qubml::reference {

SolverReport solve_exact(const QuboInstance& q, const ExactConfig& cfg = {});
SolverReport solve_anneal(const QuboInstance& q, const AnnealConfig& cfg = {});

// Pairwise squared Euclidean distances between the rows of points.
Matrix distance_matrix(const Matrix& points);

// x^T x
Matrix gram_matrix(const Matrix& x);

}  // namespace qubml::reference
