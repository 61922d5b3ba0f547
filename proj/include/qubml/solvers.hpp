#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qubml/qubo.hpp"

namespace qubml {

struct ExactConfig {
  // Refuse instances above this many variables instead of grinding forever.
  std::size_t max_vars = 25;
  // Two states tie when their energies differ by at most this (absolute).
  double tie_tolerance = 1e-9;
  // Stop collecting tied optima beyond this many and set optima_truncated.
  std::size_t max_optima = std::size_t{1} << 20;
};

struct AnnealConfig {
  std::uint64_t sweeps = 200;
  std::uint64_t restarts = 50;
  // t_hi <= 0 picks a starting temperature from the coefficient scale.
  double t_hi = 0.0;
  double t_lo = 1e-3;
  std::uint64_t seed = 1;
};

struct SolverStats {
  std::uint64_t sweeps = 0;
  std::uint64_t restarts = 0;
  std::uint64_t seed = 0;
};

struct SolverReport {
  BitVector best;
  double energy = 0.0;
  // Exact backend only: every tied minimizer in lexicographic order.
  std::optional<std::vector<BitVector>> all_optima;
  bool optima_truncated = false;
  SolverStats stats;
  double wall_seconds = 0.0;
};

// Exhaustive enumeration. Throws SolverRefusal when size() > cfg.max_vars.
SolverReport solve_exact(const QuboInstance& q, const ExactConfig& cfg = {});

// Single-bit-flip Metropolis annealing over a geometric temperature ladder.
// Deterministic for a fixed config, independent of thread count.
SolverReport solve_anneal(const QuboInstance& q, const AnnealConfig& cfg = {});

// Starting temperature used when cfg.t_hi is not positive.
double default_t_hi(const QuboInstance& q);

}  // namespace qubml
