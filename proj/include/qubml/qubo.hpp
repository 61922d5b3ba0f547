#pragma once

#include <cstdint>
#include <vector>

#include "qubml/matrix.hpp"

namespace qubml {

// One entry per binary variable, values 0 or 1. Index 0 is the leftmost
// (most significant) position when vectors are ordered lexicographically.
using BitVector = std::vector<std::uint8_t>;

// Minimize z^T A z + z^T b over z in {0,1}^M. A is stored symmetric; the
// symmetric part is what the objective sees, so this loses nothing.
struct QuboInstance {
  Matrix a;
  std::vector<double> b;

  std::size_t size() const { return b.size(); }

  // Symmetrizes and validates a general square A.
  static QuboInstance from_raw(Matrix a_raw, std::vector<double> b);

  // Trusts the caller to pass an already symmetric A. Shape checks only.
  static QuboInstance from_symmetric(Matrix a_sym, std::vector<double> b);
};

// (A + A^T) / 2
Matrix symmetrize(const Matrix& a_raw);

double evaluate(const QuboInstance& q, const BitVector& z);

// Bit i of the vector is bit (m-1-i) of the counter, so counter order is
// lexicographic order of the vectors.
BitVector bits_from_counter(std::uint64_t c, std::size_t m);
std::uint64_t counter_from_bits(const BitVector& z);

}  // namespace qubml
