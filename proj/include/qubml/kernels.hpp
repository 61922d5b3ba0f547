#pragma once

#include <span>
#include <vector>

#include "qubml/matrix.hpp"

namespace qubml {

// x^T x. Every entry accumulates its products in ascending sample order on
// both the serial and the parallel path, so the result does not depend on the
// thread count.
Matrix gram_matrix(const Matrix& x);

// x^T y
std::vector<double> transpose_matvec(const Matrix& x, std::span<const double> y);

}  // namespace qubml
