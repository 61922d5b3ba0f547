#include "qubml/matrix.hpp"

#include <cassert>
#include <cmath>

namespace qubml {

Matrix matmul(const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.rows());
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const double ail = a(i, l);
      if (ail == 0.0) continue;
      const double* brow = b.row(l);
      double* orow = out.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j) orow[j] += ail * brow[j];
    }
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return out;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  const double* d = a.data();
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(d[i]));
  return m;
}

std::size_t count_nonzeros(const Matrix& a) {
  std::size_t n = 0;
  const double* d = a.data();
  for (std::size_t i = 0; i < a.size(); ++i) n += (d[i] != 0.0);
  return n;
}

}  // namespace qubml
