#include <doctest.h>

#include "qubml/matrix.hpp"

using qubml::Matrix;

TEST_CASE("fresh matrix is zero initialized") {
  Matrix m(3, 4);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 4);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(m(i, j) == 0.0);
}

TEST_CASE("identity") {
  const Matrix id = Matrix::identity(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(id(i, j) == (i == j ? 1.0 : 0.0));
}

TEST_CASE("matmul and transpose") {
  Matrix a(2, 3);
  a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
  a(1, 0) = 4; a(1, 1) = 5; a(1, 2) = 6;
  Matrix b(3, 2);
  b(0, 0) = 7; b(0, 1) = 8;
  b(1, 0) = 9; b(1, 1) = 10;
  b(2, 0) = 11; b(2, 1) = 12;

  const Matrix c = qubml::matmul(a, b);
  CHECK(c(0, 0) == 58.0);
  CHECK(c(0, 1) == 64.0);
  CHECK(c(1, 0) == 139.0);
  CHECK(c(1, 1) == 154.0);

  const Matrix at = qubml::transpose(a);
  CHECK(at.rows() == 3);
  CHECK(at.cols() == 2);
  CHECK(at(2, 1) == 6.0);
}

TEST_CASE("kron of a 2x2 with a 1x2 row") {
  Matrix id = Matrix::identity(2);
  Matrix row(1, 2);
  row(0, 0) = 0.5;
  row(0, 1) = 1.0;
  const Matrix k = qubml::kron(id, row);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 4);
  CHECK(k(0, 0) == 0.5);
  CHECK(k(0, 1) == 1.0);
  CHECK(k(0, 2) == 0.0);
  CHECK(k(1, 2) == 0.5);
  CHECK(k(1, 3) == 1.0);
}

TEST_CASE("max_abs and count_nonzeros") {
  Matrix m(2, 2);
  m(0, 1) = -3.5;
  m(1, 0) = 2.0;
  CHECK(qubml::max_abs(m) == 3.5);
  CHECK(qubml::count_nonzeros(m) == 2);
}
