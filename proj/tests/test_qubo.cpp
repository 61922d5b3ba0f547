#include <doctest.h>

#include <limits>
#include <random>
#include <stdexcept>

#include "oracle_helpers.hpp"
#include "qubml/qubo.hpp"

using qubml::BitVector;
using qubml::Matrix;
using qubml::QuboInstance;

TEST_CASE("evaluate on hand-checked instances") {
  Matrix a = Matrix::identity(2);
  QuboInstance q = QuboInstance::from_raw(a, {0.0, 0.0});
  CHECK(qubml::evaluate(q, BitVector{0, 0}) == 0.0);

  QuboInstance q2 = QuboInstance::from_raw(Matrix::identity(2), {-2.0, -2.0});
  CHECK(qubml::evaluate(q2, BitVector{1, 1}) == -2.0);
}

TEST_CASE("evaluate matches plain nested summation on random 4x4") {
  std::mt19937_64 rng(11);
  Matrix a = testhelp::random_matrix(4, 4, rng);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < i; ++j) a(i, j) = a(j, i);
  const auto b = testhelp::random_vector(4, rng);
  const QuboInstance q = QuboInstance::from_raw(a, b);
  for (unsigned v = 0; v < 16; ++v) {
    const BitVector z = testhelp::bits_of(v, 4);
    CHECK(qubml::evaluate(q, z) ==
          doctest::Approx(testhelp::naive_energy(q.a, q.b, z)).epsilon(1e-12));
  }
}

TEST_CASE("evaluate rejects length mismatch") {
  const QuboInstance q = QuboInstance::from_raw(Matrix::identity(2), {0.0, 0.0});
  CHECK_THROWS_AS(qubml::evaluate(q, BitVector{1}), std::invalid_argument);
}

TEST_CASE("symmetrize") {
  Matrix a(2, 2);
  a(0, 1) = 2.0;
  const Matrix s = qubml::symmetrize(a);
  CHECK(s(0, 1) == 1.0);
  CHECK(s(1, 0) == 1.0);
  CHECK(s(0, 0) == 0.0);

  Matrix sym(2, 2);
  sym(0, 1) = sym(1, 0) = 3.0;
  const Matrix fixed = qubml::symmetrize(sym);
  CHECK(fixed(0, 1) == 3.0);
  CHECK(fixed(1, 0) == 3.0);
}

TEST_CASE("objective is invariant under symmetrization") {
  std::mt19937_64 rng(12);
  const Matrix raw = testhelp::random_matrix(5, 5, rng);
  const auto b = testhelp::random_vector(5, rng);
  const QuboInstance q = QuboInstance::from_raw(raw, b);
  for (unsigned v = 0; v < 32; ++v) {
    const BitVector z = testhelp::bits_of(v, 5);
    CHECK(qubml::evaluate(q, z) ==
          doctest::Approx(testhelp::naive_energy(raw, b, z)).epsilon(1e-12));
  }
}

TEST_CASE("from_raw validates shape and finiteness") {
  CHECK_THROWS(QuboInstance::from_raw(Matrix(2, 3), {0.0, 0.0}));
  CHECK_THROWS(QuboInstance::from_raw(Matrix(2, 2), {0.0}));
  Matrix bad(1, 1);
  bad(0, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS(QuboInstance::from_raw(bad, {0.0}));
  CHECK_THROWS(QuboInstance::from_raw(Matrix(1, 1),
                                      {std::numeric_limits<double>::quiet_NaN()}));
}

TEST_CASE("counter and bit order agree with lexicographic ranking") {
  // counter 1 with m=3 is [0,0,1]: the counter's low bit is the last position
  CHECK(qubml::bits_from_counter(1, 3) == BitVector{0, 0, 1});
  CHECK(qubml::bits_from_counter(4, 3) == BitVector{1, 0, 0});
  for (unsigned v = 0; v < 8; ++v)
    CHECK(qubml::counter_from_bits(qubml::bits_from_counter(v, 3)) == v);
}
