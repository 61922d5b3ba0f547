#include <doctest.h>

#include <random>
#include <vector>

#include "oracle_helpers.hpp"
#include "qubml/encoding.hpp"
#include "qubml/errors.hpp"

using qubml::BitVector;
using qubml::ConfigError;
using qubml::Matrix;
using qubml::PrecisionMatrix;
using qubml::PrecisionVector;

TEST_CASE("signed power of two recognition") {
  CHECK(qubml::is_signed_power_of_two(1.0));
  CHECK(qubml::is_signed_power_of_two(-0.5));
  CHECK(qubml::is_signed_power_of_two(1024.0));
  CHECK_FALSE(qubml::is_signed_power_of_two(0.0));
  CHECK_FALSE(qubml::is_signed_power_of_two(0.3));
  CHECK_FALSE(qubml::is_signed_power_of_two(3.0));
}

TEST_CASE("precision vector construction rules") {
  CHECK_THROWS_AS(PrecisionVector::from_entries({}), ConfigError);
  CHECK_THROWS_AS(PrecisionVector::from_entries({1.0, 0.5}), ConfigError);
  CHECK_THROWS_AS(PrecisionVector::from_entries({0.5, 0.5, 1.0}), ConfigError);
  CHECK_THROWS_AS(PrecisionVector::from_entries({0.3}), ConfigError);
  CHECK_THROWS_AS(PrecisionVector::from_entries({0.0, 1.0}), ConfigError);

  const PrecisionVector p = PrecisionVector::parse_list("-2,-1,-0.5,0.5,1,2");
  CHECK(p.size() == 6);
  CHECK(p.smallest_positive_index() == 4);
  CHECK(p.positive_count() == 3);
  CHECK(p.positive_entries() == std::vector<double>{0.5, 1.0, 2.0});

  const PrecisionVector negonly = PrecisionVector::parse_list("-2,-1");
  CHECK_FALSE(negonly.has_positive());
  CHECK_THROWS_AS(negonly.smallest_positive_index(), ConfigError);
}

TEST_CASE("representable values") {
  const auto seven = qubml::representable_values(
      PrecisionVector::from_entries({-1.0, -0.5, 0.5, 1.0}));
  CHECK(seven == std::vector<double>{-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5});

  const auto two = qubml::representable_values(PrecisionVector::from_entries({1.0}));
  CHECK(two == std::vector<double>{0.0, 1.0});

  const auto eight = qubml::representable_values(
      PrecisionVector::from_entries({0.5, 1.0, 2.0}));
  CHECK(eight == std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5});
}

TEST_CASE("regression layout matches the direct block expansion") {
  const PrecisionVector p = PrecisionVector::from_entries({0.5, 1.0});
  const PrecisionMatrix pm = PrecisionMatrix::regression_layout(p, 1);
  const Matrix dense = pm.dense();
  REQUIRE(dense.rows() == 2);
  REQUIRE(dense.cols() == 4);
  const double expect[2][4] = {{0.5, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.5, 1.0}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(dense(i, j) == expect[i][j]);

  const PrecisionVector p6 = PrecisionVector::parse_list("-2,-1,-0.5,0.5,1,2");
  const PrecisionMatrix pm6 = PrecisionMatrix::regression_layout(p6, 3);
  CHECK(pm6.dense().rows() == 4);
  CHECK(pm6.dense().cols() == 24);

  // row structure: K nonzeros per row, at most one per column
  const Matrix d6 = pm6.dense();
  for (std::size_t i = 0; i < d6.rows(); ++i) {
    std::size_t nz = 0;
    for (std::size_t j = 0; j < d6.cols(); ++j) nz += d6(i, j) != 0.0;
    CHECK(nz == 6);
  }
  for (std::size_t j = 0; j < d6.cols(); ++j) {
    std::size_t nz = 0;
    for (std::size_t i = 0; i < d6.rows(); ++i) nz += d6(i, j) != 0.0;
    CHECK(nz == 1);
  }

  // all-ones bits decode to the per-component entry sum, here exactly zero
  BitVector ones(pm6.bits(), 1);
  const auto decoded = pm6.decode(ones);
  for (double v : decoded) CHECK(v == 0.0);
}

TEST_CASE("svm layout shapes and the positive-only multiplier block") {
  const PrecisionVector p = PrecisionVector::from_entries({-1.0, 1.0});
  const PrecisionMatrix pm = PrecisionMatrix::svm_layout(p, 1, 1);
  const Matrix dense = pm.dense();
  REQUIRE(dense.rows() == 3);
  REQUIRE(dense.cols() == 5);
  CHECK(dense(2, 4) == 1.0);
  for (std::size_t j = 0; j < 4; ++j) CHECK(dense(2, j) == 0.0);
  for (std::size_t i = 0; i < 2; ++i) CHECK(dense(i, 4) == 0.0);

  const PrecisionVector p4 = PrecisionVector::from_entries({-1.0, -0.5, 0.5, 1.0});
  const PrecisionMatrix pm4 = PrecisionMatrix::svm_layout(p4, 2, 3);
  CHECK(pm4.dense().rows() == 6);
  CHECK(pm4.dense().cols() == 18);

  CHECK_THROWS_AS(
      PrecisionMatrix::svm_layout(PrecisionVector::from_entries({-1.0}), 1, 1),
      ConfigError);
}

TEST_CASE("decode matches per-component bit sums") {
  const PrecisionVector p = PrecisionVector::from_entries({0.5, 1.0});
  const PrecisionMatrix pm = PrecisionMatrix::regression_layout(p, 1);
  CHECK(pm.decode(BitVector{1, 0, 0, 1}) == std::vector<double>{0.5, 1.0});
  CHECK(pm.decode(BitVector{0, 0, 0, 0}) == std::vector<double>{0.0, 0.0});
  CHECK_THROWS(pm.decode(BitVector{1, 0}));

  // decode is the dense product
  std::mt19937_64 rng(3);
  const PrecisionVector p6 = PrecisionVector::parse_list("-2,-1,-0.5,0.5,1,2");
  const PrecisionMatrix pmx = PrecisionMatrix::svm_layout(p6, 2, 2);
  const Matrix dense = pmx.dense();
  for (int trial = 0; trial < 20; ++trial) {
    BitVector z(pmx.bits());
    for (auto& bit : z) bit = rng() & 1;
    const auto fast = pmx.decode(z);
    for (std::size_t i = 0; i < dense.rows(); ++i) {
      double dot = 0.0;
      for (std::size_t j = 0; j < dense.cols(); ++j) dot += dense(i, j) * z[j];
      CHECK(fast[i] == doctest::Approx(dot).epsilon(1e-12));
    }
  }
}

TEST_CASE("encode_nearest picks the closest representable value") {
  const PrecisionVector p = PrecisionVector::from_entries({-1.0, -0.5, 0.5, 1.0});
  const PrecisionMatrix pm = PrecisionMatrix::regression_layout(p, 0);

  const double target1[] = {0.6};
  auto bits = pm.encode_nearest(std::span<const double>(target1, 1));
  CHECK(pm.decode(bits) == std::vector<double>{0.5});

  const double target2[] = {-1.5};
  bits = pm.encode_nearest(std::span<const double>(target2, 1));
  CHECK(pm.decode(bits) == std::vector<double>{-1.5});

  const PrecisionVector p2 = PrecisionVector::from_entries({0.5, 1.0});
  const PrecisionMatrix pm2 = PrecisionMatrix::regression_layout(p2, 0);
  const double target3[] = {10.0};
  bits = pm2.encode_nearest(std::span<const double>(target3, 1));
  CHECK(pm2.decode(bits) == std::vector<double>{1.5});

  // tie at 0: both [0,0] and [1,1] decode to 0 under {-1,1}; lex smallest wins
  const PrecisionVector pt = PrecisionVector::from_entries({-1.0, 1.0});
  const PrecisionMatrix pmt = PrecisionMatrix::regression_layout(pt, 0);
  const double target4[] = {0.0};
  bits = pmt.encode_nearest(std::span<const double>(target4, 1));
  CHECK(bits == BitVector{0, 0});
}

TEST_CASE("decode then encode_nearest round-trips the decoded value") {
  std::mt19937_64 rng(4);
  const PrecisionVector p = PrecisionVector::parse_list("-2,-1,-0.5,0.5,1,2");
  const PrecisionMatrix pm = PrecisionMatrix::regression_layout(p, 2);
  for (int trial = 0; trial < 50; ++trial) {
    BitVector z(pm.bits());
    for (auto& bit : z) bit = rng() & 1;
    const auto w = pm.decode(z);
    const BitVector back = pm.encode_nearest(w);
    CHECK(pm.decode(back) == w);
  }
}
