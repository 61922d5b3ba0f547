#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracle_helpers.hpp"
#include "qubml/errors.hpp"
#include "qubml/kmeans.hpp"
#include "qubml/reference.hpp"
#include "qubml/solvers.hpp"

using qubml::BitVector;
using qubml::KmeansProblem;
using qubml::Matrix;
using qubml::QuboInstance;

namespace {

Matrix points_1d(std::initializer_list<double> xs) {
  Matrix m(xs.size(), 1);
  std::size_t i = 0;
  for (double v : xs) m(i++, 0) = v;
  return m;
}

}  // namespace

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(KmeansProblem::from_data(points_1d({0.0, 1.0}), 1, 1.0, 1.0),
                  qubml::ConfigError);
  CHECK_THROWS_AS(KmeansProblem::from_data(points_1d({0.0, 1.0}), 3, 1.0, 1.0),
                  qubml::ConfigError);
  CHECK_THROWS_AS(KmeansProblem::from_data(points_1d({0.0, 1.0}), 2, -1.0, 1.0),
                  qubml::ConfigError);
  CHECK_THROWS_AS(
      KmeansProblem::from_data(points_1d({0.0, std::nan("")}), 2, 1.0, 1.0),
      qubml::IngestError);
}

TEST_CASE("distance matrix") {
  const auto d = qubml::build_distance_matrix(points_1d({0.0, 3.0}));
  CHECK(d(0, 0) == 0.0);
  CHECK(d(0, 1) == 9.0);
  CHECK(d(1, 0) == 9.0);
  CHECK(d(1, 1) == 0.0);

  std::mt19937_64 rng(41);
  const Matrix x = testhelp::random_matrix(5, 3, rng);
  const auto dist = qubml::build_distance_matrix(x);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(dist(i, i) == 0.0);
    for (std::size_t j = 0; j < 5; ++j) {
      double direct = 0.0;
      for (std::size_t m = 0; m < 3; ++m)
        direct += (x(i, m) - x(j, m)) * (x(i, m) - x(j, m));
      CHECK(dist(i, j) == direct);
      CHECK(dist(i, j) == dist(j, i));
    }
  }
  const auto ref = qubml::reference::distance_matrix(x);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(dist(i, j) == ref(i, j));
}

TEST_CASE("permutation reorders cluster-major bits into point-major order") {
  const Matrix q22 = qubml::build_permutation(2, 2);
  // rows pick source positions 1, 3, 2, 4 of [w11, w21, w12, w22]
  const std::size_t expect[4] = {0, 2, 1, 3};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      CHECK(q22(r, c) == (c == expect[r] ? 1.0 : 0.0));

  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {4, 3}}) {
    const Matrix q = qubml::build_permutation(n, k);
    const Matrix qqt = qubml::matmul(q, qubml::transpose(q));
    for (std::size_t i = 0; i < n * k; ++i)
      for (std::size_t j = 0; j < n * k; ++j)
        CHECK(qqt(i, j) == (i == j ? 1.0 : 0.0));
  }

  // blocks of k of Q w_hat are the rows of the assignment grid
  std::mt19937_64 rng(42);
  const std::size_t n = 3, k = 2;
  const Matrix q = qubml::build_permutation(n, k);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> w(n * k);
    for (auto& v : w) v = rng() % 2;
    for (std::size_t r = 0; r < n * k; ++r) {
      double dot = 0.0;
      for (std::size_t c = 0; c < n * k; ++c) dot += q(r, c) * w[c];
      const std::size_t point = r / k, cluster = r % k;
      CHECK(dot == w[cluster * n + point]);
    }
  }
}

TEST_CASE("formulation basics") {
  std::mt19937_64 rng(43);
  const KmeansProblem prob =
      KmeansProblem::from_data(testhelp::random_matrix(4, 2, rng), 2, 1.0, 1.0);
  const QuboInstance q = qubml::formulate_kmeans(prob);
  CHECK(q.size() == 8);
  for (double bi : q.b) CHECK(bi == 0.0);
  CHECK(qubml::evaluate(q, BitVector(8, 0)) == 0.0);
}

TEST_CASE("energy plus restored constants equals the penalty form") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 2 + rng() % 2, k = 2;
    std::uniform_real_distribution<double> pen(0.0, 5.0);
    const double alpha = pen(rng), beta = pen(rng);
    const KmeansProblem prob = KmeansProblem::from_data(
        testhelp::random_matrix(n, 2, rng), k, alpha, beta);
    const QuboInstance q = qubml::formulate_kmeans(prob);
    const auto dist = qubml::build_distance_matrix(prob);
    const double nk = static_cast<double>(n) / k;
    const double restored = alpha * k * nk * nk + beta * n;
    for (unsigned long long v = 0; v < (1ULL << (n * k)); ++v) {
      const BitVector z = testhelp::bits_of(v, n * k);
      const double lhs = qubml::evaluate(q, z) + restored;
      const double rhs = testhelp::penalty_form(dist, n, k, alpha, beta, z);
      CHECK(std::fabs(lhs - rhs) <= 1e-9);
    }
  }
}

TEST_CASE("decode reports sums, feasibility, and cost") {
  const KmeansProblem prob =
      KmeansProblem::from_data(points_1d({0.0, 1.0}), 2, 1.0, 1.0);
  const auto diag = qubml::decode_kmeans(prob, BitVector{1, 0, 0, 1});
  CHECK(diag.feasible);
  CHECK(diag.clusters == std::vector<std::size_t>{0, 1});
  CHECK(diag.within_cost == 0.0);

  const auto ones = qubml::decode_kmeans(prob, BitVector{1, 1, 1, 1});
  CHECK_FALSE(ones.feasible);
  CHECK(ones.row_sums == std::vector<std::size_t>{2, 2});
  CHECK(ones.col_sums == std::vector<std::size_t>{2, 2});
}

TEST_CASE("well-separated pairs are grouped at the exact minimum") {
  const Matrix x = points_1d({0.0, 0.1, 10.0, 10.1});
  const auto pen = qubml::suggest_penalties(qubml::build_distance_matrix(x));
  const KmeansProblem prob = KmeansProblem::from_data(x, 2, pen.alpha, pen.beta);
  const QuboInstance q = qubml::formulate_kmeans(prob);
  const auto rep = qubml::solve_exact(q);
  const auto sol = qubml::decode_kmeans(prob, rep.best);
  REQUIRE(sol.feasible);
  CHECK(sol.clusters[0] == sol.clusters[1]);
  CHECK(sol.clusters[2] == sol.clusters[3]);
  CHECK(sol.clusters[0] != sol.clusters[2]);
  CHECK(sol.within_cost == doctest::Approx(0.04).epsilon(1e-9));

  // the relabeled twin appears among the optima
  REQUIRE(rep.all_optima.has_value());
  BitVector twin(8);
  for (std::size_t i = 0; i < 4; ++i) {
    twin[i] = rep.best[4 + i];
    twin[4 + i] = rep.best[i];
  }
  CHECK(std::find(rep.all_optima->begin(), rep.all_optima->end(), twin) !=
        rep.all_optima->end());
}

TEST_CASE("suggested penalties") {
  Matrix zeros(3, 3);
  const auto p0 = qubml::suggest_penalties(zeros);
  CHECK(p0.alpha == 1.0);
  CHECK(p0.beta == 1.0);

  Matrix d(2, 2);
  d(0, 1) = d(1, 0) = 9.0;
  const auto p9 = qubml::suggest_penalties(d);
  CHECK(p9.alpha == 19.0);
  CHECK(p9.beta == 19.0);
}

TEST_CASE("suggested penalties price out every infeasible assignment") {
  std::mt19937_64 rng(45);
  const Matrix x = testhelp::random_matrix(4, 2, rng);
  const auto pen = qubml::suggest_penalties(qubml::build_distance_matrix(x));
  const KmeansProblem prob = KmeansProblem::from_data(x, 2, pen.alpha, pen.beta);
  const QuboInstance q = qubml::formulate_kmeans(prob);
  double best_feasible = 1e300, best_infeasible = 1e300;
  for (unsigned v = 0; v < 256; ++v) {
    const BitVector z = testhelp::bits_of(v, 8);
    const double e = qubml::evaluate(q, z);
    if (qubml::decode_kmeans(prob, z).feasible)
      best_feasible = std::min(best_feasible, e);
    else
      best_infeasible = std::min(best_infeasible, e);
  }
  CHECK(best_infeasible > best_feasible);
}
