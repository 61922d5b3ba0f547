#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracle_helpers.hpp"
#include "qubml/errors.hpp"
#include "qubml/parallel.hpp"
#include "qubml/qubo.hpp"
#include "qubml/reference.hpp"
#include "qubml/solvers.hpp"

using qubml::AnnealConfig;
using qubml::BitVector;
using qubml::ExactConfig;
using qubml::Matrix;
using qubml::QuboInstance;
using qubml::SolverReport;

namespace {

QuboInstance random_instance(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix a = testhelp::random_matrix(m, m, rng);
  return QuboInstance::from_raw(std::move(a), testhelp::random_vector(m, rng));
}

}  // namespace

TEST_CASE("exact solver on hand-checked instances") {
  const QuboInstance q1 = QuboInstance::from_raw(Matrix(2, 2), {1.0, 1.0});
  const SolverReport r1 = qubml::solve_exact(q1);
  CHECK(r1.best == BitVector{0, 0});
  CHECK(r1.energy == 0.0);

  Matrix neg(2, 2);
  neg(0, 0) = neg(1, 1) = -1.0;
  const SolverReport r2 = qubml::solve_exact(QuboInstance::from_raw(neg, {0.0, 0.0}));
  CHECK(r2.best == BitVector{1, 1});
  CHECK(r2.energy == -2.0);
}

TEST_CASE("exact solver agrees with direct enumeration on 10 variables") {
  const QuboInstance q = random_instance(10, 21);
  const SolverReport rep = qubml::solve_exact(q);
  double best = 0.0;
  for (unsigned v = 0; v < 1024; ++v) {
    const double e = testhelp::naive_energy(q.a, q.b, testhelp::bits_of(v, 10));
    if (v == 0 || e < best) best = e;
  }
  CHECK(rep.energy == doctest::Approx(best).epsilon(1e-12));
  CHECK(rep.energy == qubml::evaluate(q, rep.best));
}

TEST_CASE("degenerate optima come back complete and lexicographic") {
  const QuboInstance q = QuboInstance::from_raw(Matrix(2, 2), {0.0, 0.0});
  const SolverReport rep = qubml::solve_exact(q);
  REQUIRE(rep.all_optima.has_value());
  REQUIRE(rep.all_optima->size() == 4);
  CHECK((*rep.all_optima)[0] == BitVector{0, 0});
  CHECK((*rep.all_optima)[1] == BitVector{0, 1});
  CHECK((*rep.all_optima)[2] == BitVector{1, 0});
  CHECK((*rep.all_optima)[3] == BitVector{1, 1});
  CHECK_FALSE(rep.optima_truncated);
}

TEST_CASE("exact solver refuses oversized instances") {
  const QuboInstance q = QuboInstance::from_raw(Matrix(26, 26),
                                                std::vector<double>(26, 0.0));
  CHECK_THROWS_AS(qubml::solve_exact(q), qubml::SolverRefusal);
  CHECK_THROWS_WITH_AS(qubml::solve_exact(q),
                       doctest::Contains("annealing"), qubml::SolverRefusal);
}

TEST_CASE("exact results do not depend on the parallel path") {
  const QuboInstance q = random_instance(12, 33);
  const SolverReport par = qubml::solve_exact(q);
  SolverReport ser;
  {
    qubml::parallel::SerialSection off;
    ser = qubml::solve_exact(q);
  }
  CHECK(par.energy == ser.energy);
  CHECK(par.best == ser.best);
  REQUIRE(par.all_optima.has_value());
  REQUIRE(ser.all_optima.has_value());
  CHECK(*par.all_optima == *ser.all_optima);

  const SolverReport ref = qubml::reference::solve_exact(q);
  CHECK(par.energy == ref.energy);
  CHECK(par.best == ref.best);
  CHECK(*par.all_optima == *ref.all_optima);
}

TEST_CASE("scaling the instance scales energies and keeps the argmin set") {
  const QuboInstance q = random_instance(8, 44);
  Matrix a2(8, 8);
  std::vector<double> b2(8);
  for (std::size_t i = 0; i < 8; ++i) {
    b2[i] = 3.5 * q.b[i];
    for (std::size_t j = 0; j < 8; ++j) a2(i, j) = 3.5 * q.a(i, j);
  }
  const QuboInstance scaled = QuboInstance::from_symmetric(std::move(a2), b2);
  const SolverReport r1 = qubml::solve_exact(q);
  const SolverReport r2 = qubml::solve_exact(scaled);
  CHECK(r2.energy == doctest::Approx(3.5 * r1.energy).epsilon(1e-12));
  CHECK(*r1.all_optima == *r2.all_optima);
}

TEST_CASE("annealer never beats the exact minimum and hits it when seeded") {
  const QuboInstance q = random_instance(10, 21);
  const double exact = qubml::solve_exact(q).energy;
  AnnealConfig cfg;
  cfg.sweeps = 200;
  cfg.restarts = 50;
  cfg.seed = 1;
  const SolverReport rep = qubml::solve_anneal(q, cfg);
  CHECK(rep.energy >= exact - 1e-12);
  CHECK(rep.energy == doctest::Approx(exact).epsilon(1e-12));
  CHECK(rep.energy == qubml::evaluate(q, rep.best));
}

TEST_CASE("annealing is deterministic and thread-count independent") {
  const QuboInstance q = random_instance(16, 55);
  AnnealConfig cfg;
  cfg.seed = 7;
  const SolverReport a = qubml::solve_anneal(q, cfg);
  const SolverReport b = qubml::solve_anneal(q, cfg);
  CHECK(a.energy == b.energy);
  CHECK(a.best == b.best);
  CHECK(a.stats.seed == 7);

  SolverReport ser;
  {
    qubml::parallel::SerialSection off;
    ser = qubml::solve_anneal(q, cfg);
  }
  CHECK(a.energy == ser.energy);
  CHECK(a.best == ser.best);

  const SolverReport ref = qubml::reference::solve_anneal(q, cfg);
  CHECK(a.energy == ref.energy);
  CHECK(a.best == ref.best);
}

TEST_CASE("annealer rejects broken schedules") {
  const QuboInstance q = random_instance(4, 66);
  AnnealConfig cfg;
  cfg.sweeps = 0;
  CHECK_THROWS_AS(qubml::solve_anneal(q, cfg), qubml::ConfigError);
  cfg = AnnealConfig{};
  cfg.restarts = 0;
  CHECK_THROWS_AS(qubml::solve_anneal(q, cfg), qubml::ConfigError);
  cfg = AnnealConfig{};
  cfg.t_lo = 0.0;
  CHECK_THROWS_AS(qubml::solve_anneal(q, cfg), qubml::ConfigError);
  cfg = AnnealConfig{};
  cfg.t_hi = 1e-3;
  cfg.t_lo = 1e-3;  // not strictly decreasing
  CHECK_THROWS_AS(qubml::solve_anneal(q, cfg), qubml::ConfigError);
}

TEST_CASE("default start temperature tracks the largest coupling") {
  const QuboInstance q = random_instance(6, 77);
  CHECK(qubml::default_t_hi(q) == qubml::max_abs(q.a) * 6.0);

  const QuboInstance fieldonly =
      QuboInstance::from_raw(Matrix(2, 2), {0.5, -2.0});
  CHECK(qubml::default_t_hi(fieldonly) == 2.0);

  const QuboInstance empty = QuboInstance::from_raw(Matrix(2, 2), {0.0, 0.0});
  CHECK(qubml::default_t_hi(empty) == 1.0);
}
