#include <chrono>
#include <cstdio>
#include <cstdint>
#include <functional>

#include "qubml/kernels.hpp"
#include "qubml/kmeans.hpp"
#include "qubml/matrix.hpp"
#include "qubml/parallel.hpp"
#include "qubml/qubo.hpp"
#include "qubml/reference.hpp"
#include "qubml/solvers.hpp"

namespace {

using qubml::Matrix;

std::uint64_t state = 0x243f6a8885a308d3ULL;

double next_uniform() {
  state ^= state << 13;
  state ^= state >> 7;
  state ^= state << 17;
  return (state >> 11) * 0x1.0p-53 * 2.0 - 1.0;
}

Matrix random_matrix(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = next_uniform();
  return m;
}

double time_of(const std::function<void()>& fn) {
  double best = 0.0;
  for (int r = 0; r < 3; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r == 0 || s < best) best = s;
  }
  return best;
}

bool identical(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

void report(const char* name, double serial_s, double parallel_s, bool same) {
  std::printf("%-18s serial %10.6fs   parallel %10.6fs   speedup %5.2fx   %s\n",
              name, serial_s, parallel_s, serial_s / parallel_s,
              same ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("kernel benchmark: serial reference vs OpenMP path\n\n");

  {
    const Matrix x = random_matrix(20000, 64);
    Matrix ref, par;
    const double ts = time_of([&] { ref = qubml::reference::gram_matrix(x); });
    const double tp = time_of([&] { par = qubml::gram_matrix(x); });
    report("gram_matrix", ts, tp, identical(ref, par));
  }

  {
    const Matrix pts = random_matrix(1200, 16);
    Matrix ref, par;
    const double ts = time_of([&] { ref = qubml::reference::distance_matrix(pts); });
    const double tp = time_of([&] { par = qubml::build_distance_matrix(pts); });
    report("distance_matrix", ts, tp, identical(ref, par));
  }

  {
    const std::size_t m = 22;
    Matrix a = random_matrix(m, m);
    std::vector<double> b(m);
    for (double& v : b) v = next_uniform();
    const qubml::QuboInstance q = qubml::QuboInstance::from_raw(std::move(a), b);
    qubml::SolverReport ref, par;
    const double ts = time_of([&] { ref = qubml::reference::solve_exact(q); });
    const double tp = time_of([&] { par = qubml::solve_exact(q); });
    report("solve_exact", ts, tp,
           ref.energy == par.energy && ref.best == par.best);
  }

  {
    const std::size_t m = 48;
    Matrix a = random_matrix(m, m);
    std::vector<double> b(m);
    for (double& v : b) v = next_uniform();
    const qubml::QuboInstance q = qubml::QuboInstance::from_raw(std::move(a), b);
    qubml::AnnealConfig cfg;
    cfg.sweeps = 400;
    cfg.restarts = 64;
    qubml::SolverReport ref, par;
    const double ts = time_of([&] { ref = qubml::reference::solve_anneal(q, cfg); });
    const double tp = time_of([&] { par = qubml::solve_anneal(q, cfg); });
    report("solve_anneal", ts, tp,
           ref.energy == par.energy && ref.best == par.best);
  }

  return 0;
}
