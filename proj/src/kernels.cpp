#include "qubml/kernels.hpp"

#include <cassert>
#include <cstdint>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "qubml/parallel.hpp"

namespace qubml {

Matrix gram_matrix(const Matrix& x) {
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  Matrix out(d, d);
  // Threads own disjoint stripes of output rows and each streams the samples
  // once, so every entry accumulates in ascending sample order no matter the
  // thread count. One thread degenerates to the plain serial pass.
#pragma omp parallel if (parallel::enabled())
  {
    std::size_t lo = 0;
    std::size_t hi = d;
#if defined(_OPENMP)
    const std::size_t t = static_cast<std::size_t>(omp_get_thread_num());
    const std::size_t nt = static_cast<std::size_t>(omp_get_num_threads());
    lo = d * t / nt;
    hi = d * (t + 1) / nt;
#endif
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t i = lo; i < hi; ++i)
        for (std::size_t j = i; j < d; ++j) out(i, j) += x(r, i) * x(r, j);
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) out(j, i) = out(i, j);
  return out;
}

std::vector<double> transpose_matvec(const Matrix& x, std::span<const double> y) {
  assert(x.rows() == y.size());
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  std::vector<double> out(d, 0.0);
#pragma omp parallel for schedule(static) if (parallel::enabled())
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(d); ++i) {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) s += x(r, i) * y[r];
    out[i] = s;
  }
  return out;
}

}  // namespace qubml
