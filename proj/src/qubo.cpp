#include "qubml/qubo.hpp"

#include <cmath>
#include <stdexcept>

#include "qubml/errors.hpp"

namespace qubml {

namespace {

void check_shape(const Matrix& a, const std::vector<double>& b) {
  if (a.rows() != a.cols()) throw ConfigError("QUBO matrix must be square");
  if (a.rows() != b.size())
    throw ConfigError("QUBO linear term length does not match matrix size");
  for (double v : b)
    if (!std::isfinite(v)) throw ConfigError("QUBO linear term contains a non-finite entry");
}

}  // namespace

Matrix symmetrize(const Matrix& a_raw) {
  Matrix s(a_raw.rows(), a_raw.cols());
  for (std::size_t i = 0; i < a_raw.rows(); ++i)
    for (std::size_t j = 0; j < a_raw.cols(); ++j)
      s(i, j) = 0.5 * (a_raw(i, j) + a_raw(j, i));
  return s;
}

QuboInstance QuboInstance::from_raw(Matrix a_raw, std::vector<double> b) {
  check_shape(a_raw, b);
  for (std::size_t i = 0; i < a_raw.size(); ++i)
    if (!std::isfinite(a_raw.data()[i]))
      throw ConfigError("QUBO matrix contains a non-finite entry");
  return QuboInstance{symmetrize(a_raw), std::move(b)};
}

QuboInstance QuboInstance::from_symmetric(Matrix a_sym, std::vector<double> b) {
  // No full-matrix scan here: formulators guarantee their output and the
  // construction-time scaling contract forbids an O(M^2) pass.
  check_shape(a_sym, b);
  return QuboInstance{std::move(a_sym), std::move(b)};
}

double evaluate(const QuboInstance& q, const BitVector& z) {
  if (z.size() != q.size())
    throw std::invalid_argument("bit vector length does not match the instance");
  double e = 0.0;
  const std::size_t m = q.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!z[i]) continue;
    const double* row = q.a.row(i);
    double h = q.b[i];
    for (std::size_t j = 0; j < m; ++j)
      if (z[j]) h += row[j];
    e += h;
  }
  return e;
}

BitVector bits_from_counter(std::uint64_t c, std::size_t m) {
  BitVector z(m);
  for (std::size_t i = 0; i < m; ++i)
    z[i] = static_cast<std::uint8_t>((c >> (m - 1 - i)) & 1u);
  return z;
}

std::uint64_t counter_from_bits(const BitVector& z) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < z.size(); ++i)
    c = (c << 1) | (z[i] ? 1u : 0u);
  return c;
}

}  // namespace qubml
