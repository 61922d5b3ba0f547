#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "qubml/qubo.hpp"
#include "qubml/solvers.hpp"

namespace qubml::detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Xoshiro {
  // xoshiro256++, seeded through splitmix64.
  std::uint64_t s[4];

  explicit Xoshiro(std::uint64_t seed) {
    for (auto& w : s) {
      seed = splitmix64(seed);
      w = seed;
    }
  }

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s[0] + s[3], 23) + s[0];
    const std::uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
  }

  double u01() { return (next() >> 11) * 0x1.0p-53; }
};

// Local field h[i] = sum_j A(i,j) z[j] for symmetric A.
inline std::vector<double> local_field(const QuboInstance& q, const BitVector& z) {
  const std::size_t m = q.size();
  std::vector<double> h(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    if (!z[j]) continue;
    const double* row = q.a.row(j);
    for (std::size_t i = 0; i < m; ++i) h[i] += row[i];
  }
  return h;
}

inline double energy_from_field(const QuboInstance& q, const BitVector& z,
                                const std::vector<double>& h) {
  double e = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (z[i]) e += h[i] + q.b[i];
  return e;
}

// Energy change from flipping variable i given the current field.
inline double flip_delta(const QuboInstance& q, const BitVector& z,
                         const std::vector<double>& h, std::size_t i) {
  const double d = z[i] ? -1.0 : 1.0;
  return 2.0 * d * h[i] + q.a(i, i) + d * q.b[i];
}

inline void apply_flip(const QuboInstance& q, BitVector& z, std::vector<double>& h,
                       std::size_t i) {
  const double d = z[i] ? -1.0 : 1.0;
  const double* row = q.a.row(i);
  for (std::size_t j = 0; j < q.size(); ++j) h[j] += d * row[j];
  z[i] ^= 1u;
}

struct RestartResult {
  double energy = 0.0;
  BitVector best;
};

// One annealing restart. Self-contained and deterministic given (cfg, index),
// which keeps multi-threaded runs reproducible.
RestartResult anneal_restart(const QuboInstance& q, const AnnealConfig& cfg,
                             double t_hi, std::uint64_t restart_index);

}  // namespace qubml::detail
