#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <string>

#include "qubml/errors.hpp"
#include "qubml/parallel.hpp"
#include "qubml/solvers.hpp"
#include "solver_detail.hpp"

namespace qubml {

namespace {

constexpr std::uint64_t kReanchorInterval = 4096;

struct ChunkScan {
  double min_energy = 0.0;
  std::uint64_t argmin_counter = 0;
  std::vector<std::uint64_t> candidates;
  bool capped = false;
};

// Walks counters [lo, hi), visiting pattern gray(c) for each c. The walk
// flips one variable per step, so energies update incrementally; the field
// is re-anchored periodically to stop drift. When collect is true, patterns
// within `threshold` are recorded (up to cap); otherwise tracks the minimum.
ChunkScan scan_chunk(const QuboInstance& q, std::uint64_t lo, std::uint64_t hi,
                     bool collect, double threshold, std::size_t cap) {
  const std::size_t m = q.size();
  ChunkScan out;
  std::uint64_t g = lo ^ (lo >> 1);
  BitVector z = bits_from_counter(g, m);
  std::vector<double> h = detail::local_field(q, z);
  double e = detail::energy_from_field(q, z, h);

  out.min_energy = e;
  out.argmin_counter = lo;

  std::uint64_t since_anchor = 0;
  for (std::uint64_t c = lo;; ++c) {
    if (collect) {
      if (e <= threshold) {
        if (out.candidates.size() < cap)
          out.candidates.push_back(g);
        else
          out.capped = true;
      }
    } else if (e < out.min_energy) {
      out.min_energy = e;
      out.argmin_counter = c;
    }
    if (c + 1 >= hi) break;

    const int p = std::countr_zero(c + 1);
    const std::size_t i = m - 1 - static_cast<std::size_t>(p);
    e += detail::flip_delta(q, z, h, i);
    detail::apply_flip(q, z, h, i);
    g ^= std::uint64_t{1} << p;

    if (++since_anchor == kReanchorInterval) {
      h = detail::local_field(q, z);
      e = detail::energy_from_field(q, z, h);
      since_anchor = 0;
    }
  }
  return out;
}

}  // namespace

SolverReport solve_exact(const QuboInstance& q, const ExactConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t m = q.size();
  if (cfg.max_optima == 0) throw ConfigError("max_optima must be positive");
  if (m > cfg.max_vars)
    throw SolverRefusal("exact solver handles at most " + std::to_string(cfg.max_vars) +
                        " variables, got " + std::to_string(m) +
                        "; use the annealing backend");
  if (m > 62)
    throw SolverRefusal("exact enumeration beyond 62 variables is not supported");

  SolverReport report;
  report.stats.restarts = 0;
  if (m == 0) {
    report.all_optima = std::vector<BitVector>{BitVector{}};
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
  }

  const std::uint64_t total = std::uint64_t{1} << m;
  // Chunk count is fixed (not thread dependent) so results never vary with
  // the degree of parallelism.
  const std::uint64_t n_chunks = std::min<std::uint64_t>(16, total);
  std::vector<std::uint64_t> bounds(n_chunks + 1);
  for (std::uint64_t c = 0; c <= n_chunks; ++c) bounds[c] = total / n_chunks * c;
  bounds[n_chunks] = total;

  std::vector<ChunkScan> scans(n_chunks);

#pragma omp parallel for schedule(dynamic, 1) if (parallel::enabled())
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(n_chunks); ++c)
    scans[c] = scan_chunk(q, bounds[c], bounds[c + 1], false, 0.0, 0);

  double estimate = 0.0;
  bool first = true;
  for (const auto& s : scans) {
    const std::uint64_t g = s.argmin_counter ^ (s.argmin_counter >> 1);
    const double e = evaluate(q, bits_from_counter(g, m));
    if (first || e < estimate) estimate = e;
    first = false;
  }

  // Incremental energies can drift by a hair, so candidates are gathered with
  // slack and then re-evaluated exactly before the tie filter decides.
  const double slack = 1e-9 + 1e-10 * (1.0 + std::fabs(estimate));
  const double threshold = estimate + cfg.tie_tolerance + slack;
  const std::size_t cap = cfg.max_optima + 1;

#pragma omp parallel for schedule(dynamic, 1) if (parallel::enabled())
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(n_chunks); ++c)
    scans[c] = scan_chunk(q, bounds[c], bounds[c + 1], true, threshold, cap);

  std::vector<std::uint64_t> patterns;
  bool capped = false;
  for (const auto& s : scans) {
    patterns.insert(patterns.end(), s.candidates.begin(), s.candidates.end());
    capped |= s.capped;
  }
  std::sort(patterns.begin(), patterns.end());

  std::vector<double> exact(patterns.size());
  double best_e = 0.0;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    exact[i] = evaluate(q, bits_from_counter(patterns[i], m));
    if (i == 0 || exact[i] < best_e) best_e = exact[i];
  }

  std::vector<BitVector> optima;
  bool truncated = capped;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (exact[i] > best_e + cfg.tie_tolerance) continue;
    if (optima.size() == cfg.max_optima) {
      truncated = true;
      break;
    }
    optima.push_back(bits_from_counter(patterns[i], m));
  }

  report.best = optima.front();
  report.energy = best_e;
  report.all_optima = std::move(optima);
  report.optima_truncated = truncated;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace qubml
