#include <chrono>
#include <cmath>
#include <cstdlib>

#include "qubml/errors.hpp"
#include "qubml/parallel.hpp"
#include "qubml/solvers.hpp"
#include "solver_detail.hpp"

namespace qubml {

double default_t_hi(const QuboInstance& q) {
  double s = max_abs(q.a) * static_cast<double>(q.size());
  if (s <= 0.0)
    for (double v : q.b) s = std::max(s, std::fabs(v));
  return s > 0.0 ? s : 1.0;
}

namespace detail {

RestartResult anneal_restart(const QuboInstance& q, const AnnealConfig& cfg,
                             double t_hi, std::uint64_t restart_index) {
  const std::size_t m = q.size();
  Xoshiro rng(splitmix64(cfg.seed + 0x9e3779b97f4a7c15ULL * (restart_index + 1)));

  BitVector z(m, 0);
  if (restart_index > 0)
    for (auto& bit : z) bit = static_cast<std::uint8_t>(rng.next() & 1u);

  std::vector<double> h = local_field(q, z);
  double e = energy_from_field(q, z, h);
  BitVector best = z;
  double best_e = e;

  const double ratio =
      cfg.sweeps > 1 ? std::pow(cfg.t_lo / t_hi, 1.0 / static_cast<double>(cfg.sweeps - 1))
                     : 1.0;
  double t = t_hi;
  for (std::uint64_t s = 0; s < cfg.sweeps; ++s, t *= ratio) {
    for (std::size_t i = 0; i < m; ++i) {
      const double de = flip_delta(q, z, h, i);
      const double u = rng.u01();  // always drawn so the stream stays aligned
      if (de <= 0.0 || u < std::exp(-de / t)) {
        apply_flip(q, z, h, i);
        e += de;
        if (e < best_e) {
          best_e = e;
          best = z;
        }
      }
    }
  }
  // Report the exact energy of the best state, not the drift-prone running sum.
  return RestartResult{evaluate(q, best), std::move(best)};
}

}  // namespace detail

SolverReport solve_anneal(const QuboInstance& q, const AnnealConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.sweeps == 0) throw ConfigError("sweeps must be positive");
  if (cfg.restarts == 0) throw ConfigError("restarts must be positive");
  if (cfg.t_lo <= 0.0) throw ConfigError("t_lo must be positive");
  if (cfg.t_hi > 0.0 && cfg.t_hi <= cfg.t_lo)
    throw ConfigError("temperature ladder must be strictly decreasing (t_hi > t_lo)");

  double t_hi = cfg.t_hi;
  if (t_hi <= 0.0) {
    t_hi = default_t_hi(q);
    if (t_hi <= cfg.t_lo) t_hi = cfg.t_lo * 1e3;
  }

  std::vector<detail::RestartResult> results(cfg.restarts);
#pragma omp parallel for schedule(dynamic, 1) if (parallel::enabled())
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(cfg.restarts); ++r)
    results[r] = detail::anneal_restart(q, cfg, t_hi, static_cast<std::uint64_t>(r));

  std::size_t winner = 0;
  for (std::size_t r = 1; r < results.size(); ++r)
    if (results[r].energy < results[winner].energy) winner = r;

  SolverReport report;
  report.best = std::move(results[winner].best);
  report.energy = results[winner].energy;
  report.stats.sweeps = cfg.sweeps;
  report.stats.restarts = cfg.restarts;
  report.stats.seed = cfg.seed;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace qubml
