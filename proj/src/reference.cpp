#include "qubml/reference.hpp"

#include <chrono>
#include <string>

#include "qubml/errors.hpp"
#include "solver_detail.hpp"

namespace qubml::reference {

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
  if (m == 0) {
    report.all_optima = std::vector<BitVector>{BitVector{}};
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
  }

  const std::uint64_t total = std::uint64_t{1} << m;
  double best_e = 0.0;
  for (std::uint64_t v = 0; v < total; ++v) {
    const double e = evaluate(q, bits_from_counter(v, m));
    if (v == 0 || e < best_e) best_e = e;
  }

  std::vector<BitVector> optima;
  bool truncated = false;
  for (std::uint64_t v = 0; v < total; ++v) {
    BitVector z = bits_from_counter(v, m);
    if (evaluate(q, z) > best_e + cfg.tie_tolerance) continue;
    if (optima.size() == cfg.max_optima) {
      truncated = true;
      break;
    }
    optima.push_back(std::move(z));
  }

  report.best = optima.front();
  report.energy = best_e;
  report.all_optima = std::move(optima);
  report.optima_truncated = truncated;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

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

  SolverReport report;
  bool first = true;
  for (std::uint64_t r = 0; r < cfg.restarts; ++r) {
    auto res = detail::anneal_restart(q, cfg, t_hi, r);
    if (first || res.energy < report.energy) {
      report.energy = res.energy;
      report.best = std::move(res.best);
    }
    first = false;
  }
  report.stats.sweeps = cfg.sweeps;
  report.stats.restarts = cfg.restarts;
  report.stats.seed = cfg.seed;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

Matrix distance_matrix(const Matrix& points) {
  const std::size_t n = points.rows();
  const std::size_t d = points.cols();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t c = 0; c < d; ++c) {
        const double diff = points(i, c) - points(j, c);
        s += diff * diff;
      }
      out(i, j) = s;
    }
  return out;
}

Matrix gram_matrix(const Matrix& x) {
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  Matrix out(d, d);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) out(i, j) += x(r, i) * x(r, j);
  return out;
}

}  // namespace qubml::reference
