#include "qubml/run.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include "qubml/csv.hpp"
#include "qubml/encoding.hpp"
#include "qubml/errors.hpp"
#include "qubml/json_io.hpp"
#include "qubml/kmeans.hpp"
#include "qubml/oracles.hpp"
#include "qubml/regression.hpp"
#include "qubml/svm.hpp"

namespace qubml {

namespace {

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::vector<std::string> split_tokens(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(csv);
  while (std::getline(in, cur, ',')) {
    const auto a = cur.find_first_not_of(" \t");
    const auto b = cur.find_last_not_of(" \t");
    out.push_back(a == std::string::npos ? "" : cur.substr(a, b - a + 1));
  }
  return out;
}

struct Built {
  std::optional<RegressionProblem> reg;
  std::optional<SvmProblem> svm;
  std::optional<KmeansProblem> km;
  std::optional<PrecisionVector> p;
  double alpha = 0.0, beta = 0.0;  // resolved kmeans penalties
  bool penalties_suggested = false;
  std::size_t n = 0, d = 0;
  QuboInstance qubo;
  double construction_seconds = 0.0;
  std::string formula;
  std::size_t expected_m = 0;
};

Built build(const RunConfig& cfg) {
  Built out;
  const auto t0 = std::chrono::steady_clock::now();
  switch (cfg.model) {
    case Model::regression: {
      out.reg = load_regression_csv(cfg.data_path);
      out.p = PrecisionVector::parse(split_tokens(cfg.precision));
      out.n = out.reg->n_samples();
      out.d = out.reg->n_features();
      const auto c0 = std::chrono::steady_clock::now();
      out.qubo = formulate_regression(*out.reg, *out.p);
      out.construction_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - c0).count();
      out.formula = "K*(d+1)";
      out.expected_m = out.p->size() * (out.d + 1);
      break;
    }
    case Model::svm: {
      out.svm = load_svm_csv(cfg.data_path);
      out.p = PrecisionVector::parse(split_tokens(cfg.precision));
      out.n = out.svm->n_samples();
      out.d = out.svm->n_features();
      const auto c0 = std::chrono::steady_clock::now();
      out.qubo = formulate_svm(*out.svm, *out.p);
      out.construction_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - c0).count();
      out.formula = "K*(d+1)+N*(K-K_plus+1)";
      out.expected_m =
          out.p->size() * (out.d + 1) + out.n * out.p->positive_count();
      break;
    }
    case Model::kmeans: {
      Matrix points = load_points_csv(cfg.data_path);
      out.n = points.rows();
      out.d = points.cols();
      if (cfg.alpha && cfg.beta) {
        out.alpha = *cfg.alpha;
        out.beta = *cfg.beta;
      } else {
        const Penalties pen = suggest_penalties(build_distance_matrix(points));
        out.alpha = cfg.alpha.value_or(pen.alpha);
        out.beta = cfg.beta.value_or(pen.beta);
        out.penalties_suggested = true;
      }
      out.km = KmeansProblem::from_data(std::move(points), cfg.k, out.alpha, out.beta);
      const auto c0 = std::chrono::steady_clock::now();
      out.qubo = formulate_kmeans(*out.km);
      out.construction_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - c0).count();
      out.formula = "N*k";
      out.expected_m = out.n * cfg.k;
      break;
    }
  }
  (void)t0;
  return out;
}

nlohmann::json config_echo(const RunConfig& cfg, const Built& built) {
  nlohmann::json c;
  c["model"] = model_name(cfg.model);
  c["data"] = cfg.data_path;
  c["precision"] = split_tokens(cfg.precision);
  c["solver"] = backend_name(cfg.solver);
  c["out"] = cfg.out_path;
  if (cfg.model == Model::kmeans) {
    c["k"] = cfg.k;
    c["alpha"] = built.alpha;
    c["beta"] = built.beta;
    c["penalties_suggested"] = built.penalties_suggested;
  }
  if (cfg.solver == Backend::anneal) {
    c["anneal"] = {{"sweeps", cfg.anneal.sweeps},
                   {"restarts", cfg.anneal.restarts},
                   {"t_hi", cfg.anneal.t_hi},
                   {"t_lo", cfg.anneal.t_lo},
                   {"seed", cfg.anneal.seed}};
  } else {
    c["exact"] = {{"max_vars", cfg.exact.max_vars}};
  }
  return c;
}

nlohmann::json solver_section(Backend backend, const SolverReport& rep) {
  nlohmann::json s;
  s["backend"] = backend_name(backend);
  s["energy"] = rep.energy;
  s["energy_hex"] = hex_double(rep.energy);
  s["best"] = nlohmann::json::array();
  for (auto bit : rep.best) s["best"].push_back(static_cast<int>(bit));
  s["wall_seconds"] = rep.wall_seconds;
  if (rep.all_optima) {
    s["num_optima"] = rep.all_optima->size();
    s["optima_truncated"] = rep.optima_truncated;
  }
  if (backend == Backend::anneal) {
    s["sweeps"] = rep.stats.sweeps;
    s["restarts"] = rep.stats.restarts;
    s["seed"] = rep.stats.seed;
  }
  return s;
}

struct Decoded {
  nlohmann::json section;
  double objective = 0.0;  // model-specific objective for oracle comparison
  bool feasible = true;    // kmeans feasibility / svm separation
};

Decoded decode_section(const RunConfig& cfg, const Built& built,
                       const SolverReport& rep) {
  Decoded out;
  switch (cfg.model) {
    case Model::regression: {
      const PrecisionMatrix pm =
          PrecisionMatrix::regression_layout(*built.p, built.d);
      const RegressionSolution sol =
          decode_regression(*built.reg, pm, rep.best, rep.energy);
      double yty = 0.0;
      for (double v : built.reg->y) yty += v * v;

      const std::vector<double> wa = solve_regression_analytic(*built.reg);
      const std::vector<double> reps = representable_values(*built.p);
      bool in_range = true;
      for (double v : wa)
        if (v < reps.front() || v > reps.back()) in_range = false;
      if (!in_range)
        std::cerr << "warning: analytic solution falls outside the representable "
                     "range of the precision vector\n";

      out.section = {{"w", sol.w},
                     {"sse", sol.sse},
                     {"energy_plus_yty", rep.energy + yty},
                     {"analytic_w", wa},
                     {"analytic_sse", regression_sse(*built.reg, wa)},
                     {"analytic_in_representable_range", in_range}};
      out.objective = sol.sse;
      break;
    }
    case Model::svm: {
      const PrecisionMatrix pm =
          PrecisionMatrix::svm_layout(*built.p, built.d, built.n);
      const SvmSolution sol = decode_svm(*built.svm, pm, rep.best);
      const ClassifierReport cls = validate_classifier(sol, *built.svm);
      out.section = {{"w", sol.w},
                     {"bias", sol.bias},
                     {"lambda", sol.lambda},
                     {"margins", sol.margins},
                     {"dual_objective", sol.dual_objective},
                     {"violations", cls.violations},
                     {"separated", cls.separated}};
      out.objective = sol.dual_objective;
      out.feasible = cls.separated;
      break;
    }
    case Model::kmeans: {
      const KmeansSolution sol = decode_kmeans(*built.km, rep.best);
      out.section = {{"feasible", sol.feasible},
                     {"row_sums", sol.row_sums},
                     {"col_sums", sol.col_sums},
                     {"within_cost", sol.within_cost}};
      if (sol.feasible) out.section["clusters"] = sol.clusters;
      out.objective = sol.within_cost;
      out.feasible = sol.feasible;
      break;
    }
  }
  return out;
}

struct SolveArtifacts {
  nlohmann::json report;
  Built built;
  SolverReport solver_report;
  Decoded decoded;
};

SolveArtifacts run_solve(const RunConfig& cfg, const char* command) {
  if (cfg.out_path.empty()) throw ConfigError("--out is required");
  SolveArtifacts art;
  art.built = build(cfg);

  art.solver_report = cfg.solver == Backend::exact
                          ? solve_exact(art.built.qubo, cfg.exact)
                          : solve_anneal(art.built.qubo, cfg.anneal);
  art.decoded = decode_section(cfg, art.built, art.solver_report);

  nlohmann::json rep;
  rep["schema"] = "run_report-v1";
  rep["command"] = command;
  rep["config"] = config_echo(cfg, art.built);
  rep["qubo"] = {{"m", art.built.qubo.size()},
                 {"nonzeros", count_nonzeros(art.built.qubo.a)},
                 {"construction_seconds", art.built.construction_seconds}};
  rep["variable_count"] = {{"formula", art.built.formula},
                           {"expected", art.built.expected_m},
                           {"actual", art.built.qubo.size()},
                           {"ok", art.built.expected_m == art.built.qubo.size()}};
  rep["solver"] = solver_section(cfg.solver, art.solver_report);
  rep["solution"] = art.decoded.section;
  art.report = std::move(rep);
  return art;
}

}  // namespace

std::string legend_path_for(const std::string& out_path) {
  const std::string suffix = ".json";
  if (out_path.size() > suffix.size() &&
      out_path.compare(out_path.size() - suffix.size(), suffix.size(), suffix) == 0)
    return out_path.substr(0, out_path.size() - suffix.size()) + ".legend.json";
  return out_path + ".legend.json";
}

std::vector<std::string> variable_legend(const RunConfig& cfg, std::size_t d,
                                         std::size_t n) {
  std::vector<std::string> names;
  switch (cfg.model) {
    case Model::regression: {
      const PrecisionVector p = PrecisionVector::parse(split_tokens(cfg.precision));
      for (std::size_t i = 0; i <= d; ++i)
        for (double e : p.entries()) {
          const std::string base = i < d ? "w[" + std::to_string(i) + "]" : "b";
          names.push_back(base + "@p=" + short_num(e));
        }
      break;
    }
    case Model::svm: {
      const PrecisionVector p = PrecisionVector::parse(split_tokens(cfg.precision));
      for (std::size_t i = 0; i <= d; ++i)
        for (double e : p.entries()) {
          const std::string base = i < d ? "w[" + std::to_string(i) + "]" : "b";
          names.push_back(base + "@p=" + short_num(e));
        }
      for (std::size_t i = 0; i < n; ++i)
        for (double e : p.positive_entries())
          names.push_back("lambda[" + std::to_string(i) + "]@p=" + short_num(e));
      break;
    }
    case Model::kmeans: {
      for (std::size_t j = 0; j < cfg.k; ++j)
        for (std::size_t i = 0; i < n; ++i)
          names.push_back("x[" + std::to_string(i) + "]@cluster=" + std::to_string(j));
      break;
    }
  }
  return names;
}

nlohmann::json cmd_formulate(const RunConfig& cfg) {
  if (cfg.out_path.empty()) throw ConfigError("--out is required");
  const Built built = build(cfg);

  const nlohmann::json doc = qubo_to_json(built.qubo);
  write_json_file(cfg.out_path, doc);

  const std::vector<std::string> names = variable_legend(cfg, built.d, built.n);
  if (names.size() != built.qubo.size())
    throw ConfigError("legend does not cover every bit");
  nlohmann::json legend;
  legend["schema"] = "legend-v1";
  legend["m"] = built.qubo.size();
  legend["bits"] = names;
  write_json_file(legend_path_for(cfg.out_path), legend);
  return doc;
}

nlohmann::json cmd_solve(const RunConfig& cfg) {
  SolveArtifacts art = run_solve(cfg, "solve");
  write_json_file(cfg.out_path, art.report);
  return art.report;
}

VerifyOutcome cmd_verify(const RunConfig& cfg) {
  SolveArtifacts art = run_solve(cfg, "verify");
  art.report["command"] = "verify";

  nlohmann::json oracle;
  VerifyOutcome out;
  try {
    switch (cfg.model) {
      case Model::regression: {
        const OracleReport orep = oracle_regression(*art.built.reg);
        const double sse = art.decoded.objective;
        const double gap = sse - orep.objective;
        double yty = 0.0;
        for (double v : art.built.reg->y) yty += v * v;
        const bool identity_ok =
            std::fabs(art.solver_report.energy + yty - sse) <= 1e-8 * (1.0 + std::fabs(yty));
        const bool not_better = gap >= -1e-8 * (1.0 + std::fabs(orep.objective));
        out.pass = identity_ok && not_better;
        oracle = {{"method", orep.method},
                  {"objective", orep.objective},
                  {"parameters", orep.parameters},
                  {"gap", gap},
                  {"wall_seconds", orep.wall_seconds}};
        break;
      }
      case Model::svm: {
        const OracleReport orep = oracle_svm_margins(*art.built.svm, *art.built.p);
        out.pass = art.decoded.feasible;  // separation is the whole contract
        oracle = {{"method", orep.method},
                  {"separable", orep.feasible},
                  {"wall_seconds", orep.wall_seconds}};
        if (orep.feasible) {
          oracle["objective"] = orep.objective;  // ||w||^2 of the grid optimum
          oracle["parameters"] = orep.parameters;
          oracle["gap"] = art.decoded.objective - orep.objective;
        }
        break;
      }
      case Model::kmeans: {
        const OracleReport orep = oracle_balanced_partitions(*art.built.km);
        const double gap = art.decoded.objective - orep.objective;
        // A feasible assignment can never undercut the oracle minimum. The
        // exact backend must also hit it, except when N % k != 0 and the
        // balance penalty is free to prefer a different floor/ceil split.
        out.pass = art.decoded.feasible && gap >= -1e-9;
        if (cfg.solver == Backend::exact && art.built.n % cfg.k == 0)
          out.pass = out.pass && gap <= 1e-9;
        oracle = {{"method", orep.method},
                  {"objective", orep.objective},
                  {"assignment", orep.assignment},
                  {"gap", gap},
                  {"wall_seconds", orep.wall_seconds}};
        break;
      }
    }
    oracle["status"] = "verified";
    oracle["pass"] = out.pass;
    out.verified = true;
  } catch (const SolverRefusal& e) {
    oracle = {{"status", "unverified"}, {"reason", e.what()}};
    out.verified = false;
    out.pass = true;  // an unverified run is not a failure
  }
  art.report["oracle"] = std::move(oracle);
  write_json_file(cfg.out_path, art.report);
  out.report = std::move(art.report);
  return out;
}

}  // namespace qubml
