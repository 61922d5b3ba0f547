#include <algorithm>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qubml/audit.hpp"
#include "qubml/errors.hpp"
#include "qubml/json_io.hpp"
#include "qubml/parallel.hpp"
#include "qubml/run.hpp"

namespace {

int dispatch(const qubml::RunConfig& cfg, bool is_formulate, bool is_solve,
             bool is_verify) {
  if (is_formulate) {
    qubml::cmd_formulate(cfg);
    std::cout << "wrote " << cfg.out_path << " and "
              << qubml::legend_path_for(cfg.out_path) << "\n";
    return 0;
  }
  if (is_solve) {
    const nlohmann::json report = qubml::cmd_solve(cfg);
    std::cout << report.dump(2) << "\n";
    return 0;
  }
  if (is_verify) {
    const qubml::VerifyOutcome outcome = qubml::cmd_verify(cfg);
    std::cout << outcome.report.dump(2) << "\n";
    return outcome.verified && !outcome.pass ? 5 : 0;
  }
  return 0;
}

int run_audit(const std::string& out_prefix, bool quick) {
  if (out_prefix.empty()) throw qubml::ConfigError("--out is required");
  const auto records = qubml::audit_variable_counts(qubml::default_count_sweep());
  qubml::write_scaling_csv(out_prefix + ".csv", records);
  const auto fits = qubml::audit_construction_scaling(quick);
  const nlohmann::json summary = qubml::scaling_summary_json(fits);
  qubml::write_json_file(out_prefix + ".json", summary);
  std::cout << summary.dump(2) << "\n";
  const bool ok = std::all_of(fits.begin(), fits.end(),
                              [](const auto& f) { return f.within_bound; });
  return ok ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QUBO trainers for linear regression, SVM, and balanced k-means"};
  app.set_config("--config", "", "read options from a key=value file");

  std::string model = "regression";
  std::string data;
  std::string precision = "-2,-1,-0.5,0.5,1,2";
  std::size_t k = 2;
  double alpha = 0.0, beta = 0.0;
  std::string solver = "exact";
  qubml::AnnealConfig anneal;
  std::size_t max_vars = qubml::ExactConfig{}.max_vars;
  std::string out;
  bool quick = false;
  bool serial = false;

  app.add_option("--model", model, "regression|svm|kmeans")->capture_default_str();
  app.add_option("--data", data, "input CSV path");
  app.add_option("--precision", precision, "comma-separated signed powers of two")
      ->capture_default_str();
  app.add_option("--k", k, "cluster count (kmeans)")->capture_default_str();
  auto* alpha_opt = app.add_option("--alpha", alpha, "balance penalty (kmeans)");
  auto* beta_opt = app.add_option("--beta", beta, "assignment penalty (kmeans)");
  app.add_option("--solver", solver, "exact|anneal")->capture_default_str();
  app.add_option("--sweeps", anneal.sweeps, "sweeps per restart")
      ->capture_default_str();
  app.add_option("--restarts", anneal.restarts, "annealing restarts")
      ->capture_default_str();
  app.add_option("--t-hi", anneal.t_hi, "start temperature (0 = automatic)")
      ->capture_default_str();
  app.add_option("--t-lo", anneal.t_lo, "end temperature")->capture_default_str();
  app.add_option("--seed", anneal.seed, "annealing seed")->capture_default_str();
  app.add_option("--max-vars", max_vars, "exact-solver size refusal threshold")
      ->capture_default_str();
  app.add_option("--out", out, "output path (prefix for audit)");
  app.add_flag("--quick", quick, "shrink the audit sweep sizes");
  app.add_flag("--serial", serial, "disable the parallel kernels");

  auto* formulate = app.add_subcommand("formulate", "write the QUBO and bit legend");
  auto* solve = app.add_subcommand("solve", "formulate, minimize, decode");
  auto* verify =
      app.add_subcommand("verify", "solve plus an independent baseline check");
  auto* audit =
      app.add_subcommand("audit", "variable-count and construction-scaling audit");
  for (auto* sub : {formulate, solve, verify, audit}) sub->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (serial) qubml::parallel::set_enabled(false);

  try {
    if (audit->parsed()) return run_audit(out, quick);

    qubml::RunConfig cfg;
    cfg.model = qubml::parse_model(model);
    if (data.empty()) throw qubml::ConfigError("--data is required");
    cfg.data_path = data;
    cfg.precision = precision;
    cfg.k = k;
    if (alpha_opt->count() > 0) cfg.alpha = alpha;
    if (beta_opt->count() > 0) cfg.beta = beta;
    cfg.solver = qubml::parse_backend(solver);
    cfg.anneal = anneal;
    cfg.exact.max_vars = max_vars;
    cfg.out_path = out;
    return dispatch(cfg, formulate->parsed(), solve->parsed(), verify->parsed());
  } catch (const qubml::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const qubml::IngestError& e) {
    std::cerr << "ingestion error: " << e.what() << "\n";
    return 3;
  } catch (const qubml::SolverRefusal& e) {
    std::cerr << "solver refusal: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
