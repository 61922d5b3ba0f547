#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qubml/model.hpp"
#include "qubml/solvers.hpp"

namespace qubml {

struct RunConfig {
  Model model = Model::regression;
  std::string data_path;
  std::string precision = "-2,-1,-0.5,0.5,1,2";
  std::size_t k = 2;                  // kmeans only
  std::optional<double> alpha, beta;  // kmeans only; absent means suggested
  Backend solver = Backend::exact;
  ExactConfig exact;
  AnnealConfig anneal;
  std::string out_path;
};

// Writes the QUBO document to out_path and an ordering legend next to it
// (<out>.legend.json). Returns the QUBO document.
nlohmann::json cmd_formulate(const RunConfig& cfg);

// Formulate + solve + decode; writes the run report to out_path.
nlohmann::json cmd_solve(const RunConfig& cfg);

struct VerifyOutcome {
  nlohmann::json report;
  bool verified = false;  // false when the oracle refused (report says why)
  bool pass = false;
};

// cmd_solve plus the matching oracle and a pass/fail comparison.
VerifyOutcome cmd_verify(const RunConfig& cfg);

// Bit-index names, e.g. "w[0]@p=0.5" or "x[3]@cluster=1".
std::vector<std::string> variable_legend(const RunConfig& cfg, std::size_t d,
                                         std::size_t n);

std::string legend_path_for(const std::string& out_path);

}  // namespace qubml
