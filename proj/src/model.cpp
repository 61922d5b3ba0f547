#include "qubml/model.hpp"

#include "qubml/errors.hpp"

namespace qubml {

std::string model_name(Model m) {
  switch (m) {
    case Model::regression: return "regression";
    case Model::svm: return "svm";
    case Model::kmeans: return "kmeans";
  }
  throw ConfigError("unknown model");
}

Model parse_model(const std::string& s) {
  if (s == "regression") return Model::regression;
  if (s == "svm") return Model::svm;
  if (s == "kmeans") return Model::kmeans;
  throw ConfigError("model must be regression, svm, or kmeans, got \"" + s + "\"");
}

std::string backend_name(Backend b) {
  return b == Backend::exact ? "exact" : "anneal";
}

Backend parse_backend(const std::string& s) {
  if (s == "exact") return Backend::exact;
  if (s == "anneal") return Backend::anneal;
  throw ConfigError("solver must be exact or anneal, got \"" + s + "\"");
}

}  // namespace qubml
