#pragma once

#include <string>

namespace qubml {

enum class Model { regression, svm, kmeans };
enum class Backend { exact, anneal };

std::string model_name(Model m);
Model parse_model(const std::string& s);

std::string backend_name(Backend b);
Backend parse_backend(const std::string& s);

}  // namespace qubml
