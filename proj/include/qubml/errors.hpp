#pragma once

#include <stdexcept>
#include <string>

namespace qubml {

// Bad user-supplied configuration: flags, precision vectors, schedules.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input data: unparseable CSV, bad label domain, shape mismatch.
struct IngestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A solver or oracle declined a problem outside its size envelope.
struct SolverRefusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qubml
