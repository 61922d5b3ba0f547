#pragma once

#include <string>

#include <json.hpp>

#include "qubml/qubo.hpp"

namespace qubml {

// Hex float form ("%a"), round-trips doubles exactly through text.
std::string hex_double(double v);
double parse_hex_double(const std::string& s);

// Document layout: {"schema": "qubo-v1", "m": M, "a": [[row 0], ...],
// "b": [M], "a_hex": [...], "b_hex": [...]}. The hex arrays are optional on
// input and win over the decimal ones when present.
nlohmann::json qubo_to_json(const QuboInstance& q, bool with_hex = true);
QuboInstance qubo_from_json(const nlohmann::json& doc);

void write_json_file(const std::string& path, const nlohmann::json& doc);
nlohmann::json read_json_file(const std::string& path);

}  // namespace qubml
