#include "qubml/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "qubml/errors.hpp"

namespace qubml {

std::string hex_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return buf;
}

double parse_hex_double(const std::string& s) {
  const char* begin = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw IngestError("bad hex float \"" + s + "\"");
  return v;
}

nlohmann::json qubo_to_json(const QuboInstance& q, bool with_hex) {
  const std::size_t m = q.size();
  nlohmann::json doc;
  doc["schema"] = "qubo-v1";
  doc["m"] = m;

  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m; ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m; ++j) row.push_back(q.a(i, j));
    rows.push_back(std::move(row));
  }
  doc["a"] = std::move(rows);
  doc["b"] = q.b;

  if (with_hex) {
    auto a_hex = nlohmann::json::array();
    for (std::size_t i = 0; i < m; ++i) {
      auto row = nlohmann::json::array();
      for (std::size_t j = 0; j < m; ++j) row.push_back(hex_double(q.a(i, j)));
      a_hex.push_back(std::move(row));
    }
    auto b_hex = nlohmann::json::array();
    for (double v : q.b) b_hex.push_back(hex_double(v));
    doc["a_hex"] = std::move(a_hex);
    doc["b_hex"] = std::move(b_hex);
  }
  return doc;
}

QuboInstance qubo_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("a") || !doc.contains("b"))
    throw IngestError("QUBO document needs fields m, a, b");
  const std::size_t m = doc.at("m").get<std::size_t>();

  Matrix a(m, m);
  std::vector<double> b(m);
  if (doc.contains("a_hex") && doc.contains("b_hex")) {
    const auto& a_hex = doc.at("a_hex");
    const auto& b_hex = doc.at("b_hex");
    if (a_hex.size() != m || b_hex.size() != m)
      throw IngestError("hex array sizes do not match m");
    for (std::size_t i = 0; i < m; ++i) {
      const auto& row = a_hex.at(i);
      if (row.size() != m) throw IngestError("hex matrix row has the wrong length");
      for (std::size_t j = 0; j < m; ++j)
        a(i, j) = parse_hex_double(row.at(j).get<std::string>());
    }
    for (std::size_t i = 0; i < m; ++i)
      b[i] = parse_hex_double(b_hex.at(i).get<std::string>());
  } else {
    const auto& aj = doc.at("a");
    const auto& bj = doc.at("b");
    if (aj.size() != m || bj.size() != m)
      throw IngestError("array sizes do not match m");
    for (std::size_t i = 0; i < m; ++i) {
      const auto& row = aj.at(i);
      if (row.size() != m) throw IngestError("matrix row has the wrong length");
      for (std::size_t j = 0; j < m; ++j) a(i, j) = row.at(j).get<double>();
    }
    for (std::size_t i = 0; i < m; ++i) b[i] = bj.at(i).get<double>();
  }
  return QuboInstance::from_raw(std::move(a), std::move(b));
}

void write_json_file(const std::string& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << doc.dump(2) << '\n';
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw IngestError(path + ": " + e.what());
  }
}

}  // namespace qubml
