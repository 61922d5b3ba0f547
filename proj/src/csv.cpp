#include "qubml/csv.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qubml/errors.hpp"

namespace qubml {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    const auto a = field.find_first_not_of(" \t\r");
    const auto b = field.find_last_not_of(" \t\r");
    out.push_back(a == std::string::npos ? "" : field.substr(a, b - a + 1));
  }
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

std::optional<double> parse_field(const std::string& field) {
  if (field.empty()) return std::nullopt;
  const char* begin = field.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') return std::nullopt;
  return v;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open " + path);

  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  bool saw_first = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const std::vector<std::string> fields = split_fields(line);

    std::vector<double> row;
    row.reserve(fields.size());
    bool ok = true;
    for (const auto& f : fields) {
      const auto v = parse_field(f);
      if (!v) {
        ok = false;
        break;
      }
      row.push_back(*v);
    }

    if (!ok) {
      if (!saw_first) {
        table.had_header = true;
        saw_first = true;
        width = fields.size();
        continue;
      }
      throw IngestError(path + ": line " + std::to_string(line_no) +
                        " has a non-numeric field");
    }
    if (!saw_first) {
      saw_first = true;
      width = fields.size();
    } else if (fields.size() != width) {
      throw IngestError(path + ": line " + std::to_string(line_no) + " has " +
                        std::to_string(fields.size()) + " fields, expected " +
                        std::to_string(width));
    }
    table.rows.push_back(std::move(row));
  }
  if (table.rows.empty()) throw IngestError(path + ": no data rows");
  return table;
}

namespace {

Matrix to_matrix(const std::vector<std::vector<double>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace

RegressionProblem load_regression_csv(const std::string& path) {
  const CsvTable t = read_csv(path);
  const std::size_t cols = t.rows.front().size();
  if (cols < 2)
    throw IngestError(path + ": need at least one feature column and a target");
  Matrix x(t.rows.size(), cols - 1);
  std::vector<double> y(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::size_t c = 0; c + 1 < cols; ++c) x(r, c) = t.rows[r][c];
    y[r] = t.rows[r][cols - 1];
  }
  return RegressionProblem::from_data(std::move(x), std::move(y));
}

SvmProblem load_svm_csv(const std::string& path) {
  const CsvTable t = read_csv(path);
  const std::size_t cols = t.rows.front().size();
  if (cols < 2)
    throw IngestError(path + ": need at least one feature column and a label");

  bool saw_zero = false, saw_neg = false;
  for (const auto& row : t.rows) {
    const double label = row[cols - 1];
    if (label == 0.0) saw_zero = true;
    if (label == -1.0) saw_neg = true;
    if (label != 0.0 && label != 1.0 && label != -1.0)
      throw IngestError(path + ": labels must be +1/-1 or 0/1");
  }
  if (saw_zero && saw_neg)
    throw IngestError(path + ": labels mix 0/1 and +1/-1 conventions");
  if (saw_zero)
    std::cerr << "notice: " << path << " uses 0/1 labels; 0 remapped to -1\n";

  Matrix x(t.rows.size(), cols - 1);
  std::vector<double> y(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::size_t c = 0; c + 1 < cols; ++c) x(r, c) = t.rows[r][c];
    const double label = t.rows[r][cols - 1];
    y[r] = saw_zero && label == 0.0 ? -1.0 : label;
  }
  return SvmProblem::from_data(std::move(x), std::move(y));
}

Matrix load_points_csv(const std::string& path) {
  const CsvTable t = read_csv(path);
  return to_matrix(t.rows, t.rows.front().size());
}

}  // namespace qubml
