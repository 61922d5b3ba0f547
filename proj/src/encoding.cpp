#include "qubml/encoding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <sstream>

#include "qubml/errors.hpp"

namespace qubml {

bool is_signed_power_of_two(double v) {
  if (!std::isfinite(v) || v == 0.0) return false;
  int exp = 0;
  return std::frexp(std::fabs(v), &exp) == 0.5;
}

PrecisionVector PrecisionVector::from_entries(std::vector<double> entries) {
  if (entries.empty()) throw ConfigError("precision vector must not be empty");
  for (double v : entries) {
    if (!is_signed_power_of_two(v)) {
      std::ostringstream os;
      os << "precision entry " << v << " is not a nonzero signed power of two";
      throw ConfigError(os.str());
    }
  }
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i] == entries[i - 1])
      throw ConfigError("precision entries must be distinct");
    if (entries[i] < entries[i - 1])
      throw ConfigError("precision entries must be sorted ascending");
  }
  PrecisionVector p;
  p.entries_ = std::move(entries);
  return p;
}

PrecisionVector PrecisionVector::parse(const std::vector<std::string>& tokens) {
  std::vector<double> entries;
  entries.reserve(tokens.size());
  for (const std::string& t : tokens) {
    const char* begin = t.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
      throw ConfigError("precision entry \"" + t + "\" is not a number");
    entries.push_back(v);
  }
  return from_entries(std::move(entries));
}

PrecisionVector PrecisionVector::parse_list(const std::string& csv) {
  std::vector<std::string> tokens;
  std::string cur;
  std::istringstream in(csv);
  while (std::getline(in, cur, ',')) {
    const auto a = cur.find_first_not_of(" \t");
    const auto b = cur.find_last_not_of(" \t");
    tokens.push_back(a == std::string::npos ? "" : cur.substr(a, b - a + 1));
  }
  if (tokens.empty()) throw ConfigError("precision vector must not be empty");
  return parse(tokens);
}

bool PrecisionVector::has_positive() const { return entries_.back() > 0.0; }

std::size_t PrecisionVector::smallest_positive_index() const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] > 0.0) return i + 1;
  throw ConfigError("precision vector has no positive entry");
}

std::size_t PrecisionVector::positive_count() const {
  return has_positive() ? entries_.size() - smallest_positive_index() + 1 : 0;
}

std::vector<double> PrecisionVector::positive_entries() const {
  std::vector<double> out;
  for (double v : entries_)
    if (v > 0.0) out.push_back(v);
  return out;
}

std::vector<double> representable_values(const PrecisionVector& p) {
  const std::size_t k = p.size();
  if (k > 24)
    throw ConfigError("representable value enumeration is capped at 24 entries");
  const auto& e = p.entries();
  std::vector<double> sums(std::size_t{1} << k, 0.0);
  for (std::size_t s = 1; s < sums.size(); ++s) {
    const unsigned low = static_cast<unsigned>(std::countr_zero(s));
    sums[s] = sums[s & (s - 1)] + e[low];
  }
  std::sort(sums.begin(), sums.end());
  // Subset sums of powers of two in range are exact doubles, so exact
  // equality is the right dedup here.
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

PrecisionMatrix PrecisionMatrix::regression_layout(const PrecisionVector& p,
                                                   std::size_t d) {
  PrecisionMatrix m;
  m.blocks_.push_back(PrecisionBlock{d + 1, p.entries()});
  m.components_ = d + 1;
  m.bits_ = (d + 1) * p.size();
  return m;
}

PrecisionMatrix PrecisionMatrix::svm_layout(const PrecisionVector& p, std::size_t d,
                                            std::size_t n) {
  if (!p.has_positive())
    throw ConfigError(
        "the multiplier encoding needs at least one positive precision entry");
  PrecisionMatrix m;
  m.blocks_.push_back(PrecisionBlock{d + 1, p.entries()});
  m.blocks_.push_back(PrecisionBlock{n, p.positive_entries()});
  m.components_ = d + 1 + n;
  m.bits_ = (d + 1) * p.size() + n * p.positive_count();
  return m;
}

std::span<const double> PrecisionMatrix::component_entries(std::size_t comp) const {
  for (const auto& blk : blocks_) {
    if (comp < blk.count) return blk.entries;
    comp -= blk.count;
  }
  throw ConfigError("component index out of range");
}

std::size_t PrecisionMatrix::component_offset(std::size_t comp) const {
  std::size_t off = 0;
  for (const auto& blk : blocks_) {
    if (comp < blk.count) return off + comp * blk.entries.size();
    off += blk.count * blk.entries.size();
    comp -= blk.count;
  }
  throw ConfigError("component index out of range");
}

Matrix PrecisionMatrix::dense() const {
  Matrix out(components_, bits_);
  for (std::size_t c = 0; c < components_; ++c) {
    const auto entries = component_entries(c);
    const std::size_t off = component_offset(c);
    for (std::size_t t = 0; t < entries.size(); ++t) out(c, off + t) = entries[t];
  }
  return out;
}

std::vector<double> PrecisionMatrix::decode(const BitVector& z) const {
  if (z.size() != bits_)
    throw ConfigError("bit vector length does not match the encoding");
  std::vector<double> w(components_, 0.0);
  std::size_t pos = 0;
  std::size_t comp = 0;
  for (const auto& blk : blocks_)
    for (std::size_t c = 0; c < blk.count; ++c, ++comp) {
      double s = 0.0;
      for (double entry : blk.entries) {
        if (z[pos]) s += entry;
        ++pos;
      }
      w[comp] = s;
    }
  return w;
}

BitVector PrecisionMatrix::encode_nearest(std::span<const double> target) const {
  if (target.size() != components_)
    throw ConfigError("target length does not match the encoding");
  BitVector out(bits_, 0);
  std::size_t pos = 0;
  std::size_t comp = 0;
  for (const auto& blk : blocks_) {
    const std::size_t k = blk.entries.size();
    if (k > 24)
      throw ConfigError("nearest-value search is capped at 24 entries per component");
    for (std::size_t c = 0; c < blk.count; ++c, ++comp) {
      std::uint64_t best_pattern = 0;
      double best_err = std::fabs(target[comp]);
      for (std::uint64_t s = 1; s < (std::uint64_t{1} << k); ++s) {
        double sum = 0.0;
        for (std::size_t t = 0; t < k; ++t)
          if ((s >> (k - 1 - t)) & 1u) sum += blk.entries[t];
        const double err = std::fabs(sum - target[comp]);
        if (err < best_err) {
          best_err = err;
          best_pattern = s;
        }
      }
      for (std::size_t t = 0; t < k; ++t)
        out[pos + t] = static_cast<std::uint8_t>((best_pattern >> (k - 1 - t)) & 1u);
      pos += k;
    }
  }
  return out;
}

}  // namespace qubml
