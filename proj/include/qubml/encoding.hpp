#pragma once

#include <span>
#include <string>
#include <vector>

#include "qubml/matrix.hpp"
#include "qubml/qubo.hpp"

namespace qubml {

// Sorted list of distinct signed powers of two. Each model weight is encoded
// as a sum over a subset of these entries, one binary variable per entry.
class PrecisionVector {
 public:
  static PrecisionVector from_entries(std::vector<double> entries);
  static PrecisionVector parse(const std::vector<std::string>& tokens);
  // Comma-separated form, e.g. "-2,-1,-0.5,0.5,1,2".
  static PrecisionVector parse_list(const std::string& csv);

  std::size_t size() const { return entries_.size(); }
  const std::vector<double>& entries() const { return entries_; }

  bool has_positive() const;
  // 1-based position of the smallest positive entry. Requires has_positive().
  std::size_t smallest_positive_index() const;
  std::size_t positive_count() const;
  std::vector<double> positive_entries() const;

 private:
  PrecisionVector() = default;
  std::vector<double> entries_;
};

bool is_signed_power_of_two(double v);

// Every value expressible as a subset sum of the entries, sorted, duplicates
// removed. Size is bounded by 2^K, so K is capped.
std::vector<double> representable_values(const PrecisionVector& p);

struct PrecisionBlock {
  std::size_t count;            // how many components share this entry list
  std::vector<double> entries;  // bit weights for one component
};

// Block-diagonal map from bits to real parameters: component c of the output
// is the dot product of its block entries with the matching bit slice.
class PrecisionMatrix {
 public:
  // (d+1) components (weights then intercept), all carrying the full entry set.
  static PrecisionMatrix regression_layout(const PrecisionVector& p, std::size_t d);
  // (d+1) components with the full entry set, then n multiplier components
  // restricted to the positive entries.
  static PrecisionMatrix svm_layout(const PrecisionVector& p, std::size_t d,
                                    std::size_t n);

  std::size_t components() const { return components_; }
  std::size_t bits() const { return bits_; }
  const std::vector<PrecisionBlock>& blocks() const { return blocks_; }

  std::span<const double> component_entries(std::size_t comp) const;
  std::size_t component_offset(std::size_t comp) const;

  Matrix dense() const;

  std::vector<double> decode(const BitVector& z) const;
  // Per component, the bit pattern whose decoded value is nearest the target;
  // ties go to the lexicographically smallest pattern.
  BitVector encode_nearest(std::span<const double> target) const;

 private:
  std::vector<PrecisionBlock> blocks_;
  std::size_t components_ = 0;
  std::size_t bits_ = 0;
};

}  // namespace qubml
