#pragma once

#include <string>
#include <vector>

#include "infoflow/bignat.hpp"

namespace infoflow {

// Finite set of naturals, stored as a strictly increasing sequence.
class FiniteSet {
 public:
  FiniteSet() = default;
  // Validates strict ascending order; throws std::invalid_argument otherwise.
  explicit FiniteSet(std::vector<BigNat> elements);
  // Sorts first; duplicates are rejected.
  static FiniteSet from_unsorted(std::vector<BigNat> elements);

  const std::vector<BigNat>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  bool operator==(const FiniteSet&) const = default;

 private:
  std::vector<BigNat> elements_;
};

BigNat set_sum(const FiniteSet& s);
BigNat set_product(const FiniteSet& s);  // empty product is 1

// Text format: "{1,2,4}", empty set "{}".
std::string format_set(const FiniteSet& s);
FiniteSet parse_set(const std::string& text);

}  // namespace infoflow
