#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace infoflow {

// Exact arbitrary-precision integer. Library operations that take a BigNat
// expect it to be non-negative; signed values appear only as polynomial
// evaluation results and term coefficients.
using BigNat = boost::multiprecision::cpp_int;

// Raised when an operation would exceed its configured work budget.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline BigNat isqrt(const BigNat& n) { return boost::multiprecision::sqrt(n); }

inline std::uint64_t to_u64(const BigNat& n) {
  if (n < 0 || n > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("value does not fit in 64 bits");
  return static_cast<std::uint64_t>(n);
}

inline BigNat parse_nat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number literal");
  for (char c : text)
    if (c < '0' || c > '9') throw std::invalid_argument("malformed natural number: " + text);
  return BigNat(text);
}

}  // namespace infoflow
