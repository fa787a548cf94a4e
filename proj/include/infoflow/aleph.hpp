#pragma once

#include <cstdint>
#include <string>

namespace infoflow {

// Symbolic term of the limit calculus for log-scale infinities: a value is
// either a finite scalar (degree 0) or a power of the limit symbol. Terms of
// degree >= 1 are coefficient-blind: they compare equal iff degrees match.
struct AlephTerm {
  std::uint32_t degree = 0;
  double finite = 0.0;  // meaningful only at degree 0

  bool operator==(const AlephTerm& o) const {
    if (degree != o.degree) return false;
    return degree > 0 || finite == o.finite;
  }
};

inline AlephTerm aleph_finite(double v) { return {0, v}; }
inline AlephTerm aleph(std::uint32_t degree = 1) { return {degree, 0.0}; }

// Addition (and subtraction) is absorbed by the larger degree; equal finite
// terms combine numerically.
AlephTerm aleph_add(const AlephTerm& a, const AlephTerm& b);
AlephTerm aleph_sub(const AlephTerm& a, const AlephTerm& b);
// Degrees add under multiplication and subtract under division; a quotient of
// equal degrees >= 1 is the finite term 1, and a negative degree collapses to
// the finite term 0 by the limit convention.
AlephTerm aleph_mul(const AlephTerm& a, const AlephTerm& b);
AlephTerm aleph_div(const AlephTerm& a, const AlephTerm& b);  // throws on finite 0 divisor
AlephTerm aleph_pow(const AlephTerm& a, std::uint32_t e);

std::string format_aleph(const AlephTerm& t);

// Expression grammar over + - * / ^ and parentheses; the atoms "a", "aleph"
// and "aleph_-1" denote the degree-1 term, numeric literals are finite.
AlephTerm parse_aleph_expr(const std::string& text);

}  // namespace infoflow
