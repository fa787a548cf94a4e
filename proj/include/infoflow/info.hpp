#pragma once

#include <span>

#include "infoflow/bignat.hpp"

namespace infoflow {

// Information content of a natural number, in units of the configured log
// base (bits for base 2). info(0) = info(1) = 0 by convention.
struct InfoValue {
  double bits = 0.0;
};

// Global log base, default 2. Set once at startup; base must be > 1.
void set_log_base(double base);
double log_base();

// Splits log2(n) into an integer exponent and a fractional double so that
// deltas like info(2x) - info(x) cancel exactly. Requires n >= 1.
struct Log2Parts {
  long long exp = 0;
  double frac = 0.0;  // log2 of the 53-bit leading window, in [0, 53)
  double value() const { return static_cast<double>(exp) + frac; }
};
Log2Parts log2_parts(const BigNat& n);

// log2(n) with the 0/1 convention applied.
double log2_value(const BigNat& n);

// Scale factor converting log2 units into configured-base units (1.0 for
// base 2, exactly).
double base_scale();

InfoValue info(const BigNat& n);
InfoValue tuple_info(std::span<const BigNat> xs);

// C(n, k); returns 0 when n < k. Exact.
BigNat binomial(const BigNat& n, const BigNat& k);

}  // namespace infoflow
