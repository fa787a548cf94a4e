#include "infoflow/info.hpp"

#include <cmath>

namespace infoflow {

namespace {
double g_log_base = 2.0;
double g_base_scale = 1.0;  // 1 / log2(base)
}  // namespace

void set_log_base(double base) {
  if (!(base > 1.0)) throw std::invalid_argument("log base must be > 1");
  g_log_base = base;
  g_base_scale = (base == 2.0) ? 1.0 : 1.0 / std::log2(base);
}

double log_base() { return g_log_base; }
double base_scale() { return g_base_scale; }

Log2Parts log2_parts(const BigNat& n) {
  if (n < 1) throw std::domain_error("log2_parts requires n >= 1");
  const unsigned bits = boost::multiprecision::msb(n);  // 2^bits <= n < 2^(bits+1)
  // Reduce to a mantissa in [1, 2) so that the exponent carries all scale:
  // doubling a value changes only the integer part, exactly. Keeping 53
  // mantissa bits perturbs log2 by < 2^-52 / ln 2.
  std::uint64_t top;
  if (bits <= 52) {
    top = to_u64(n) << (52 - bits);
  } else {
    top = static_cast<std::uint64_t>(BigNat(n >> (bits - 52)));
  }
  const double mantissa = static_cast<double>(top) * 0x1.0p-52;
  return {static_cast<long long>(bits), std::log2(mantissa)};
}

double log2_value(const BigNat& n) {
  if (n <= 1) return 0.0;
  return log2_parts(n).value();
}

InfoValue info(const BigNat& n) { return {log2_value(n) * g_base_scale}; }

InfoValue tuple_info(std::span<const BigNat> xs) {
  double total = 0.0;
  for (const BigNat& x : xs) total += log2_value(x);
  return {total * g_base_scale};
}

BigNat binomial(const BigNat& n, const BigNat& k) {
  if (k < 0 || n < 0) throw std::invalid_argument("binomial arguments must be non-negative");
  if (k > n) return 0;
  BigNat m = k;
  if (n - k < m) m = n - k;
  // C(n, m) = prod_{i=1..m} (n - m + i) / i, each prefix divides exactly.
  BigNat result = 1;
  const BigNat base = n - m;
  for (BigNat i = 1; i <= m; ++i) {
    result *= base + i;
    result /= i;
  }
  return result;
}

}  // namespace infoflow
