#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "infoflow/info.hpp"

namespace infoflow {

// A subset of the naturals given by a pure membership predicate. Counting
// conventions follow A(n) = {1,...,n} ∩ A: zero is never counted.
class NumberSet {
 public:
  using Predicate = std::function<bool(std::uint64_t)>;
  NumberSet(std::string name, Predicate contains)
      : name_(std::move(name)), contains_(std::move(contains)) {}

  const std::string& name() const { return name_; }
  bool contains(std::uint64_t n) const { return contains_(n); }

 private:
  std::string name_;
  Predicate contains_;
};

NumberSet make_naturals();
NumberSet make_evens();
NumberSet make_odds();
NumberSet make_primes();  // sieve-backed, grows on demand
NumberSet make_squares();
NumberSet make_leading_digit_one();
NumberSet make_residue_class(std::uint64_t modulus, std::vector<std::uint64_t> residues);

// Resolves "evens", "odds", "primes", "squares", "leading1", "naturals", or a
// stepwise predicate "mod:<m>:<r1>[,r2,...]".
NumberSet named_set(const std::string& spec);

// c_A(n) = |{1,...,n} ∩ A|.
std::uint64_t compression_function(const NumberSet& A, std::uint64_t n);

// j-th smallest element of A (1-based). Throws budget_error if the scan
// passes search_limit before finding j elements.
std::uint64_t index_of(const NumberSet& A, std::uint64_t j,
                       std::uint64_t search_limit = 10'000'000);

// info(j) where n is the j-th element of A. Requires n ∈ A.
InfoValue conditional_info(const NumberSet& A, std::uint64_t n);

// info(n) - conditional_info(A, n).
double randomness_deficiency(const NumberSet& A, std::uint64_t n);

struct DensityProfile {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> prefix_points;  // (n, c_A(n))
  double lower = 0.0;
  double upper = 0.0;
  std::optional<double> natural;
  bool defined = false;
};

// Ratios c_A(n)/n at the checkpoints; lower/upper are taken over the tail
// half (the first half is burn-in), and the natural density is declared when
// upper - lower stays below the tolerance.
DensityProfile density_profile(const NumberSet& A, std::uint64_t max_n,
                               std::span<const std::uint64_t> checkpoints,
                               double tolerance = 0.01);

// Binary entropy of the membership frequency over {1,...,n}, in configured
// log-base units; the degenerate frequencies 0 and 1 contribute nothing.
double shannon_entropy_estimate(const NumberSet& A, std::uint64_t n);

void write_profile_csv(const DensityProfile& profile, std::ostream& out);

}  // namespace infoflow
