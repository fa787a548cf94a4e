#pragma once

#include <cstdint>
#include <vector>

#include "infoflow/finite_set.hpp"
#include "infoflow/info.hpp"
#include "infoflow/pairing.hpp"

namespace infoflow {

// Combinatorial number system: a k-subset {s1 < s2 < ... < sk} has rank
// C(sk,k) + ... + C(s2,2) + C(s1,1), its 0-based position in the
// colexicographic order of all k-subsets of the naturals.
BigNat rank_kset(const FiniteSet& s);            // s must be nonempty
FiniteSet unrank_kset(std::uint64_t k, const BigNat& idx);  // total for k >= 1

// Set code. raw = cantor_pair(|s|, rank) is the direct coding; it skips the
// codes cantor_pair(0, j) for j >= 1, which have no preimage (there is only
// one empty set). dense subtracts those gaps, making the coding a bijection
// onto an initial segment of the naturals.
struct SetCode {
  BigNat raw;
  BigNat dense;
  bool operator==(const SetCode&) const = default;
};

// #{j >= 1 : cantor_pair(0, j) < raw}; the codes with no preimage below raw.
BigNat vacuous_below(const BigNat& raw);

SetCode set_to_code(const FiniteSet& s);
FiniteSet code_to_set(const BigNat& dense);
InfoValue set_info(const FiniteSet& s);

// info(raw) - info(|s|) - info(rank): the empirical pairing constant.
// Throws std::domain_error when the rank is 0.
double balance_check(const FiniteSet& s);
double pair_balance(const BigNat& k, const BigNat& sigma);

// Streams (cardinality, rank) coordinates in dense-code order, walking the
// Cantor diagonals and skipping the vacuous column-0 codes. Cheap summaries
// avoid materializing the sets during large scans.
class SetEnumerator {
 public:
  struct Item {
    BigNat raw;
    BigNat dense;
    std::uint64_t card = 0;
    BigNat sigma;
  };
  Item next();

 private:
  std::uint64_t diagonal_ = 0;
  std::uint64_t offset_ = 0;  // sigma along the current diagonal
  BigNat raw_ = 0;
  BigNat dense_ = 0;
};

FiniteSet materialize(const SetEnumerator::Item& item);
// Element sum / product of unrank_kset(k, sigma), computed digit by digit.
BigNat sum_of_ranked(std::uint64_t k, const BigNat& sigma);
BigNat product_of_ranked(std::uint64_t k, const BigNat& sigma);

// First `limit` sets in dense-code order.
std::vector<FiniteSet> enumerate_sets(std::uint64_t limit);

}  // namespace infoflow
