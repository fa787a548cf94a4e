#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "infoflow/combinadic.hpp"
#include "infoflow/finite_set.hpp"

namespace infoflow {

enum class GridKind { Card, Sum, Prod };
const char* to_string(GridKind k);

struct GridCell {
  BigNat bin;
  BigNat index;
  bool vacuous = false;
  std::optional<FiniteSet> occupant;
};

// A set's position in the cardinality grid: bin |s|, index rank. Computed
// directly, no construction needed.
GridCell card_grid_locate(const FiniteSet& s);

struct GridOccupant {
  BigNat seq;  // dense code of the set (its position in the canonical order)
  std::uint64_t index = 0;
  FiniteSet set;
};

// Snapshot of a grid built by the distribution algorithm: sets are consumed
// in canonical dense order and each goes to bin f(s) at the first free index.
// Occupancy counts are kept for every bin; full occupant lists only for bins
// up to the retain limit (the algorithm counts, but forgets, the rest).
class GridSnapshot {
 public:
  GridKind kind() const { return kind_; }
  std::uint64_t sets_consumed() const { return sets_consumed_; }
  const BigNat& cursor() const { return cursor_; }  // next raw code to consume

  std::uint64_t occupied(const BigNat& bin) const;
  BigNat max_bin() const;
  std::uint64_t max_occupied() const;
  const std::vector<GridOccupant>* occupants(const BigNat& bin) const;
  const std::map<BigNat, std::vector<GridOccupant>>& retained() const { return retained_; }
  const std::optional<BigNat>& retain_limit() const { return retain_limit_; }

 private:
  friend class GridBuilder;
  GridKind kind_ = GridKind::Sum;
  std::optional<BigNat> retain_limit_;
  std::uint64_t sets_consumed_ = 0;
  BigNat cursor_ = 0;
  std::vector<std::uint64_t> counts_small_;     // bins below the vector tier cap
  std::map<BigNat, std::uint64_t> counts_big_;
  std::map<BigNat, std::vector<GridOccupant>> retained_;
  std::uint64_t max_occupied_ = 0;
};

class GridBuilder {
 public:
  // retain_limit: keep occupant sets for bins <= limit (nullopt keeps all).
  explicit GridBuilder(GridKind kind, std::optional<BigNat> retain_limit = std::nullopt);

  // Consumes the next n_sets sets of the canonical enumeration. Throws
  // budget_error once total consumption would pass the budget.
  void consume(std::uint64_t n_sets, std::uint64_t budget);

  const GridSnapshot& snapshot() const { return snap_; }

 private:
  GridSnapshot snap_;
  SetEnumerator cursor_;
};

GridSnapshot build_grid(GridKind kind, std::uint64_t n_sets, std::uint64_t budget,
                        std::optional<BigNat> retain_limit = std::nullopt);

// Exact number of finite subsets of the naturals (0 allowed as an element)
// whose elements sum to n: 2 * q(n) for n >= 1 with q the distinct-part
// partition count, and 2 for n = 0.
BigNat count_subsets_with_sum(std::uint64_t n);

// (1 / (4 n sqrt 3)) * exp(pi sqrt(2n/3)): the classical asymptotic for the
// unrestricted partition count.
double hardy_ramanujan_estimate(std::uint64_t n);

// Final occupancy of a bin once every contributing set has been consumed.
// nullopt means the bin never completes (all cardinality bins; product bin 0).
std::optional<BigNat> grid_bin_final_count(GridKind kind, const BigNat& bin);

struct BinStats {
  BigNat bin;
  std::uint64_t occupied = 0;
  std::optional<std::uint64_t> max_index;
};
std::vector<BinStats> vacuous_stats(const GridSnapshot& g, const BigNat& bin_lo,
                                    const BigNat& bin_hi);

// First subset of S summing to target, in the canonical search order:
// ascending cardinality, lexicographic among equal cardinalities. Requires
// |S| <= 30; throws budget_error if 2^|S| exceeds the budget.
std::optional<FiniteSet> subset_sum_first(const FiniteSet& S, const BigNat& target,
                                          std::uint64_t budget);

// One "kind,seq,bin,index,set" row per retained occupied cell, in
// consumption order.
void write_grid_csv(const GridSnapshot& g, std::ostream& out);

// Plain (ASCII) PGM; rows are indices, columns are bins. Occupied cells are
// black, cells that can never be occupied are gray, the rest white.
void write_grid_pgm(const GridSnapshot& g, std::ostream& out, std::uint64_t max_bins,
                    const std::string& comment = {});

}  // namespace infoflow
