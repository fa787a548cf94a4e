#include "infoflow/grids.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace infoflow {

namespace {
constexpr std::uint64_t kSmallBinCap = 1u << 22;  // vector tier for bin counts
}

const char* to_string(GridKind k) {
  switch (k) {
    case GridKind::Card: return "card";
    case GridKind::Sum: return "sum";
    case GridKind::Prod: return "prod";
  }
  return "?";
}

GridCell card_grid_locate(const FiniteSet& s) {
  GridCell cell;
  cell.bin = s.size();
  cell.index = s.empty() ? BigNat(0) : rank_kset(s);
  cell.occupant = s;
  return cell;
}

std::uint64_t GridSnapshot::occupied(const BigNat& bin) const {
  if (bin < 0) return 0;
  if (bin < kSmallBinCap) {
    const auto b = static_cast<std::uint64_t>(bin);
    return b < counts_small_.size() ? counts_small_[b] : 0;
  }
  const auto it = counts_big_.find(bin);
  return it == counts_big_.end() ? 0 : it->second;
}

BigNat GridSnapshot::max_bin() const {
  BigNat best = 0;
  for (std::size_t b = counts_small_.size(); b-- > 0;) {
    if (counts_small_[b] > 0) {
      best = b;
      break;
    }
  }
  if (!counts_big_.empty()) best = std::max(best, counts_big_.rbegin()->first);
  return best;
}

std::uint64_t GridSnapshot::max_occupied() const { return max_occupied_; }

const std::vector<GridOccupant>* GridSnapshot::occupants(const BigNat& bin) const {
  const auto it = retained_.find(bin);
  return it == retained_.end() ? nullptr : &it->second;
}

GridBuilder::GridBuilder(GridKind kind, std::optional<BigNat> retain_limit) {
  snap_.kind_ = kind;
  snap_.retain_limit_ = std::move(retain_limit);
}

void GridBuilder::consume(std::uint64_t n_sets, std::uint64_t budget) {
  if (snap_.sets_consumed_ + n_sets > budget)
    throw budget_error("grid construction budget exceeded");
  for (std::uint64_t i = 0; i < n_sets; ++i) {
    const SetEnumerator::Item item = cursor_.next();
    BigNat bin;
    switch (snap_.kind_) {
      case GridKind::Card: bin = item.card; break;
      case GridKind::Sum: bin = sum_of_ranked(item.card, item.sigma); break;
      case GridKind::Prod: bin = product_of_ranked(item.card, item.sigma); break;
    }
    std::uint64_t index;
    if (bin < kSmallBinCap) {
      const auto b = static_cast<std::uint64_t>(bin);
      if (b >= snap_.counts_small_.size()) snap_.counts_small_.resize(b + 1, 0);
      index = snap_.counts_small_[b]++;
    } else {
      index = snap_.counts_big_[bin]++;
    }
    snap_.max_occupied_ = std::max(snap_.max_occupied_, index + 1);
    if (!snap_.retain_limit_ || bin <= *snap_.retain_limit_) {
      snap_.retained_[bin].push_back({item.dense, index, materialize(item)});
    }
    snap_.cursor_ = item.raw + 1;
    ++snap_.sets_consumed_;
  }
}

GridSnapshot build_grid(GridKind kind, std::uint64_t n_sets, std::uint64_t budget,
                        std::optional<BigNat> retain_limit) {
  GridBuilder builder(kind, std::move(retain_limit));
  builder.consume(n_sets, budget);
  return builder.snapshot();
}

BigNat count_subsets_with_sum(std::uint64_t n) {
  if (n == 0) return 2;  // {} and {0}
  // q(n): partitions into distinct positive parts, by the standard DP over
  // parts 1..n. Each 0-free set pairs with its 0-augmented twin.
  std::vector<BigNat> q(n + 1, 0);
  q[0] = 1;
  for (std::uint64_t part = 1; part <= n; ++part) {
    for (std::uint64_t s = n; s >= part; --s) q[s] += q[s - part];
  }
  return 2 * q[n];
}

double hardy_ramanujan_estimate(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("estimate requires n >= 1");
  const double x = static_cast<double>(n);
  return std::exp(M_PI * std::sqrt(2.0 * x / 3.0)) / (4.0 * x * std::sqrt(3.0));
}

namespace {

// Factorizations of n into strictly increasing factors >= min_factor. The
// smallest factor of a multi-factor split is below sqrt(n); the one-factor
// split {n} is counted separately.
BigNat distinct_factorizations(std::uint64_t n, std::uint64_t min_factor) {
  if (n == 1) return 1;  // empty factorization
  BigNat count = 0;
  for (std::uint64_t d = min_factor; d * d < n; ++d) {
    if (n % d == 0) count += distinct_factorizations(n / d, d + 1);
  }
  if (n >= min_factor) count += 1;
  return count;
}

}  // namespace

std::optional<BigNat> grid_bin_final_count(GridKind kind, const BigNat& bin) {
  switch (kind) {
    case GridKind::Card:
      return std::nullopt;  // every cardinality bin is infinite
    case GridKind::Sum:
      return count_subsets_with_sum(to_u64(bin));
    case GridKind::Prod: {
      if (bin == 0) return std::nullopt;  // all 0-containing sets land here
      if (bin == 1) return BigNat(2);     // {} and {1}
      // Optional element 1 doubles every factorization into distinct parts >= 2.
      return 2 * distinct_factorizations(to_u64(bin), 2);
    }
  }
  return std::nullopt;
}

std::vector<BinStats> vacuous_stats(const GridSnapshot& g, const BigNat& bin_lo,
                                    const BigNat& bin_hi) {
  if (bin_lo > bin_hi) throw std::invalid_argument("empty bin range");
  std::vector<BinStats> out;
  for (BigNat b = bin_lo; b <= bin_hi; ++b) {
    BinStats stats;
    stats.bin = b;
    stats.occupied = g.occupied(b);
    if (stats.occupied > 0) stats.max_index = stats.occupied - 1;
    out.push_back(std::move(stats));
  }
  return out;
}

std::optional<FiniteSet> subset_sum_first(const FiniteSet& S, const BigNat& target,
                                          std::uint64_t budget) {
  const std::size_t n = S.size();
  if (n > 30) throw std::invalid_argument("subset_sum_first supports |S| <= 30");
  if (n < 64 && (std::uint64_t(1) << n) > budget)
    throw budget_error("subset enumeration exceeds work budget");

  const auto& elems = S.elements();
  // Ascending cardinality; within one cardinality, combinations of the sorted
  // elements in lexicographic order, so the first hit is the canonical one.
  if (target == 0) return FiniteSet{};  // the empty subset comes first
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      BigNat sum = 0;
      for (const std::size_t i : pick) sum += elems[i];
      if (sum == target) {
        std::vector<BigNat> chosen;
        chosen.reserve(k);
        for (const std::size_t i : pick) chosen.push_back(elems[i]);
        return FiniteSet(std::move(chosen));
      }
      // next k-combination in lexicographic order
      std::size_t i = k;
      while (i-- > 0) {
        if (pick[i] != i + n - k) {
          ++pick[i];
          for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
          break;
        }
        if (i == 0) {
          i = k;  // exhausted
          break;
        }
      }
      if (i == k) break;
    }
  }
  return std::nullopt;
}

void write_grid_csv(const GridSnapshot& g, std::ostream& out) {
  // Emit retained occupants in consumption (seq) order.
  struct Row {
    const BigNat* bin;
    const GridOccupant* cell;
  };
  std::vector<Row> rows;
  for (const auto& [bin, list] : g.retained()) {
    for (const auto& cell : list) rows.push_back({&bin, &cell});
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.cell->seq < b.cell->seq; });
  for (const Row& r : rows) {
    out << to_string(g.kind()) << ',' << r.cell->seq << ',' << *r.bin << ',' << r.cell->index
        << ',' << format_set(r.cell->set) << '\n';
  }
}

void write_grid_pgm(const GridSnapshot& g, std::ostream& out, std::uint64_t max_bins,
                    const std::string& comment) {
  const BigNat top_bin = g.max_bin();
  const std::uint64_t columns =
      std::min<std::uint64_t>(max_bins, to_u64(top_bin) + 1);
  const std::uint64_t rows = std::max<std::uint64_t>(g.max_occupied(), 1);
  out << "P2\n";
  if (!comment.empty()) out << "# " << comment << '\n';
  out << columns << ' ' << rows << "\n255\n";
  for (std::uint64_t row = 0; row < rows; ++row) {
    for (std::uint64_t col = 0; col < columns; ++col) {
      const BigNat bin = col;
      const std::uint64_t filled = g.occupied(bin);
      int pixel = 255;  // white: not occupied yet, but may be later
      if (row < filled) {
        pixel = 0;  // black: occupied
      } else {
        const auto final_count = grid_bin_final_count(g.kind(), bin);
        if (final_count && BigNat(row) >= *final_count) pixel = 128;  // gray: vacuous
      }
      out << pixel << (col + 1 == columns ? "" : " ");
    }
    out << '\n';
  }
}

}  // namespace infoflow
