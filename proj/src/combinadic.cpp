#include "infoflow/combinadic.hpp"

#include <algorithm>

namespace infoflow {

namespace {

// Largest v with C(v, k) <= limit, for k >= 1. Exponential search from the
// smallest candidate v = k-1 (where C(v,k) = 0), then bisection. C(v,k) is
// strictly increasing in v for v >= k, so the answer is unique.
BigNat largest_with_binomial_at_most(std::uint64_t k, const BigNat& limit) {
  if (k == 1) return limit;
  const BigNat lo_base = k - 1;
  BigNat step = 1;
  while (binomial(lo_base + step, k) <= limit) step *= 2;
  // Invariant: C(lo_base + lo, k) <= limit < C(lo_base + hi, k)
  BigNat lo = step / 2, hi = step;
  while (hi - lo > 1) {
    const BigNat mid = lo + (hi - lo) / 2;
    if (binomial(lo_base + mid, k) <= limit)
      lo = mid;
    else
      hi = mid;
  }
  return lo_base + lo;
}

// Walks the combinadic digits of (k, sigma) from the largest down, invoking
// visit(position, element) for each digit. Once the remainder hits zero the
// tail is forced to {0, ..., i-1}; tail(i) reports that cutoff instead of
// emitting i more digits.
template <typename Visit, typename Tail>
void descend(std::uint64_t k, const BigNat& sigma, Visit&& visit, Tail&& tail) {
  BigNat rem = sigma;
  for (std::uint64_t i = k; i >= 1; --i) {
    if (rem == 0) {
      tail(i);
      return;
    }
    BigNat v = largest_with_binomial_at_most(i, rem);
    rem -= binomial(v, i);
    visit(i, std::move(v));
  }
}

}  // namespace

BigNat rank_kset(const FiniteSet& s) {
  if (s.empty()) throw std::invalid_argument("rank_kset requires a nonempty set");
  BigNat rank = 0;
  BigNat position = 1;  // element index in ascending order
  for (const BigNat& e : s.elements()) {
    rank += binomial(e, position);
    ++position;
  }
  return rank;
}

FiniteSet unrank_kset(std::uint64_t k, const BigNat& idx) {
  if (k == 0) throw std::invalid_argument("unrank_kset requires k >= 1");
  if (idx < 0) throw std::invalid_argument("unrank_kset requires idx >= 0");
  std::vector<BigNat> elems(k);
  descend(
      k, idx,
      [&](std::uint64_t i, BigNat v) { elems[i - 1] = std::move(v); },
      [&](std::uint64_t i) {
        for (std::uint64_t j = 0; j < i; ++j) elems[j] = j;
      });
  return FiniteSet(std::move(elems));
}

BigNat sum_of_ranked(std::uint64_t k, const BigNat& sigma) {
  if (k == 0) return 0;
  BigNat total = 0;
  descend(
      k, sigma, [&](std::uint64_t, BigNat v) { total += v; },
      [&](std::uint64_t i) { total += BigNat(i) * (i - 1) / 2; });
  return total;
}

BigNat product_of_ranked(std::uint64_t k, const BigNat& sigma) {
  if (k == 0) return 1;
  BigNat total = 1;
  bool zeroed = false;
  descend(
      k, sigma, [&](std::uint64_t, BigNat v) { total *= v; },
      [&](std::uint64_t i) { zeroed = (i >= 1); });  // tail {0,...,i-1} contains 0
  // A nonzero tail never occurs: descend only reports tails of the form
  // {0,...,i-1}, and the digit loop ends exactly when the remainder is 0.
  if (zeroed || sigma == 0) return 0;
  return total;
}

BigNat vacuous_below(const BigNat& raw) {
  // Vacuous codes are (j^2 + 3j)/2 for j >= 1; count j with (j^2+3j)/2 < raw.
  if (raw <= 2) return 0;
  // j < (-3 + sqrt(9 + 8*raw)) / 2; take the floor carefully around exact hits.
  BigNat j = (isqrt(8 * raw + 9) - 3) / 2;
  while ((j * j + 3 * j) / 2 >= raw) --j;
  while (((j + 1) * (j + 1) + 3 * (j + 1)) / 2 < raw) ++j;
  return j;
}

SetCode set_to_code(const FiniteSet& s) {
  const BigNat card = s.size();
  const BigNat sigma = s.empty() ? BigNat(0) : rank_kset(s);
  BigNat raw = cantor_pair(card, sigma);
  BigNat dense = raw - vacuous_below(raw);
  return {std::move(raw), std::move(dense)};
}

FiniteSet code_to_set(const BigNat& dense) {
  if (dense < 0) throw std::invalid_argument("dense code must be a natural");
  // Find the raw code whose dense rank equals `dense`: fixpoint of
  // raw = dense + vacuous_below(raw), then skip the code if it is vacuous
  // itself (vacuous codes are never adjacent).
  BigNat raw = dense;
  for (;;) {
    BigNat next = dense + vacuous_below(raw);
    if (next == raw) break;
    raw = std::move(next);
  }
  Pair p = cantor_unpair(raw);
  if (p.x == 0 && p.y > 0) {
    ++raw;
    p = cantor_unpair(raw);
  }
  if (p.x == 0) return FiniteSet{};
  return unrank_kset(to_u64(p.x), p.y);
}

InfoValue set_info(const FiniteSet& s) { return info(set_to_code(s).raw); }

double pair_balance(const BigNat& k, const BigNat& sigma) {
  return info(cantor_pair(k, sigma)).bits - info(k).bits - info(sigma).bits;
}

double balance_check(const FiniteSet& s) {
  if (s.empty()) throw std::domain_error("balance_check requires a nonempty set");
  const BigNat sigma = rank_kset(s);
  if (sigma == 0) throw std::domain_error("balance undefined at rank 0");
  return pair_balance(BigNat(s.size()), sigma);
}

SetEnumerator::Item SetEnumerator::next() {
  // Diagonal d holds the codes T(d)..T(d)+d as (card, sigma) = (d,0),
  // (d-1,1), ..., (0,d); the final cell is vacuous for d >= 1.
  for (;;) {
    if (offset_ > diagonal_) {
      ++diagonal_;
      offset_ = 0;
    }
    const std::uint64_t card = diagonal_ - offset_;
    Item item{raw_, dense_, card, BigNat(offset_)};
    ++offset_;
    ++raw_;
    if (card == 0 && item.sigma > 0) continue;  // vacuous cell, no dense rank
    ++dense_;
    return item;
  }
}

FiniteSet materialize(const SetEnumerator::Item& item) {
  if (item.card == 0) return FiniteSet{};
  return unrank_kset(item.card, item.sigma);
}

std::vector<FiniteSet> enumerate_sets(std::uint64_t limit) {
  std::vector<FiniteSet> out;
  out.reserve(limit);
  SetEnumerator cursor;
  for (std::uint64_t i = 0; i < limit; ++i) out.push_back(materialize(cursor.next()));
  return out;
}

}  // namespace infoflow
