#include "infoflow/density.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <memory>
#include <mutex>
#include <ostream>

namespace infoflow {

namespace {

// Growable odd-composite sieve shared by the primes predicate.
class PrimeSieve {
 public:
  bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    std::lock_guard<std::mutex> lock(mutex_);
    ensure(n);
    return !composite_[n / 2];
  }

 private:
  void ensure(std::uint64_t n) {
    if (n < limit_) return;
    std::uint64_t new_limit = std::max<std::uint64_t>(limit_ * 2, n + 1);
    new_limit = std::max<std::uint64_t>(new_limit, 1024);
    composite_.assign(new_limit / 2 + 1, false);
    composite_[0] = true;  // 1 is not prime
    for (std::uint64_t p = 3; p * p < new_limit; p += 2) {
      if (composite_[p / 2]) continue;
      for (std::uint64_t q = p * p; q < new_limit; q += 2 * p) composite_[q / 2] = true;
    }
    limit_ = new_limit;
  }

  std::mutex mutex_;
  std::uint64_t limit_ = 0;
  std::vector<bool> composite_;
};

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

}  // namespace

NumberSet make_naturals() {
  return {"naturals", [](std::uint64_t n) { return n >= 1; }};
}

NumberSet make_evens() {
  return {"evens", [](std::uint64_t n) { return n >= 1 && n % 2 == 0; }};
}

NumberSet make_odds() {
  return {"odds", [](std::uint64_t n) { return n % 2 == 1; }};
}

NumberSet make_primes() {
  auto sieve = std::make_shared<PrimeSieve>();
  return {"primes", [sieve](std::uint64_t n) { return sieve->is_prime(n); }};
}

NumberSet make_squares() {
  return {"squares", [](std::uint64_t n) {
            if (n == 0) return false;
            const auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
            for (std::uint64_t c = (r > 0 ? r - 1 : 0); c <= r + 1; ++c)
              if (c * c == n) return true;
            return false;
          }};
}

NumberSet make_leading_digit_one() {
  return {"leading1", [](std::uint64_t n) {
            if (n == 0) return false;
            while (n >= 10) n /= 10;
            return n == 1;
          }};
}

NumberSet make_residue_class(std::uint64_t modulus, std::vector<std::uint64_t> residues) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  std::string name = "mod:" + std::to_string(modulus) + ":";
  std::sort(residues.begin(), residues.end());
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (residues[i] >= modulus) throw std::invalid_argument("residue out of range");
    name += (i ? "," : "") + std::to_string(residues[i]);
  }
  return {std::move(name), [modulus, residues](std::uint64_t n) {
            return n >= 1 && std::binary_search(residues.begin(), residues.end(), n % modulus);
          }};
}

NumberSet named_set(const std::string& spec) {
  if (spec == "naturals") return make_naturals();
  if (spec == "evens") return make_evens();
  if (spec == "odds") return make_odds();
  if (spec == "primes") return make_primes();
  if (spec == "squares") return make_squares();
  if (spec == "leading1") return make_leading_digit_one();
  if (spec.rfind("mod:", 0) == 0) {
    const std::size_t second = spec.find(':', 4);
    if (second == std::string::npos) throw std::invalid_argument("expected mod:<m>:<r,...>");
    const std::uint64_t modulus = to_u64(parse_nat(spec.substr(4, second - 4)));
    std::vector<std::uint64_t> residues;
    std::size_t pos = second + 1;
    while (pos <= spec.size()) {
      const std::size_t comma = spec.find(',', pos);
      residues.push_back(to_u64(parse_nat(
          spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos))));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return make_residue_class(modulus, std::move(residues));
  }
  throw std::invalid_argument("unknown set: " + spec);
}

std::uint64_t compression_function(const NumberSet& A, std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i <= n; ++i)
    if (A.contains(i)) ++count;
  return count;
}

std::uint64_t index_of(const NumberSet& A, std::uint64_t j, std::uint64_t search_limit) {
  if (j == 0) throw std::invalid_argument("index_of is 1-based");
  std::uint64_t seen = 0;
  for (std::uint64_t n = 1; n <= search_limit; ++n) {
    if (A.contains(n) && ++seen == j) return n;
  }
  throw budget_error("index_of: search budget exhausted before element " + std::to_string(j));
}

InfoValue conditional_info(const NumberSet& A, std::uint64_t n) {
  if (!A.contains(n)) throw std::invalid_argument("element not in set");
  return info(BigNat(compression_function(A, n)));
}

double randomness_deficiency(const NumberSet& A, std::uint64_t n) {
  return info(BigNat(n)).bits - conditional_info(A, n).bits;
}

DensityProfile density_profile(const NumberSet& A, std::uint64_t max_n,
                               std::span<const std::uint64_t> checkpoints, double tolerance) {
  if (checkpoints.empty()) throw std::invalid_argument("checkpoint list is empty");
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] == 0 || checkpoints[i] > max_n)
      throw std::invalid_argument("checkpoints must lie in [1, max_n]");
    if (i > 0 && checkpoints[i - 1] >= checkpoints[i])
      throw std::invalid_argument("checkpoints must be ascending");
  }

  DensityProfile profile;
  std::uint64_t count = 0;
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= max_n && next < checkpoints.size(); ++n) {
    if (A.contains(n)) ++count;
    if (n == checkpoints[next]) {
      profile.prefix_points.emplace_back(n, count);
      ++next;
    }
  }

  const std::size_t tail_start = checkpoints.size() / 2;  // first half is burn-in
  double lower = 1.0, upper = 0.0;
  for (std::size_t i = tail_start; i < profile.prefix_points.size(); ++i) {
    const auto& [n, c] = profile.prefix_points[i];
    const double ratio = static_cast<double>(c) / static_cast<double>(n);
    lower = std::min(lower, ratio);
    upper = std::max(upper, ratio);
  }
  profile.lower = lower;
  profile.upper = upper;
  if (upper - lower < tolerance) {
    profile.defined = true;
    profile.natural = (lower + upper) / 2.0;
  }
  return profile;
}

double shannon_entropy_estimate(const NumberSet& A, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("shannon_entropy_estimate requires n >= 1");
  const double p = static_cast<double>(compression_function(A, n)) / static_cast<double>(n);
  const double q = 1.0 - p;
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (q > 0.0) h -= q * std::log2(q);
  return h * base_scale();
}

void write_profile_csv(const DensityProfile& profile, std::ostream& out) {
  for (const auto& [n, c] : profile.prefix_points) {
    out << n << ',' << c << ','
        << format_double(static_cast<double>(c) / static_cast<double>(n)) << '\n';
  }
  out << format_double(profile.lower) << ',' << format_double(profile.upper) << ','
      << (profile.natural ? format_double(*profile.natural) : std::string())
      << ',' << (profile.defined ? "true" : "false") << '\n';
}

}  // namespace infoflow
