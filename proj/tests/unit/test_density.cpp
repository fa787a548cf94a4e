#include <doctest.h>

#include <cmath>
#include <sstream>

#include "infoflow/density.hpp"
#include "oracles.hpp"

using namespace infoflow;

TEST_SUITE_BEGIN("density");

TEST_CASE("compression function counts the prefix") {
  CHECK(compression_function(make_evens(), 1000) == 500);
  CHECK(compression_function(make_evens(), 0) == 0);
  CHECK(compression_function(make_primes(), 100) == 25);
}

TEST_CASE("prime counts agree with an independent sieve") {
  const auto table = oracles::prime_table(100000);
  std::uint64_t expect = 0;
  for (std::uint64_t n = 2; n <= 100000; ++n)
    if (table[n]) ++expect;
  CHECK(compression_function(make_primes(), 100000) == expect);
  CHECK(expect == 9592);
}

TEST_CASE("index function") {
  CHECK(index_of(make_evens(), 3) == 6);
  CHECK(index_of(make_primes(), 1) == 2);
  CHECK(index_of(make_squares(), 5) == 25);
  CHECK_THROWS_AS(index_of(make_evens(), 100, 50), budget_error);
  CHECK_THROWS_AS(index_of(make_evens(), 0), std::invalid_argument);
}

TEST_CASE("index and compression are inverse-adjoint") {
  for (const NumberSet& A : {make_evens(), make_primes(), make_squares(), make_leading_digit_one()}) {
    for (std::uint64_t j = 1; j <= 40; ++j) {
      CHECK(compression_function(A, index_of(A, j)) == j);
    }
  }
}

TEST_CASE("conditional information") {
  CHECK(conditional_info(make_evens(), 8).bits == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(conditional_info(make_evens(), 2).bits == 0.0);  // first element
  // 541 is the 100th prime
  CHECK(conditional_info(make_primes(), 541).bits ==
        doctest::Approx(std::log2(100.0)).epsilon(1e-13));
  CHECK_THROWS_AS(conditional_info(make_evens(), 7), std::invalid_argument);
}

TEST_CASE("randomness deficiency") {
  CHECK(randomness_deficiency(make_evens(), 8) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(randomness_deficiency(make_primes(), 541) ==
        doctest::Approx(std::log2(541.0) - std::log2(100.0)).epsilon(1e-12));
  // the full set compresses nothing
  for (std::uint64_t n : {1ull, 2ull, 17ull, 999ull}) {
    CHECK(std::abs(randomness_deficiency(make_naturals(), n)) < 1e-9);
  }
  // elements are distinct naturals, so the j-th element is >= j
  for (std::uint64_t j = 1; j <= 30; ++j) {
    const std::uint64_t n = index_of(make_primes(), j);
    CHECK(randomness_deficiency(make_primes(), n) >= 0.0);
  }
}

TEST_CASE("evens have natural density one half") {
  std::vector<std::uint64_t> checkpoints;
  for (std::uint64_t i = 1; i <= 10; ++i) checkpoints.push_back(100000 * i);
  const DensityProfile profile = density_profile(make_evens(), 1000000, checkpoints);
  CHECK(profile.defined);
  REQUIRE(profile.natural.has_value());
  CHECK(*profile.natural == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(profile.lower <= profile.upper);
  CHECK(profile.lower >= 0.0);
  CHECK(profile.upper <= 1.0);
}

TEST_CASE("prime density trends down and is small by a million") {
  const std::vector<std::uint64_t> checkpoints{200000, 400000, 600000, 800000,
                                               850000, 900000, 950000, 1000000};
  const DensityProfile profile = density_profile(make_primes(), 1000000, checkpoints);
  double prev = 1.0;
  for (const auto& [n, c] : profile.prefix_points) {
    const double ratio = static_cast<double>(c) / static_cast<double>(n);
    CHECK(ratio < prev);
    prev = ratio;
  }
  CHECK(profile.upper < 0.08);  // tail half starts at 850000
  CHECK(profile.prefix_points.back().second == 78498);
}

TEST_CASE("leading-digit-1 set fluctuates and has no natural density") {
  // exact counts by digit scan
  std::uint64_t count = 0;
  const NumberSet A = make_leading_digit_one();
  for (std::uint64_t n = 1; n <= 100000; ++n)
    if (A.contains(n)) ++count;
  CHECK(count == 11112);  // 1 + 10 + 100 + 1000 + 10000 + the endpoint 100000
  for (std::uint64_t n = 100001; n <= 200000; ++n)
    if (A.contains(n)) ++count;
  CHECK(count == 111111);

  const std::vector<std::uint64_t> checkpoints{1000,  2000,  10000,  20000,
                                               100000, 200000};
  const DensityProfile profile = density_profile(A, 200000, checkpoints);
  const auto& at_1e5 = profile.prefix_points[4];
  const auto& at_2e5 = profile.prefix_points[5];
  CHECK(static_cast<double>(at_1e5.second) / at_1e5.first ==
        doctest::Approx(1.0 / 9.0).epsilon(0.05));
  CHECK(static_cast<double>(at_2e5.second) / at_2e5.first ==
        doctest::Approx(5.0 / 9.0).epsilon(0.05));
  CHECK_FALSE(profile.defined);
  CHECK_FALSE(profile.natural.has_value());
}

TEST_CASE("squares witness the incompressibility bound") {
  std::vector<std::uint64_t> checkpoints;
  for (std::uint64_t i = 1; i <= 10; ++i) checkpoints.push_back(100000 * i);
  const DensityProfile profile = density_profile(make_squares(), 1000000, checkpoints);
  CHECK(profile.upper < 0.002);
}

TEST_CASE("the deficiency function f(n) = 2 fits the evens") {
  const std::uint64_t n = 1000000;
  const double c = static_cast<double>(compression_function(make_evens(), n));
  CHECK(std::abs(c * 2.0 / static_cast<double>(n) - 1.0) < 1e-3);
}

TEST_CASE("profile input validation") {
  CHECK_THROWS_AS(density_profile(make_evens(), 100, std::vector<std::uint64_t>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(density_profile(make_evens(), 100, std::vector<std::uint64_t>{50, 20}),
                  std::invalid_argument);
  CHECK_THROWS_AS(density_profile(make_evens(), 100, std::vector<std::uint64_t>{50, 200}),
                  std::invalid_argument);
}

TEST_CASE("shannon entropy estimate") {
  CHECK(shannon_entropy_estimate(make_evens(), 1000000) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(shannon_entropy_estimate(make_naturals(), 1000) == 0.0);
  const double p = 78498.0 / 1000000.0;
  const double expect = -(p * std::log2(p) + (1 - p) * std::log2(1 - p));
  CHECK(shannon_entropy_estimate(make_primes(), 1000000) ==
        doctest::Approx(expect).epsilon(1e-12));
  CHECK(expect == doctest::Approx(0.3969).epsilon(1e-3));
}

TEST_CASE("named sets resolve and residue classes work") {
  CHECK(named_set("evens").name() == "evens");
  const NumberSet r = named_set("mod:3:0,2");
  CHECK(r.contains(3));
  CHECK(r.contains(5));
  CHECK_FALSE(r.contains(4));
  CHECK_FALSE(r.contains(0));  // 0 is outside the counting convention
  CHECK_THROWS_AS(named_set("fib"), std::invalid_argument);
  CHECK_THROWS_AS(named_set("mod:0:1"), std::invalid_argument);
  CHECK_THROWS_AS(named_set("mod:3:7"), std::invalid_argument);
}

TEST_CASE("profile CSV shape") {
  const std::vector<std::uint64_t> checkpoints{2, 4};
  const DensityProfile profile = density_profile(make_evens(), 4, checkpoints);
  std::ostringstream out;
  write_profile_csv(profile, out);
  CHECK(out.str() == "2,1,0.5\n4,2,0.5\n0.5,0.5,0.5,true\n");
}

TEST_SUITE_END();
