#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "oracles.hpp"
#include "primeparts/errors.hpp"
#include "primeparts/primes.hpp"

namespace primeparts {
namespace {

std::vector<std::uint64_t> as_vector(const PrimeSet& set) { return {set.begin(), set.end()}; }

TEST(SievePrimes, SmallLimits) {
  EXPECT_EQ(as_vector(sieve_primes(10)), (std::vector<std::uint64_t>{2, 3, 5, 7}));
  EXPECT_EQ(as_vector(sieve_primes(2)), (std::vector<std::uint64_t>{2}));
  EXPECT_EQ(as_vector(sieve_primes(3)), (std::vector<std::uint64_t>{2, 3}));
  EXPECT_EQ(sieve_primes(11).primes().back(), 11u);
}

TEST(SievePrimes, RejectsLimitBelowTwo) {
  EXPECT_THROW(sieve_primes(1), DomainError);
  EXPECT_THROW(sieve_primes(0), DomainError);
}

TEST(SievePrimes, MatchesTrialDivisionToOneHundredThousand) {
  const PrimeSet set = sieve_primes(100000);
  EXPECT_EQ(set.size(), 9592u);
  EXPECT_EQ(set.primes().back(), 99991u);
  EXPECT_EQ(as_vector(set), testing::primes_by_trial(100000));
}

TEST(SievePrimes, PrimeCountAtTenThousand) {
  EXPECT_EQ(sieve_primes(10000).size(), testing::primes_by_trial(10000).size());
  EXPECT_EQ(sieve_primes(10000).size(), 1229u);
}

TEST(SievePrimes, SampledElementsArePrimeAndIncreasing) {
  const PrimeSet set = sieve_primes(1000000);
  ASSERT_GE(set.size(), 5u);
  EXPECT_EQ(set[0], 2u);
  EXPECT_EQ(set[4], 11u);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, set.size() - 1);
  for (int i = 0; i < 500; ++i) EXPECT_TRUE(testing::is_prime_trial(set[pick(rng)]));
  for (std::size_t i = 1; i < set.size(); ++i) ASSERT_LT(set[i - 1], set[i]);
}

TEST(SievePrimes, SmallerLimitIsPrefix) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint64_t> limit(2, 20000);
  const PrimeSet big = sieve_primes(20000);
  for (int i = 0; i < 50; ++i) {
    const PrimeSet small = sieve_primes(limit(rng));
    ASSERT_LE(small.size(), big.size());
    EXPECT_TRUE(std::equal(small.begin(), small.end(), big.begin()));
  }
}

TEST(SievePrimes, MillionUnderOneSecond) {
  const auto start = std::chrono::steady_clock::now();
  const PrimeSet set = sieve_primes(1000000);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_EQ(set.size(), 78498u);
  EXPECT_LT(std::chrono::duration<double>(elapsed).count(), 1.0);
}

TEST(PrimeSet, UpToGivesPrefix) {
  const PrimeSet set = sieve_primes(100);
  EXPECT_EQ(set.up_to(10).size(), 4u);
  EXPECT_EQ(set.up_to(11).size(), 5u);
  EXPECT_EQ(set.up_to(1).size(), 0u);
  EXPECT_EQ(set.up_to(1000).size(), set.size());
}

TEST(AveragePrimeDensity, KnownValues) {
  EXPECT_DOUBLE_EQ(average_prime_density(std::numbers::e), 1.0);
  EXPECT_DOUBLE_EQ(average_prime_density(std::numbers::e * std::numbers::e), 0.5);
  EXPECT_NEAR(average_prime_density(100.0), 0.21714724095162590, 1e-15);
}

TEST(AveragePrimeDensity, RejectsXAtMostOne) {
  EXPECT_THROW(average_prime_density(1.0), DomainError);
  EXPECT_THROW(average_prime_density(0.5), DomainError);
  EXPECT_THROW(average_prime_density(-3.0), DomainError);
}

TEST(PrimeCache, GrowsOnDemandAndSharesAcrossThreads) {
  PrimeCache cache(100);
  EXPECT_GE(cache.at_least(50)->limit(), 100u);
  const auto grown = cache.at_least(5000);
  EXPECT_GE(grown->limit(), 5000u);

  std::vector<std::thread> threads;
  std::vector<std::size_t> sizes(8);
  for (std::size_t t = 0; t < sizes.size(); ++t)
    threads.emplace_back([&, t] { sizes[t] = cache.at_least(10000 + 1000 * t)->up_to(10000).size(); });
  for (auto& th : threads) th.join();
  for (std::size_t s : sizes) EXPECT_EQ(s, 1229u);
}

}  // namespace
}  // namespace primeparts
