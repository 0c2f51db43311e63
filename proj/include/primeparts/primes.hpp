#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace primeparts {

/// All primes up to an inclusive bound, in increasing order. Immutable once built.
class PrimeSet {
 public:
  PrimeSet(std::uint64_t limit, std::vector<std::uint32_t> primes)
      : limit_(limit), primes_(std::move(primes)) {}

  std::uint64_t limit() const noexcept { return limit_; }
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }
  std::uint32_t operator[](std::size_t i) const { return primes_[i]; }

  auto begin() const noexcept { return primes_.begin(); }
  auto end() const noexcept { return primes_.end(); }

  /// Primes p <= bound, as a prefix view of this set.
  std::span<const std::uint32_t> up_to(std::uint64_t bound) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> primes_;
};

/// Sieve of Eratosthenes over odd numbers, one bit per candidate.
/// Throws DomainError for limit < 2.
PrimeSet sieve_primes(std::uint64_t limit);

/// 1/ln(x), the prime-number-theorem density. Throws DomainError for x <= 1.
double average_prime_density(double x);

/// Thread-safe holder that re-sieves to a larger bound on demand.
class PrimeCache {
 public:
  explicit PrimeCache(std::uint64_t initial_limit = 1 << 16);

  /// A prime set whose limit is at least `limit`.
  std::shared_ptr<const PrimeSet> at_least(std::uint64_t limit);

 private:
  std::mutex mutex_;
  std::shared_ptr<const PrimeSet> current_;
};

}  // namespace primeparts
