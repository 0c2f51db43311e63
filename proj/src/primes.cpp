#include "primeparts/primes.hpp"

#include <algorithm>
#include <cmath>

#include "primeparts/errors.hpp"

namespace primeparts {

std::span<const std::uint32_t> PrimeSet::up_to(std::uint64_t bound) const {
  auto it = std::upper_bound(primes_.begin(), primes_.end(), bound);
  return {primes_.data(), static_cast<std::size_t>(it - primes_.begin())};
}

PrimeSet sieve_primes(std::uint64_t limit) {
  if (limit < 2) throw DomainError("sieve_primes: limit must be >= 2");
  if (limit > std::uint64_t{0xffffffff}) throw DomainError("sieve_primes: limit exceeds 32-bit range");

  // Bit i stands for the odd number 2i+1; a set bit means composite.
  const std::uint64_t n_odd = (limit + 1) / 2;
  std::vector<std::uint64_t> composite((n_odd + 63) / 64, 0);
  auto is_set = [&](std::uint64_t i) { return (composite[i >> 6] >> (i & 63)) & 1u; };
  composite[0] |= 1;  // 1 is not prime

  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (is_set(i)) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t j = (p * p) / 2; j < n_odd; j += p) composite[j >> 6] |= std::uint64_t{1} << (j & 63);
  }

  std::vector<std::uint32_t> primes;
  const double x = static_cast<double>(limit);
  primes.reserve(static_cast<std::size_t>(1.3 * x / std::log(std::max(x, 3.0))) + 4);
  primes.push_back(2);
  for (std::uint64_t i = 1; i < n_odd; ++i)
    if (!is_set(i)) primes.push_back(static_cast<std::uint32_t>(2 * i + 1));
  return PrimeSet(limit, std::move(primes));
}

double average_prime_density(double x) {
  if (!(x > 1.0)) throw DomainError("average_prime_density: requires x > 1");
  return 1.0 / std::log(x);
}

PrimeCache::PrimeCache(std::uint64_t initial_limit)
    : current_(std::make_shared<const PrimeSet>(sieve_primes(std::max<std::uint64_t>(initial_limit, 2)))) {}

std::shared_ptr<const PrimeSet> PrimeCache::at_least(std::uint64_t limit) {
  std::lock_guard lock(mutex_);
  if (current_->limit() < limit) {
    // Grow geometrically so repeated small extensions stay cheap.
    const std::uint64_t target = std::max(limit, 2 * current_->limit());
    current_ = std::make_shared<const PrimeSet>(sieve_primes(target));
  }
  return current_;
}

}  // namespace primeparts
