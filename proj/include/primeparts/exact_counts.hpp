#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace primeparts {

using BigInt = mpz_class;

enum class PartitionKind {
  DistinctPrimes,      // Q(n), each prime used at most once
  UnrestrictedPrimes,  // P(n), repetition allowed
};

/// "distinct" / "all", the spellings used by the cache format and the CLI.
std::string_view kind_name(PartitionKind kind);
PartitionKind parse_kind(std::string_view name);

/// Exact counts for n = 0..n_max.
class PartitionTable {
 public:
  PartitionTable(PartitionKind kind, std::vector<BigInt> counts);

  PartitionKind kind() const noexcept { return kind_; }
  std::size_t n_max() const noexcept { return counts_.size() - 1; }
  const std::vector<BigInt>& counts() const noexcept { return counts_; }

  /// Bounds-checked; throws IndexError.
  const BigInt& at(std::size_t n) const;
  const BigInt& operator[](std::size_t n) const { return counts_[n]; }

  friend bool operator==(const PartitionTable& a, const PartitionTable& b) {
    return a.kind_ == b.kind_ && a.counts_ == b.counts_;
  }

 private:
  PartitionKind kind_;
  std::vector<BigInt> counts_;
};

/// Q_N(n): sets of exactly N distinct primes summing to n. Rows above the
/// largest N whose N smallest primes still fit under n_max are not stored.
class RestrictedTable {
 public:
  RestrictedTable(std::size_t n_max, std::vector<std::vector<BigInt>> rows);

  std::size_t n_max() const noexcept { return n_max_; }
  std::size_t N_max() const noexcept { return rows_.size() - 1; }

  /// Q_N(n); zero for any N beyond the stored rows.
  BigInt at(std::size_t N, std::size_t n) const;
  const std::vector<BigInt>& row(std::size_t N) const { return rows_.at(N); }

 private:
  std::size_t n_max_;
  std::vector<std::vector<BigInt>> rows_;
};

/// Called with (primes_done, primes_total) while a table is being built.
using ProgressFn = std::function<void(std::size_t, std::size_t)>;

/// 0/1 knapsack over the primes, n descending.
PartitionTable count_distinct(std::size_t n_max, const ProgressFn& progress = {});

/// Unbounded knapsack over the primes, n ascending.
PartitionTable count_unrestricted(std::size_t n_max, const ProgressFn& progress = {});

RestrictedTable count_restricted(std::size_t n_max, std::size_t N_max);

/// Coefficients of prod_{p <= n_max} (1 + x^p) mod x^(n_max+1), computed by
/// multiplying the factors pairwise in a balanced tree with plain truncated
/// convolution. Shares no code with count_distinct so it can check it.
PartitionTable genfunc_coefficients(std::size_t n_max);

/// Natural log of a positive integer from its bit length and leading 64 bits.
/// Throws DomainError for values < 1.
double log_big(const BigInt& value);

/// ln(table[n]). IndexError if n > n_max, DomainError if the count is zero.
double log_of_count(const PartitionTable& table, std::size_t n);

}  // namespace primeparts
