#include "primeparts/exact_counts.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "primeparts/errors.hpp"
#include "primeparts/primes.hpp"

namespace primeparts {

std::string_view kind_name(PartitionKind kind) {
  return kind == PartitionKind::DistinctPrimes ? "distinct" : "all";
}

PartitionKind parse_kind(std::string_view name) {
  if (name == "distinct") return PartitionKind::DistinctPrimes;
  if (name == "all") return PartitionKind::UnrestrictedPrimes;
  throw DomainError("unknown partition kind '" + std::string(name) + "' (expected distinct|all)");
}

PartitionTable::PartitionTable(PartitionKind kind, std::vector<BigInt> counts)
    : kind_(kind), counts_(std::move(counts)) {
  if (counts_.empty()) throw DomainError("PartitionTable: needs at least the n = 0 entry");
}

const BigInt& PartitionTable::at(std::size_t n) const {
  if (n >= counts_.size())
    throw IndexError("n = " + std::to_string(n) + " outside table (n_max = " + std::to_string(n_max()) + ")");
  return counts_[n];
}

RestrictedTable::RestrictedTable(std::size_t n_max, std::vector<std::vector<BigInt>> rows)
    : n_max_(n_max), rows_(std::move(rows)) {}

BigInt RestrictedTable::at(std::size_t N, std::size_t n) const {
  if (n > n_max_) throw IndexError("n = " + std::to_string(n) + " outside restricted table");
  if (N >= rows_.size()) return 0;
  return rows_[N][n];
}

namespace {

// Allocation failure propagates as std::bad_alloc; the CLI reports it as fatal.
std::vector<BigInt> unit_vector(std::size_t n_max) {
  std::vector<BigInt> counts(n_max + 1);
  counts[0] = 1;
  return counts;
}

std::span<const std::uint32_t> primes_below(std::size_t n_max, std::optional<PrimeSet>& storage) {
  if (n_max < 2) return {};
  storage = sieve_primes(n_max);
  return storage->primes();
}

}  // namespace

PartitionTable count_distinct(std::size_t n_max, const ProgressFn& progress) {
  std::optional<PrimeSet> sieve;
  const auto primes = primes_below(n_max, sieve);
  auto counts = unit_vector(n_max);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::size_t p = primes[i];
    for (std::size_t n = n_max; n >= p; --n)
      mpz_add(counts[n].get_mpz_t(), counts[n].get_mpz_t(), counts[n - p].get_mpz_t());
    if (progress) progress(i + 1, primes.size());
  }
  return PartitionTable(PartitionKind::DistinctPrimes, std::move(counts));
}

PartitionTable count_unrestricted(std::size_t n_max, const ProgressFn& progress) {
  std::optional<PrimeSet> sieve;
  const auto primes = primes_below(n_max, sieve);
  auto counts = unit_vector(n_max);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::size_t p = primes[i];
    for (std::size_t n = p; n <= n_max; ++n)
      mpz_add(counts[n].get_mpz_t(), counts[n].get_mpz_t(), counts[n - p].get_mpz_t());
    if (progress) progress(i + 1, primes.size());
  }
  return PartitionTable(PartitionKind::UnrestrictedPrimes, std::move(counts));
}

RestrictedTable count_restricted(std::size_t n_max, std::size_t N_max) {
  std::optional<PrimeSet> sieve;
  const auto primes = primes_below(n_max, sieve);

  // Largest N whose N smallest primes sum to at most n_max.
  std::size_t cap = 0;
  for (std::size_t sum = 0; cap < primes.size() && sum + primes[cap] <= n_max; ++cap) sum += primes[cap];
  const std::size_t rows_kept = std::min(N_max, cap) + 1;

  std::vector<std::vector<BigInt>> rows(rows_kept, std::vector<BigInt>(n_max + 1));
  rows[0][0] = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::size_t p = primes[i];
    // Using the (i+1)-th prime can raise the part count to at most i+1.
    for (std::size_t N = std::min(rows_kept - 1, i + 1); N >= 1; --N) {
      auto& dst = rows[N];
      const auto& src = rows[N - 1];
      for (std::size_t n = n_max; n >= p; --n)
        if (sgn(src[n - p]) != 0) mpz_add(dst[n].get_mpz_t(), dst[n].get_mpz_t(), src[n - p].get_mpz_t());
    }
  }
  return RestrictedTable(n_max, std::move(rows));
}

namespace {

using Poly = std::vector<BigInt>;

// Truncated schoolbook product; zero coefficients are skipped.
Poly multiply_truncated(const Poly& a, const Poly& b, std::size_t n_max) {
  Poly c(std::min(a.size() + b.size() - 1, n_max + 1));
  for (std::size_t i = 0; i < a.size() && i < c.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < c.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return c;
}

}  // namespace

PartitionTable genfunc_coefficients(std::size_t n_max) {
  std::optional<PrimeSet> sieve;
  const auto primes = primes_below(n_max, sieve);

  std::vector<Poly> level;
  level.reserve(primes.size());
  for (std::uint32_t p : primes) {
    Poly f(p + 1);
    f[0] = 1;
    f[p] = 1;
    level.push_back(std::move(f));
  }
  if (level.empty()) level.push_back(Poly{1});

  while (level.size() > 1) {
    std::vector<Poly> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2)
      next.push_back(multiply_truncated(level[i], level[i + 1], n_max));
    if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
    level = std::move(next);
  }

  Poly coeffs = std::move(level.front());
  coeffs.resize(n_max + 1);
  return PartitionTable(PartitionKind::DistinctPrimes, std::move(coeffs));
}

double log_big(const BigInt& value) {
  if (sgn(value) <= 0) throw DomainError("log of a count below 1");
  const std::size_t bits = mpz_sizeinbase(value.get_mpz_t(), 2);
  if (bits <= 64) return static_cast<double>(std::log(static_cast<long double>(value.get_ui())));

  mpz_class top;
  const std::size_t shift = bits - 64;
  mpz_tdiv_q_2exp(top.get_mpz_t(), value.get_mpz_t(), shift);
  const long double lead = static_cast<long double>(top.get_ui());
  return static_cast<double>(std::log(lead) + static_cast<long double>(shift) * std::numbers::ln2_v<long double>);
}

double log_of_count(const PartitionTable& table, std::size_t n) {
  const BigInt& value = table.at(n);
  if (sgn(value) == 0) throw DomainError("count at n = " + std::to_string(n) + " is zero; its log is undefined");
  return log_big(value);
}

}  // namespace primeparts
