#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "primeparts/constants.hpp"
#include "primeparts/exact_counts.hpp"

namespace primeparts {

/// Exact vs. asymptotic logs at one n. For an UnrestrictedPrimes table the
/// asymptotic columns hold the bosonic forms (leading 3 ln n exponent, P_as).
struct ComparisonRow {
  std::size_t n = 0;
  double ln_exact = 0;
  double ln_q0 = 0;
  double ln_qas = 0;
  double rel_diff = 0;  // (ln_qas - ln_exact) / ln_q0
};

struct Comparison {
  std::vector<ComparisonRow> rows;
  std::size_t skipped = 0;  // sampled n with a zero count
};

/// Samples n = n_min, n_min + step, ... <= n_max. Requires
/// 2 <= n_min <= n_max <= table.n_max() (IndexError) and step >= 1 (DomainError).
Comparison build_comparison(const PartitionTable& table, std::size_t n_min, std::size_t n_max, std::size_t step,
                            const ConstantsBundle& constants);

struct CrossingReport {
  std::size_t bracket_low = 0;
  std::size_t bracket_high = 0;
  int sign_low = 0;
  int sign_high = 0;
};

/// First adjacent pair of rows where ln_qas - ln_exact changes sign.
/// DomainError for fewer than two rows.
std::optional<CrossingReport> find_crossing(const std::vector<ComparisonRow>& rows);

enum class Trend { Shrinking, Growing, Mixed };

const char* trend_name(Trend trend);

struct ErrorSummary {
  double max_abs_rel = 0;
  Trend trend = Trend::Mixed;
};

/// max |rel_diff| over all rows, and the trend of |rel_diff| across the
/// largest decade of n (rows with n >= n_last/10). The decade is cut into
/// kTrendBins bins of equal row count; the trend is Shrinking (Growing) when
/// the bin means of |rel_diff| strictly decrease (increase).
/// DomainError for fewer than three rows.
ErrorSummary summarize_error(const std::vector<ComparisonRow>& rows);

inline constexpr std::size_t kTrendBins = 4;

}  // namespace primeparts
