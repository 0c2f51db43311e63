#include "primeparts/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "primeparts/asymptotics.hpp"
#include "primeparts/errors.hpp"

namespace primeparts {

Comparison build_comparison(const PartitionTable& table, std::size_t n_min, std::size_t n_max, std::size_t step,
                            const ConstantsBundle& constants) {
  if (step < 1) throw DomainError("build_comparison: step must be >= 1");
  if (n_min < 2 || n_min > n_max || n_max > table.n_max())
    throw IndexError("build_comparison: range [" + std::to_string(n_min) + ", " + std::to_string(n_max) +
                     "] not inside [2, " + std::to_string(table.n_max()) + "]");

  const bool fermi = table.kind() == PartitionKind::DistinctPrimes;
  Comparison out;
  out.rows.reserve((n_max - n_min) / step + 1);
  for (std::size_t n = n_min; n <= n_max; n += step) {
    if (sgn(table[n]) == 0) {
      ++out.skipped;
      continue;
    }
    const double x = static_cast<double>(n);
    ComparisonRow row;
    row.n = n;
    row.ln_exact = log_big(table[n]);
    row.ln_q0 = fermi ? ln_q0(x) : ln_p0(x);
    row.ln_qas = fermi ? ln_q_as(x, constants) : ln_p_as(x, constants);
    row.rel_diff = (row.ln_qas - row.ln_exact) / row.ln_q0;
    out.rows.push_back(row);
  }
  return out;
}

std::optional<CrossingReport> find_crossing(const std::vector<ComparisonRow>& rows) {
  if (rows.size() < 2) throw DomainError("find_crossing: needs at least two rows");
  auto sign = [](const ComparisonRow& r) {
    const double d = r.ln_qas - r.ln_exact;
    return (d > 0) - (d < 0);
  };
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const int a = sign(rows[i]);
    const int b = sign(rows[i + 1]);
    if (a != 0 && b != 0 && a != b) return CrossingReport{rows[i].n, rows[i + 1].n, a, b};
  }
  return std::nullopt;
}

const char* trend_name(Trend trend) {
  switch (trend) {
    case Trend::Shrinking:
      return "shrinking";
    case Trend::Growing:
      return "growing";
    default:
      return "mixed";
  }
}

ErrorSummary summarize_error(const std::vector<ComparisonRow>& rows) {
  if (rows.size() < 3) throw DomainError("summarize_error: needs at least three rows");

  ErrorSummary out;
  for (const auto& r : rows) out.max_abs_rel = std::max(out.max_abs_rel, std::fabs(r.rel_diff));

  const std::size_t threshold = rows.back().n / 10;
  auto first = std::find_if(rows.begin(), rows.end(), [&](const ComparisonRow& r) { return r.n >= threshold; });
  const std::size_t count = static_cast<std::size_t>(rows.end() - first);
  const std::size_t bins = std::min(kTrendBins, count);
  if (bins < 2) return out;

  std::vector<double> means(bins, 0.0);
  for (std::size_t b = 0; b < bins; ++b) {
    const std::size_t lo = b * count / bins;
    const std::size_t hi = (b + 1) * count / bins;
    for (std::size_t i = lo; i < hi; ++i) means[b] += std::fabs(first[i].rel_diff);
    means[b] /= static_cast<double>(hi - lo);
  }
  bool shrinking = true;
  bool growing = true;
  for (std::size_t b = 1; b < bins; ++b) {
    shrinking = shrinking && means[b] < means[b - 1];
    growing = growing && means[b] > means[b - 1];
  }
  out.trend = shrinking ? Trend::Shrinking : growing ? Trend::Growing : Trend::Mixed;
  return out;
}

}  // namespace primeparts
