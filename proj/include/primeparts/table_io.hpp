#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "primeparts/analysis.hpp"
#include "primeparts/exact_counts.hpp"

namespace primeparts {

// Cache format v1:
//   # kind=<distinct|all> n_max=<N> format=v1
//   0 1
//   1 0
//   ...
// One "<n> <decimal count>" line per n = 0..N, LF line endings.

void write_table(std::ostream& out, const PartitionTable& table);

/// Parses format v1. ParseError (with 1-based line number) on any deviation;
/// ValidationError if `expected` is given and the header names another kind.
PartitionTable read_table(std::istream& in, std::optional<PartitionKind> expected = std::nullopt);

/// Writes through a temporary file and renames it into place, so a failed
/// write leaves no partial file. IoError on failure.
void save_table(const PartitionTable& table, const std::filesystem::path& path);
PartitionTable load_table(const std::filesystem::path& path, std::optional<PartitionKind> expected = std::nullopt);

/// Header "n,ln_exact,ln_q0,ln_qas,rel_diff", 12 significant digits.
void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows);

/// CSV to `csv_path` and, optionally, a gnuplot script reading that CSV that
/// draws the three comparison plots (low range, high range, relative
/// difference against 1/n). DomainError on empty rows, IoError on failure.
void emit_plot_data(const std::vector<ComparisonRow>& rows, const std::filesystem::path& csv_path,
                    const std::optional<std::filesystem::path>& gnuplot_script = std::nullopt);

/// Gnuplot commands for the three plots, reading `csv_name`.
std::string gnuplot_script(const std::string& csv_name);

/// Replaces `path` with `contents` via a temporary sibling and rename.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace primeparts
