#include "primeparts/table_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>

#include <unistd.h>

#include "primeparts/errors.hpp"

namespace primeparts {

void write_table(std::ostream& out, const PartitionTable& table) {
  out << "# kind=" << kind_name(table.kind()) << " n_max=" << table.n_max() << " format=v1\n";
  for (std::size_t n = 0; n <= table.n_max(); ++n) out << n << ' ' << table[n].get_str(10) << '\n';
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

std::size_t parse_index(std::string_view s, std::size_t line, const char* what) {
  std::size_t value = 0;
  if (!all_digits(s)) throw ParseError(line, std::string("malformed ") + what + " '" + std::string(s) + "'");
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(line, std::string(what) + " out of range");
  return value;
}

}  // namespace

PartitionTable read_table(std::istream& in, std::optional<PartitionKind> expected) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");

  constexpr std::string_view kKind = "# kind=";
  constexpr std::string_view kNmax = " n_max=";
  constexpr std::string_view kFormat = " format=v1";
  std::string_view header = line;
  if (!header.starts_with(kKind) || !header.ends_with(kFormat))
    throw ParseError(1, "header must read '# kind=<distinct|all> n_max=<N> format=v1'");
  header.remove_prefix(kKind.size());
  header.remove_suffix(kFormat.size());
  const auto split = header.find(kNmax);
  if (split == std::string_view::npos) throw ParseError(1, "header lacks n_max");

  PartitionKind kind;
  try {
    kind = parse_kind(header.substr(0, split));
  } catch (const DomainError& e) {
    throw ParseError(1, e.what());
  }
  const std::size_t n_max = parse_index(header.substr(split + kNmax.size()), 1, "n_max");
  if (expected && *expected != kind)
    throw ValidationError("cached table has kind '" + std::string(kind_name(kind)) + "', requested '" +
                          std::string(kind_name(*expected)) + "'");

  std::vector<BigInt> counts;
  counts.reserve(n_max + 1);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (counts.size() > n_max) throw ParseError(line_no, "more entries than n_max = " + std::to_string(n_max));
    std::string_view body = line;
    const auto space = body.find(' ');
    if (space == std::string_view::npos) throw ParseError(line_no, "expected '<n> <count>'");
    const std::size_t n = parse_index(body.substr(0, space), line_no, "index");
    if (n != counts.size())
      throw ParseError(line_no, "expected index " + std::to_string(counts.size()) + ", found " + std::to_string(n));
    const std::string_view digits = body.substr(space + 1);
    if (!all_digits(digits)) throw ParseError(line_no, "malformed count");
    counts.emplace_back(std::string(digits), 10);
  }
  if (counts.size() != n_max + 1)
    throw ParseError(line_no + 1, "file ends after " + std::to_string(counts.size()) + " of " +
                                      std::to_string(n_max + 1) + " entries");
  return PartitionTable(kind, std::move(counts));
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << contents;
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("write to '" + path.string() + "' failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot move output into '" + path.string() + "': " + ec.message());
  }
}

void save_table(const PartitionTable& table, const std::filesystem::path& path) {
  std::ostringstream out;
  write_table(out, table);
  write_file_atomically(path, out.str());
}

PartitionTable load_table(const std::filesystem::path& path, std::optional<PartitionKind> expected) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return read_table(in, expected);
}

void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
  out << "n,ln_exact,ln_q0,ln_qas,rel_diff\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu,%.12g,%.12g,%.12g,%.12g\n", r.n, r.ln_exact, r.ln_q0, r.ln_qas, r.rel_diff);
    out << buf;
  }
}

std::string gnuplot_script(const std::string& csv_name) {
  std::ostringstream s;
  s << "set datafile separator ','\n"
    << "set terminal pngcairo size 900,600\n"
    << "data = '" << csv_name << "'\n\n"
    << "set xlabel 'n'\nset ylabel 'ln Q(n)'\nset key left top\n"
    << "set output 'low_range.png'\nset xrange [0:2000]\n"
    << "plot data every ::1 using 1:2 with points pt 7 ps 0.3 lc rgb 'red' title 'ln Q exact', \\\n"
    << "     data every ::1 using 1:3 with lines dt 2 lc rgb 'dark-green' title 'ln Q_0', \\\n"
    << "     data every ::1 using 1:4 with lines lc rgb 'blue' title 'ln Q_{as}'\n\n"
    << "set output 'high_range.png'\nset xrange [20000:100000]\nreplot\n\n"
    << "set output 'relative_difference.png'\nset autoscale x\n"
    << "set xlabel '1/n'\nset ylabel '(ln Q_{as} - ln Q)/ln Q_0'\n"
    << "plot data every ::1 using (1.0/$1):5 with lines lc rgb 'red' title 'relative difference'\n";
  return s.str();
}

void emit_plot_data(const std::vector<ComparisonRow>& rows, const std::filesystem::path& csv_path,
                    const std::optional<std::filesystem::path>& script_path) {
  if (rows.empty()) throw DomainError("emit_plot_data: no rows");
  std::ostringstream csv;
  write_comparison_csv(csv, rows);
  write_file_atomically(csv_path, csv.str());
  if (script_path) write_file_atomically(*script_path, gnuplot_script(csv_path.filename().string()));
}

}  // namespace primeparts
