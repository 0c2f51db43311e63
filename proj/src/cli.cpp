#include "primeparts/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <new>
#include <optional>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>

#include "primeparts/analysis.hpp"
#include "primeparts/asymptotics.hpp"
#include "primeparts/constants.hpp"
#include "primeparts/errors.hpp"
#include "primeparts/exact_counts.hpp"
#include "primeparts/saddle.hpp"
#include "primeparts/table_io.hpp"

namespace primeparts::cli {

namespace {

namespace fs = std::filesystem;

struct TableOptions {
  std::string kind = "distinct";
  std::size_t n_max = 0;
  std::string cache;
  bool verbose = false;
};

std::string format_double(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

// Output files must be creatable before any work starts, so validation
// failures never leave partial results behind.
void require_writable(const std::string& path) {
  const fs::path p(path);
  if (fs::exists(p)) {
    if (fs::is_directory(p) || ::access(p.c_str(), W_OK) != 0)
      throw ValidationError("cannot write '" + path + "'");
    return;
  }
  fs::path dir = p.parent_path();
  if (dir.empty()) dir = ".";
  if (!fs::is_directory(dir) || ::access(dir.c_str(), W_OK) != 0)
    throw ValidationError("cannot create '" + path + "': directory missing or not writable");
}

PartitionTable obtain_table(const TableOptions& opt, std::ostream& err) {
  const PartitionKind kind = parse_kind(opt.kind);

  if (!opt.cache.empty() && fs::exists(opt.cache)) {
    PartitionTable cached = load_table(opt.cache, kind);
    if (cached.n_max() >= opt.n_max) {
      std::vector<BigInt> prefix(cached.counts().begin(), cached.counts().begin() + opt.n_max + 1);
      return PartitionTable(kind, std::move(prefix));
    }
  }

  ProgressFn progress;
  std::size_t next_report = 1;
  if (opt.verbose) {
    progress = [&err, &next_report](std::size_t done, std::size_t total) {
      if (done * 10 >= next_report * total) {
        err << "  " << next_report * 10 << "% of " << total << " primes\n";
        ++next_report;
      }
    };
  }
  PartitionTable table =
      kind == PartitionKind::DistinctPrimes ? count_distinct(opt.n_max, progress) : count_unrestricted(opt.n_max, progress);
  if (!opt.cache.empty()) save_table(table, opt.cache);
  return table;
}

void add_table_options(CLI::App* cmd, TableOptions& opt, bool nmax_required) {
  auto* nmax = cmd->add_option("--nmax", opt.n_max, "Largest n of the exact table");
  if (nmax_required) nmax->required();
  cmd->add_option("--kind", opt.kind, "distinct (Q) or all (P)")->check(CLI::IsMember({"distinct", "all"}));
  cmd->add_option("--cache", opt.cache, "Table cache file (format v1), read if present and written otherwise");
  cmd->add_flag("--verbose", opt.verbose, "Report progress of the table build");
}

void print_constants(const ConstantsBundle& c, const std::string& format, std::ostream& out) {
  const std::pair<const char*, double> fields[] = {
      {"gamma", c.gamma}, {"alt_log_series", c.alt_log_series}, {"log_series", c.log_series},
      {"F1", c.F1},       {"F2", c.F2},                         {"f1", c.f1},
      {"f2", c.f2},       {"bF", c.bF},                         {"bB", c.bB},
  };
  if (format == "csv") {
    out << "name,value,error_bound\n";
    for (const auto& [name, value] : fields) out << name << ',' << format_double(value, 15) << ',' << format_double(c.err_bound, 3) << '\n';
    return;
  }
  for (const auto& [name, value] : fields)
    out << std::left << std::setw(16) << name << std::right << std::setw(20) << format_double(value, 15) << "  +- "
        << format_double(c.err_bound, 3) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and asymptotic counts of partitions into primes", "primeparts"};
  app.require_subcommand(1);

  TableOptions exact_opt;
  std::string exact_out;
  auto* exact = app.add_subcommand("exact", "Exact partition counts for n = 0..nmax");
  add_table_options(exact, exact_opt, true);
  exact->add_option("--out", exact_out, "Also write the table in cache format v1");

  std::string const_format = "text";
  double series_tol = 1e-12;
  auto* constants = app.add_subcommand("constants", "Constants of the asymptotic formulas");
  constants->add_option("--format", const_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  constants->add_option("--tol", series_tol, "Series tolerance");

  std::uint64_t asym_n = 0;
  std::string asym_form = "qas";
  auto* asym = app.add_subcommand("asym", "Evaluate Q_0, Q_as or P_as at n");
  asym->add_option("--n", asym_n, "Argument n >= 2")->required();
  asym->add_option("--form", asym_form, "q0, qas or pas")->check(CLI::IsMember({"q0", "qas", "pas"}));

  std::uint64_t saddle_n = 0;
  double saddle_tol = 1e-10;
  auto* saddle = app.add_subcommand("saddle", "Solve the exact saddle-point equation at E = n");
  saddle->add_option("--n", saddle_n, "Energy E = n >= 2")->required();
  saddle->add_option("--tol", saddle_tol, "Residual tolerance in (0, 1e-6]");

  TableOptions cmp_opt;
  std::size_t cmp_nmin = 2;
  std::size_t cmp_step = 1;
  std::string cmp_csv;
  auto* compare = app.add_subcommand("compare", "Exact vs. asymptotic comparison rows");
  add_table_options(compare, cmp_opt, true);
  compare->add_option("--nmin", cmp_nmin, "First sampled n (>= 2)");
  compare->add_option("--step", cmp_step, "Sampling step (>= 1)");
  compare->add_option("--csv", cmp_csv, "Write rows here and print a summary; rows go to stdout otherwise");

  TableOptions plot_opt;
  int figure = 1;
  std::optional<std::size_t> plot_nmin;
  std::optional<std::size_t> plot_step;
  std::string plot_csv;
  std::string plot_script;
  auto* plot = app.add_subcommand("plot", "Emit plot data (and a gnuplot script) for one figure range");
  add_table_options(plot, plot_opt, false);
  plot->add_option("--figure", figure, "1: n <= 2000, 2 and 3: 20000 <= n <= 100000")->check(CLI::Range(1, 3));
  plot->add_option("--nmin", plot_nmin, "Override the first sampled n");
  plot->add_option("--step", plot_step, "Override the sampling step");
  plot->add_option("--csv", plot_csv, "CSV output path")->required();
  plot->add_option("--script", plot_script, "Gnuplot script output path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code != 0) err << app.help();
    return code == 0 ? 0 : 1;
  }

  try {
    if (*exact) {
      if (!exact_out.empty()) require_writable(exact_out);
      if (!exact_opt.cache.empty()) require_writable(exact_opt.cache);
      const PartitionTable table = obtain_table(exact_opt, err);
      std::string line;
      for (std::size_t n = 0; n <= table.n_max(); ++n) {
        if (n) line += ' ';
        line += table[n].get_str(10);
      }
      out << line << '\n';
      if (!exact_out.empty()) save_table(table, exact_out);
    } else if (*constants) {
      print_constants(constants_bundle(series_tol), const_format, out);
    } else if (*asym) {
      double ln_value = 0;
      if (asym_form == "q0") {
        ln_value = ln_q0(static_cast<double>(asym_n));
      } else {
        const ConstantsBundle c = constants_bundle();
        const double n = static_cast<double>(asym_n);
        ln_value = asym_form == "qas" ? ln_q_as(n, c) : ln_p_as(n, c);
      }
      const auto value = value_of(ln_value);
      out << "form   " << asym_form << '\n'
          << "n      " << asym_n << '\n'
          << "ln     " << format_double(ln_value) << '\n'
          << "value  " << (value ? format_double(*value) : std::string("OVERFLOW")) << '\n';
    } else if (*saddle) {
      const SaddleSolution s = solve_saddle(static_cast<double>(saddle_n), saddle_tol);
      out << "E           " << format_double(s.energy) << '\n'
          << "beta0       " << format_double(s.beta0, 15) << '\n'
          << "S           " << format_double(s.entropy) << '\n'
          << "S2          " << format_double(s.s2) << '\n'
          << "ln_rho      " << format_double(s.ln_rho) << '\n'
          << "residual    " << format_double(s.residual, 3) << '\n'
          << "iterations  " << s.iterations << '\n';
    } else if (*compare || *plot) {
      const bool is_plot = static_cast<bool>(*plot);
      TableOptions& opt = is_plot ? plot_opt : cmp_opt;
      std::size_t nmin = cmp_nmin;
      std::size_t step = cmp_step;
      if (is_plot) {
        const bool low = figure == 1;
        if (plot->count("--nmax") == 0) opt.n_max = low ? 2000 : 100000;
        nmin = plot_nmin.value_or(low ? 2 : 20000);
        step = plot_step.value_or(low ? 1 : 10);
        require_writable(plot_csv);
        if (!plot_script.empty()) require_writable(plot_script);
      } else if (!cmp_csv.empty()) {
        require_writable(cmp_csv);
      }
      if (!opt.cache.empty()) require_writable(opt.cache);
      if (step < 1) throw DomainError("--step must be >= 1");
      if (nmin < 2 || nmin > opt.n_max) throw DomainError("--nmin must satisfy 2 <= nmin <= nmax");

      const PartitionTable table = obtain_table(opt, err);
      const Comparison cmp = build_comparison(table, nmin, opt.n_max, step, constants_bundle());

      if (is_plot) {
        emit_plot_data(cmp.rows, plot_csv, plot_script.empty() ? std::nullopt : std::optional<fs::path>(plot_script));
        out << "rows " << cmp.rows.size() << " skipped " << cmp.skipped << '\n';
      } else if (cmp_csv.empty()) {
        write_comparison_csv(out, cmp.rows);
      } else {
        std::ostringstream csv;
        write_comparison_csv(csv, cmp.rows);
        write_file_atomically(cmp_csv, csv.str());
        out << "rows      " << cmp.rows.size() << '\n' << "skipped   " << cmp.skipped << '\n';
        if (cmp.rows.size() >= 2) {
          if (const auto crossing = find_crossing(cmp.rows))
            out << "crossing  [" << crossing->bracket_low << ", " << crossing->bracket_high << "]\n";
          else
            out << "crossing  none\n";
        }
        if (cmp.rows.size() >= 3) {
          const ErrorSummary summary = summarize_error(cmp.rows);
          out << "max_rel   " << format_double(summary.max_abs_rel, 6) << '\n'
              << "trend     " << trend_name(summary.trend) << '\n';
        }
      }
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const IndexError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    err << "error: malformed table cache, " << e.what() << '\n';
    return 1;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::bad_alloc&) {
    err << "fatal: out of memory\n";
    return 2;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace primeparts::cli
