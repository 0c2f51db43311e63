#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace primeparts::cli {

/// Runs one subcommand (exact, constants, asym, saddle, compare, plot).
/// `args` excludes the program name. Returns 0 on success, 1 on a usage,
/// validation or domain error, 2 on a numeric, I/O or internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primeparts::cli
