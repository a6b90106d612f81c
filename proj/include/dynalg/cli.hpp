#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "dynalg/json_io.hpp"

namespace dynalg {

struct CliResult {
  int exit_code = 0;  // 0 verified/found, 1 not verified/none, 2 computation error, 64 usage error
  Json output;
  std::string usage;     // usage or help text when exit_code is 64 (or help was requested)
  std::string out_path;  // --out target, if any
};

/// Runs one subcommand; `args` excludes the program name.
CliResult run_command(const std::vector<std::string>& args);

/// Runs every fixture under `dir` (sorted by file name), `jobs` at a time.
CliResult verify_paper(const std::filesystem::path& dir, int jobs);

/// Entry point used by the executable: prints canonical JSON to `out`
/// (and to the --out file when given) and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Canonical text form of a result.
std::string dump_canonical(const Json& j);

}  // namespace dynalg
