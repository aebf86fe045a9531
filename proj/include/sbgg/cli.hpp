#pragma once

#include "sbgg/weights.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sbgg::cli {

enum class Subcommand { analyze, relative, images, complex, oracle, check, render };
enum class Format { ascii, dot, json };

struct RunConfig {
  Weight mu{std::vector<int>{1, 0}};
  int k = 1;
  Subcommand subcommand = Subcommand::analyze;
  Format format = Format::ascii;
  std::optional<std::string> out; // standard output when empty
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid_input = 1;
inline constexpr int exit_invariant = 2;

/// Runs one pipeline stage and writes its rendering to `out` (or the file in
/// config.out). Diagnostics go to `err`. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and calls run().
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sbgg::cli
