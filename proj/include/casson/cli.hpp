#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace casson::cli {

enum class OutputFormat { Text, Machine };

struct CliConfig {
  std::string command;
  std::string input_path; ///< "-" reads standard input
  OutputFormat output_format = OutputFormat::Text;
  bool sign_convention_opt_in = false;
  std::optional<std::uint64_t> seed;
  std::string output_path; ///< stabilize only; empty writes to stdout

  // poly
  int g = 0;
  int h = 0;
  std::string group = "U";
  int n = 1;

  // multiindex
  std::string I;
  std::string J;
};

enum ExitStatus : int {
  kOk = 0,
  kInputError = 1,
  kWrongMode = 2,
  kCrossCheckFailure = 3,
};

/// Parses argv. Returns nullopt after printing help or a usage error; the
/// exit status to use is stored in `status`.
std::optional<CliConfig> parse_args(int argc, const char* const* argv, int& status, std::ostream& out,
                                    std::ostream& err);

int run(const CliConfig& config, std::ostream& out, std::ostream& err, std::istream& in);

} // namespace casson::cli
