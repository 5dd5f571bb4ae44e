// Command-line front end: argument parsing into a RunConfig, and the
// dispatcher that prints classifications, constructions and reports.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hvec/construct.hpp"
#include "hvec/invsys.hpp"

namespace hvec::cli {

inline constexpr const char* kFormatVersion = "1";

enum class ExitCode : int { Ok = 0, Mismatch = 1, InvalidInput = 2 };

enum class Command { Check, Construct, Verify, Sweep };
enum class OutputFormat { Plain, Json, Csv };
enum class Family { ThmE, ThmR };

struct RunConfig {
  Command command = Command::Check;
  std::string vector_literal;          // check
  Family family = Family::ThmE;        // construct / verify / sweep
  std::vector<long> e_values;
  std::vector<long> d_values;
  std::vector<Parity> parities{Parity::Odd, Parity::Even};
  long a = 0;
  std::uint64_t field = 32003;
  std::vector<std::uint64_t> chars{0, 101, 1009, 32003};
  std::uint64_t seed = 1;
  std::size_t trials = 5;
  bool parallel = false;
  bool timings = false;
  OutputFormat format = OutputFormat::Plain;
  std::optional<std::string> out_path;
  std::string command_line;
};

/// Thrown for malformed or out-of-range arguments; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Carries help text requested with --help.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "6", "6..10" or "6,8,10".
std::vector<long> parse_int_list(const std::string& text);

/// Parses argv (without the program name) and validates it against the
/// chosen command. Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes a validated config, writing the report to `out` (or the --out
/// file). Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, with diagnostics on `err`.
int run_command_line(const std::vector<std::string>& args, std::ostream& out,
                     std::ostream& err);

nlohmann::json hvector_json(const HVector& h);
nlohmann::json report_json(const VerificationReport& report, bool timings);

}  // namespace hvec::cli
