#pragma once

// Command-line front end of adiabatic-lab.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adiabatic/error.hpp"

namespace adiabatic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitContract = 1;
inline constexpr int kExitCapacity = 2;
/// Numerical failures: AccuracyError, DegenerateGround, DiagnosticFailure.
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitUsage = 64;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::string family = "hamming_weight";
  /// JSON problem file; overrides family and n.
  std::string problem;
  std::vector<int> n_values;
  /// Marked string for the search family; empty means 0...0.
  std::string u;
  int grid = 101;
  /// Empty selects the preferred backend of the family.
  std::string backend;
  std::string schedule;
  std::vector<double> T_values;
  std::optional<double> c;
  std::vector<long> r_values;
  double delta = 1e-3;
  int trials = 0;
  std::uint64_t seed = 1;
  std::string formula;
  bool verify_all = false;
  std::string method = "reduced";
  std::string out;
  bool json = false;
};

nlohmann::json to_json(const RunConfig& config);

/// "8..24", "4,6,8" or "6".
std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

/// Throws UsageError on unknown subcommands, unknown flags or malformed values.
RunConfig parse_arguments(const std::vector<std::string>& args);

/// Runs one subcommand. The report goes to config.out when set, else to `out`;
/// the one-line summary goes to `out` when a file was written, else to `err`.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_arguments + execute with the exit-code mapping; args exclude argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace adiabatic::cli
