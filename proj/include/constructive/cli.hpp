#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "constructive/error.hpp"
#include "constructive/rational.hpp"

namespace constructive::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;     // parse or config error
inline constexpr int kExitDomain = 3;    // OutOfInterval, InvalidWitness, NoInitialGap, ...
inline constexpr int kExitResource = 4;  // Unknown-only under --strict, exhausted budgets

struct RunConfig {
  std::uint64_t index_bound = 64;
  std::uint64_t budget = 1000;
  std::uint64_t fuel = 1000;
  Rational a{0};
  Rational b{1};
  std::optional<std::string> output_path;

  /// Throws Error(Config) unless a < b and all bounds are >= 1.
  void validate() const;
};

/// Reads the JSON keys index_bound, budget, fuel, a, b over `base`.
/// Rationals may be given as "p/q" strings or integers. Throws Error(Config).
RunConfig load_config(const std::string& json_text, RunConfig base = {});

int exit_code_for(ErrorKind kind);

/// Runs one command line (without the program name). Output is deterministic.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace constructive::cli
