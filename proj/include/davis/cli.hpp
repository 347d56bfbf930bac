#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace davis::cli {

// Stable process exit codes.
inline constexpr int kExitSat = 10;      // SAT, Holds, Accepted
inline constexpr int kExitUnsat = 20;    // UNSAT, Refuted
inline constexpr int kExitUnknown = 30;  // Unknown, NotWithinBound
inline constexpr int kExitUsage = 1;     // usage or parse error

struct RunConfig {
  enum class Command { Sat, Prove, Dioph, Bench };

  Command command = Command::Sat;
  std::string engine = "dpll";  // dp | dpll | table
  std::string input_path;
  int max_level = 2;
  std::size_t clause_cap = 200000;
  std::uint64_t bound = 10;
  std::optional<std::vector<std::uint64_t>> input;  // dioph --input
  std::optional<std::uint64_t> enumerate;           // dioph --enumerate
  std::optional<std::uint64_t> z_max;               // dioph normal-form search
  std::string check;                                // dioph --check
  std::string family;                               // bench php | random
  int size = 0;                                     // bench argument
  bool trace = false;
  bool emit = false;
  std::uint64_t seed = 0;
};

// Runs one command line (without the program name). Output goes to `out`,
// diagnostics and traces to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace davis::cli
