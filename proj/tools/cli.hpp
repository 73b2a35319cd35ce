#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "latcube/arith.hpp"

namespace latcube::cli {

enum class Command { count, sequence, list, invariants, verify, representations };
enum class Format { table, json, csv, bfile };

struct RunConfig {
  Command command = Command::count;
  i64 n = 1;
  Format format = Format::table;
  std::optional<std::string> cache_path;
  std::optional<int> threads;
  bool multiples = false;
  std::optional<i64> oracle_max;
  std::string cube_json;  // invariants
  i64 d = 1;              // representations
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;  // unexpected exception

/// Parses argv and runs one command. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace latcube::cli
