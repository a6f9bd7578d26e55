#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lipi/script.hpp"

namespace lipi::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kValidation = 3 };

struct RunConfig {
  std::string command;
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path output;
  std::filesystem::path report;
  std::filesystem::path ref;
  std::filesystem::path hyp;
  std::optional<ScriptTag> script;
  std::optional<std::filesystem::path> tables;  // unset: $LIPI_TABLE_DIR, then embedded
  std::optional<std::filesystem::path> lexicon;
  bool strict = false;
  bool stage2_only = false;
  std::size_t jobs = 1;
};

/// Environment variable naming a table directory that replaces the embedded tables.
inline constexpr const char* kTableDirEnv = "LIPI_TABLE_DIR";

/// Entry point behind the `lipi` binary. `args[0]` is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes an already-parsed configuration.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace lipi::cli
