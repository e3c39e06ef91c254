#pragma once

// Command-line front end.  `run` is the whole program minus process I/O so
// tests can drive it directly.
//
// Exit codes: 0 computation completed (whatever the verdict), 2 usage error,
// 3 resource cap exceeded, 1 anything else.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gscope/caps.hpp"

namespace gscope::cli {

enum class Format { Json, Pretty, Tsv };

struct RunConfig {
  std::string command;
  std::string subcommand;
  std::string group_input;
  std::string subgroup_gens;
  unsigned m = 3;
  bool perm = false;
  std::string which;
  bool force_full = false;
  std::optional<unsigned> suzuki_m;
  std::optional<std::uint64_t> prime;
  std::int64_t q0 = 0;
  std::optional<std::uint64_t> q;
  Format format = Format::Json;
  bool timings = true;
  Caps caps;
};

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

constexpr const char* kCapsEnvVar = "GELFAND_SCOPE_CAPS";

/// `args` excludes the program name.
RunResult run(const std::vector<std::string>& args);

/// Executes an already-parsed configuration.
RunResult run(const RunConfig& config);

}  // namespace gscope::cli
