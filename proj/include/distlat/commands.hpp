#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distlat/crt.hpp"
#include "distlat/lattice.hpp"
#include "distlat/patterns.hpp"
#include "distlat/problem.hpp"

namespace distlat {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitMalformed = 2,
  kExitNoSolution = 3,
  kExitCapExceeded = 4,
};

struct RunOptions {
  std::optional<std::string> family;
  bool augment = false;
  bool representatives = false;
  std::size_t cap = kDefaultClosureCap;
  std::optional<PatternFlavor> flavor;
  std::optional<std::string> module;
  std::optional<std::size_t> degrees;
  std::uint64_t enumeration_limit = kDefaultEnumerationLimit;
  unsigned threads = 1;
};

struct RunOutcome {
  std::string document;  // sorted-key JSON, newline terminated
  int exit_code = kExitOk;
};

const std::vector<std::string>& command_names();

// Throws MalformedInput, ClosureCapExceeded or std::length_error (oracle
// limits); everything else that escapes is a bug.
RunOutcome run_command(std::string_view command, const RunOptions& options, const ProblemFile& p);

}  // namespace distlat
