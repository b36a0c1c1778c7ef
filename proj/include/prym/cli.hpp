#pragma once

// Command dispatch shared by the prym executable and the tests.

#include <cstdint>
#include <optional>
#include <string>

#include "prym/report.hpp"

namespace prym {

inline constexpr int kExitPass = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitFailed = 2;
inline constexpr int kExitRejected = 3;
inline constexpr int kExitResource = 4;

struct JobSpec {
  /// validate, split, verify, bruin, disc-check or selftest.
  std::string command;
  std::optional<std::string> input_path;
  /// Curve or report document given inline instead of a path.
  std::optional<std::string> input_text;
  std::optional<std::uint32_t> p;
  std::optional<std::uint64_t> seed;
  int depth = 3;
  std::optional<std::uint64_t> cap_evals;
  bool skip_validation = false;
  /// json or text.
  std::string format = "json";
  std::optional<std::string> out_path;
};

inline constexpr std::uint64_t kDefaultSeed = 1;

struct RunResult {
  int exit_code = kExitInternal;
  Json report;
  std::string summary;
};

/// Never throws for bad input; every outcome maps to an exit code.
RunResult run(const JobSpec& job);

/// Writes report (format json) or summary (format text) to out_path via a
/// temporary file and rename, or to stdout when no path is given.
void emit(const JobSpec& job, const RunResult& result);

/// Exit code for an error kind: input problems 3, caps 4, the rest 1.
int exit_code_for(ErrorKind kind);

}  // namespace prym
