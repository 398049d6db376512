#pragma once

// The five CLI subcommands as library functions. Each returns the rendered
// document plus an exit status; the front end only parses flags and writes.

#include <cstdint>
#include <optional>
#include <string>

#include "kahler/domain.hpp"
#include "kahler/rational.hpp"

namespace kahler {

inline constexpr const char* kToolName = "kahlerlab";
#ifdef KAHLERLAB_VERSION
inline constexpr const char* kToolVersion = KAHLERLAB_VERSION;
#else
inline constexpr const char* kToolVersion = "0.0.0";
#endif

enum class OutputFormat { Json, Csv };

enum ExitCode : int { kExitOk = 0, kExitVerificationFailure = 1, kExitUsage = 2 };

struct RunConfig {
  std::optional<DomainSpec> domain;
  Rational mu = 1;
  int samples = 10;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  double fit_tol = 1e-7;
  OutputFormat format = OutputFormat::Json;
  long n_max = 1000;
  // Largest base dimension for which Delta k (cap (3,3) jets) is computed.
  int max_dim = 6;
  bool tensors = false;
  // verify-lemmas: skip the general (z, w) points.
  bool w_only = false;
  // Negative control: multiplies the computed Delta k before comparison.
  double debug_laplacian_scale = 1.0;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Throws std::invalid_argument if samples < 1, a tolerance is not positive,
/// mu is not positive, or max_dim < 1.
void validate(const RunConfig& config);

struct CommandResult {
  int exit_code = kExitOk;
  std::string document;  // JSON (LF-terminated) or CSV
  std::string summary;   // one or more human-readable lines
};

// All of these throw std::invalid_argument for configuration errors, which
// the front end maps to exit code 2.
CommandResult run_report(const RunConfig& config);
CommandResult run_verify_lemmas(const RunConfig& config);
CommandResult run_scan_a2(const RunConfig& config);
/// Without a domain, tabulates every classical domain of dimension <= max_dim.
CommandResult run_appendix_table(const RunConfig& config);
CommandResult run_case_analysis(const RunConfig& config);

}  // namespace kahler
