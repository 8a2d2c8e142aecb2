#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qhilb::cli {

enum class Command { verify_identity, verify_class, series, power, decompose, h_table };
enum class Format { tsv, tree };
enum class SeriesKind { rhs, lhs, assembled };

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitBadInput = 2;

struct RunConfig {
  Command command = Command::verify_identity;
  std::vector<std::pair<int, int>> pairs;  ///< (alpha, beta) per verification
  std::vector<int> ms;                     ///< m = alpha + beta per class check
  bool coprime = false;
  SeriesKind kind = SeriesKind::rhs;
  char variable = 'q';      ///< 'q' or 'L' for `series --kind rhs`
  std::string series_text;  ///< input for power / decompose
  std::string exponent_text = "L";
  std::size_t order = 16;
  Format format = Format::tsv;
  std::optional<std::string> output_path;
};

struct RunResult {
  int status = kExitOk;
  std::string output;  ///< report text (stdout or the output file)
  std::string error;   ///< diagnostics for stderr
};

/// Either a config or a finished result (help text, usage error).
using ParseOutcome = std::variant<RunConfig, RunResult>;

ParseOutcome parse_args(std::vector<std::string> args);

/// Executes one configuration. Deterministic: equal configs give equal bytes.
RunResult run(const RunConfig& config);

}  // namespace qhilb::cli
