#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace shg::validation {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Options {
  /// Override the per-check grid. Unset fields keep each check's default
  /// (L = 20, N = 512; L = 30, N = 1024 for the decay check).
  std::optional<double> half_length;
  std::optional<std::size_t> n_points;
  /// Check names to run; empty runs all of them.
  std::vector<std::string> only;
  /// Scratch space for the determinism check.
  std::filesystem::path scratch = std::filesystem::temp_directory_path() / "shg_validate";
};

/// Names accepted by Options::only, in execution order.
const std::vector<std::string>& check_names();

/// Runs the acceptance checks. Each check reports pass/fail with the measured
/// quantities; solver exceptions count as failures. When progress is given,
/// one line per check is printed as soon as it finishes.
std::vector<CheckResult> run_checks(const Options& options, std::ostream* progress = nullptr);

std::string format_line(const CheckResult& result);

}  // namespace shg::validation
