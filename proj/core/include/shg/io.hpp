#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shg/evolve.hpp"
#include "shg/functionals.hpp"
#include "shg/trace.hpp"

namespace shg::io {

enum class Format { csv, json };

Format parse_format(std::string_view name);
std::string extension(Format format);

/// Column-major numeric table. CSV files carry a single header line and
/// values printed with 17 significant digits; JSON files hold one array per
/// column, keyed by column name.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
  const std::vector<double>& column(std::string_view name) const;
};

void write_table(const std::filesystem::path& path, const Table& table, Format format);
Table read_table(const std::filesystem::path& path, Format format);

/// Profile table with columns x, phi, psi, rho.
Table profile_table(const PulsePair& pair);
void write_profile(const std::filesystem::path& path, const PulsePair& pair, Format format);

/// Rebuilds the grid from the x column (x_0 = -L, N rows) and returns the
/// stored pair. Throws InvalidInput when the abscissae are not a uniform grid.
PulsePair read_profile(const std::filesystem::path& path, Format format);

/// Trace table with columns iteration, objective, residual, step.
Table trace_table(const std::vector<TraceEntry>& trace);

/// Time-series table with columns t, Q, H, amp_drift_W, amp_drift_V,
/// phase_W, phase_V.
Table series_table(const std::vector<TimeSample>& series);

struct Summary {
  double m_lambda = 0.0;
  double kappa = 0.0;
  double residual = 0.0;
  long iterations = 0;
  double decay_rate_phi = 0.0;
  double decay_rate_psi = 0.0;
  std::uint64_t seed = 0;
  /// Command-specific additions written after the fixed keys.
  std::vector<std::pair<std::string, double>> extra;
};

void write_summary(const std::filesystem::path& path, const Summary& summary);
Summary read_summary(const std::filesystem::path& path);

/// Writes an arbitrary flat JSON object of numbers (reports).
void write_report(const std::filesystem::path& path,
                  const std::vector<std::pair<std::string, double>>& entries);

}  // namespace shg::io
