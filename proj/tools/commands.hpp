#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shg/grid.hpp"
#include "shg/params.hpp"

namespace shg::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Everything a subcommand needs, as parsed from flags and config files.
struct RunConfig {
  // Parameters. Unset reduced coefficients are derived from the physical
  // ones (and vice versa); setting both requires alpha0 = alpha + sigma and
  // beta0 = beta + 2 mu sigma.
  std::optional<double> alpha0;
  std::optional<double> beta0;
  std::optional<double> alpha;
  std::optional<double> beta;
  double mu = 1.0;
  double sigma = 0.0;
  double lambda = 14.4;

  double half_length = 20.0;
  std::size_t n_points = 512;

  std::optional<double> tol;
  std::optional<int> max_iter;
  std::string init = "gaussian";
  std::string init_file;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir = "shg_out";
  std::string format = "csv";

  // solve
  double step_size = 0.1;
  double max_step = 0.4;
  std::string preconditioner = "helmholtz";

  // petviashvili
  double gamma = 2.0;
  double relaxation = 0.5;

  // evolve
  double dt = 1e-3;
  double t_end = 10.0;
  int record_every = 100;
  double noise = 0.0;
  bool order_check = false;

  // sweep
  std::vector<double> lambdas{1.0, 2.0, 14.4, 28.8};

  // validate
  std::vector<std::string> only;
  /// Set when --L / --N were given explicitly; validate keeps its per-check
  /// grids otherwise.
  bool length_given = false;
  bool points_given = false;

  /// Throws InvalidParameter on inconsistent or out-of-range values.
  Params params() const;
  Grid grid() const;
};

/// Subcommands return kOk or kFailure. Invalid configurations throw
/// (shg::InvalidParameter, InvalidConfiguration, InvalidInput); run() maps
/// those to kUsage. A solver that fails to converge still writes its trace.
int cmd_solve(const RunConfig& config, std::ostream& out);
int cmd_petviashvili(const RunConfig& config, std::ostream& out);
int cmd_evolve(const RunConfig& config, std::ostream& out);
int cmd_validate(const RunConfig& config, std::ostream& out);
int cmd_sweep(const RunConfig& config, std::ostream& out);

/// Parses arguments (argv[0] included) and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shg::cli
