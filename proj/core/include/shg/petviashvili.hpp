#pragma once

#include <vector>

#include "shg/functionals.hpp"
#include "shg/init.hpp"
#include "shg/trace.hpp"

namespace shg {

struct FixedPointConfig {
  /// Stabilization exponent; must lie in (1, 3).
  double gamma = 2.0;
  double tol = 1e-12;
  int max_iter = 5000;
  /// Weight of the new iterate, next = (1 - w) current + w S^gamma T(current).
  /// w = 1 is the unrelaxed scheme. The linearized map has an eigenvalue -1
  /// along (phi, -2 psi) that the stabilization factor does not see, so the
  /// unrelaxed iteration oscillates forever in that mode; w = 1/2 removes it.
  double relaxation = 0.5;
  InitSpec init;

  void validate() const;
};

struct FixedPointResult {
  PulsePair pair;  ///< solution of the stationary system, centered at x = 0
  double stabilization = 0.0;
  int iterations = 0;
  std::vector<TraceEntry> trace;  ///< (iteration, S, ||update||)
};

/// S = I / ((3/2) C). Equals 1 at every solution of the stationary system.
/// Throws DegenerateConstraint on C = 0.
double stabilization_factor(const PulsePair& pair, const Params& params);

/// Power-stabilized fixed-point iteration for
///   phi = K_{alpha0} * (phi psi),  psi = (1/2) K_{beta0} * phi^2.
///
/// Stops once the L2 norm of the update is below tol and |S - 1| is below
/// sqrt(tol). Throws ConvergenceFailure with the trace when S becomes
/// non-finite or max_iter is exhausted.
FixedPointResult fixed_point_solve(const Params& params, const Grid& grid,
                                   const FixedPointConfig& config = {});

}  // namespace shg
