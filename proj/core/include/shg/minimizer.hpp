#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shg/functionals.hpp"
#include "shg/init.hpp"
#include "shg/trace.hpp"

namespace shg {

enum class Preconditioner { none, inverse_helmholtz };

struct SolverConfig {
  double tol_residual = 1e-10;
  int max_iter = 20000;
  /// First trial step of the backtracking line search.
  double step_size = 0.1;
  /// Ceiling for accepted steps in the preconditioned metric. The quotient
  /// Hessian has an eigenvalue of 4 along (phi, -2 psi), so steps at or above
  /// 0.5 stop damping that mode once J differences fall below rounding.
  double max_step = 0.4;
  Preconditioner preconditioner = Preconditioner::inverse_helmholtz;
  InitSpec init;

  void validate() const;
};

struct GroundState {
  PulsePair pair;  ///< minimizer with C = lambda, centered at x = 0
  double m_lambda = 0.0;
  double kappa = 0.0;
  double residual = 0.0;
  int iterations = 0;
  std::vector<TraceEntry> trace;
};

/// Minimizes I subject to int f^2 g = lambda by preconditioned descent on the
/// scale-invariant quotient, rescaling every iterate onto the constraint.
///
/// Throws ConvergenceFailure (carrying the trace) after max_iter iterations,
/// DegenerateConstraint when the initial constraint integral is zero and a
/// bump on g does not fix it.
GroundState minimize(const Params& params, const Grid& grid, const SolverConfig& config = {});

/// Normalized residual of -phi'' + alpha0 phi = kappa phi psi and
/// -psi'' + beta0 psi = (kappa/2) phi^2: the root-sum-square of the two L2
/// residual norms divided by sqrt(int rho). The zero pair gives 0.
double el_residual(const PulsePair& pair, double kappa, const Params& params);

/// kappa = 2 m_lambda / (3 lambda). Throws InvalidParameter for lambda <= 0.
double lagrange_multiplier(double m_lambda, double lambda);

/// (kappa phi, kappa psi), a solution of the stationary system.
PulsePair rescale_to_solution(const GroundState& ground);

}  // namespace shg
