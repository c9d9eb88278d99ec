#pragma once

namespace shg {

/// One row of a solver convergence history.
///
/// For the quotient minimizer `objective` is the scale-invariant quotient and
/// `residual` the Euler-Lagrange residual. For the fixed-point solver
/// `objective` is the stabilization factor and `residual` the L2 norm of the
/// update.
struct TraceEntry {
  int iteration = 0;
  double objective = 0.0;
  double residual = 0.0;
  double step = 0.0;
};

}  // namespace shg
