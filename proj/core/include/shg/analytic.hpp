#pragma once

#include <span>
#include <vector>

#include "shg/functionals.hpp"
#include "shg/minimizer.hpp"

namespace shg {

/// Closed-form pulse of the stationary system at alpha0 = beta0 = 1:
///   Phi = sign * 3/sqrt(2) sech^2(x/2),  Psi = sign * 3/2 sech^2(x/2).
/// sign = +1 solves the stationary system with kappa = 1, sign = -1 with
/// kappa = -1.
///
/// The whole-line profile is periodized by summing its images x + 2mL, which
/// is the representative of the pulse on the periodic grid. The image terms
/// are below 1e-16 of the peak once L exceeds about 20.
PulsePair explicit_pulse(const Grid& grid, int sign = +1);

struct DecayFit {
  double rate = 0.0;       ///< fitted decay exponent (minus the slope)
  double intercept = 0.0;  ///< log-amplitude at |x| = 0 of the fitted line
  double x_lo = 0.0;
  double x_hi = 0.0;
  double r_squared = 0.0;
  int samples = 0;
};

/// Least-squares fit of log|u| - power * log|x| against |x| over nodes with
/// x_lo <= |x| <= x_hi and |u| above 1e-12. power = 0 is the plain
/// exponential fit. Throws FitWindowError when fewer than three nodes
/// qualify or the window leaves the grid.
DecayFit fit_decay_rate(const RealField& field, double x_lo, double x_hi,
                        double algebraic_power = 0.0);

/// Default tail window |x| in [0.4 L, 0.75 L].
DecayFit fit_decay_rate(const RealField& field);

/// Tail exponent of phi: sqrt(alpha0).
double expected_phi_decay(const Params& params);

/// Tail exponent of psi: min(sqrt(beta0), 2 sqrt(alpha0)). At equality the
/// tail carries an extra algebraic factor |x|.
double expected_psi_decay(const Params& params);

struct ScalingReport {
  std::vector<double> lambdas;
  std::vector<double> m_lambda;
  std::vector<double> kappa;
  std::vector<double> normalized;  ///< m(lambda) * lambda^{-2/3}
  double max_relative_deviation = 0.0;

  /// m(lambda_i) / m(lambda_j).
  double ratio(std::size_t i, std::size_t j) const { return m_lambda.at(i) / m_lambda.at(j); }
};

/// Runs minimize for each lambda (overriding params.lambda) and reports the
/// spread of m(lambda) lambda^{-2/3} around its mean. Needs at least two
/// values; solver failures propagate.
ScalingReport verify_scaling(const Params& params, const Grid& grid,
                             std::span<const double> lambdas,
                             const SolverConfig& config = {});

}  // namespace shg
