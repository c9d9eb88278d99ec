#pragma once

namespace shg {

/// Physical and reduced parameters of the SHG system.
///
/// alpha, beta, mu are the coefficients of the time-dependent system, sigma
/// the travelling-wave frequency, and alpha0 = alpha + sigma,
/// beta0 = beta + 2 mu sigma the coefficients of the stationary system.
/// lambda is the value prescribed for the constraint integral of f^2 g.
struct Params {
  double alpha = 1.0;
  double beta = 1.0;
  double mu = 1.0;
  double sigma = 0.0;
  double alpha0 = 1.0;
  double beta0 = 1.0;
  double lambda = 14.4;

  /// Builds from the stationary coefficients; alpha and beta are derived.
  static Params reduced(double alpha0, double beta0, double lambda, double mu = 1.0,
                        double sigma = 0.0);

  /// Builds from the coefficients of the evolution system; alpha0 and beta0
  /// are derived.
  static Params physical(double alpha, double beta, double mu, double sigma, double lambda);

  /// Throws InvalidParameter when a positivity or consistency condition fails.
  void validate() const;
};

}  // namespace shg
