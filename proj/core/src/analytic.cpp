#include "shg/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "shg/errors.hpp"

namespace shg {

namespace {

double sech2_half(double x) {
  const double s = 1.0 / std::cosh(0.5 * x);
  return s * s;
}

}  // namespace

PulsePair explicit_pulse(const Grid& grid, int sign) {
  const double s = sign < 0 ? -1.0 : 1.0;
  const double period = 2.0 * grid.half_length();
  // Images beyond |x| ~ 80 are below 1e-34 of the peak.
  const int images = static_cast<int>(std::ceil(80.0 / period)) + 1;
  RealField psi = sample(grid, [&](double x) {
    double sum = 0.0;
    for (int m = -images; m <= images; ++m) sum += sech2_half(x + m * period);
    return s * 1.5 * sum;
  });
  RealField phi = std::numbers::sqrt2 * psi;
  return PulsePair(std::move(phi), std::move(psi));
}

DecayFit fit_decay_rate(const RealField& field, double x_lo, double x_hi, double algebraic_power) {
  const double L = field.grid().half_length();
  if (!(x_lo >= 0.0 && x_lo < x_hi && x_hi <= L)) {
    std::ostringstream os;
    os << "decay-fit window [" << x_lo << ", " << x_hi << "] must lie inside [0, " << L << "]";
    throw FitWindowError(os.str());
  }
  constexpr double floor = 1e-12;
  const auto x = field.grid().nodes();
  std::vector<double> xs, ys;
  for (std::size_t j = 0; j < field.size(); ++j) {
    const double ax = std::abs(x[j]);
    const double au = std::abs(field[j]);
    if (ax < x_lo || ax > x_hi || !(au > floor)) continue;
    xs.push_back(ax);
    ys.push_back(std::log(au) - (algebraic_power != 0.0 ? algebraic_power * std::log(ax) : 0.0));
  }
  if (xs.size() < 3) {
    std::ostringstream os;
    os << "decay-fit window [" << x_lo << ", " << x_hi << "] holds " << xs.size()
       << " samples above " << floor;
    throw FitWindowError(os.str());
  }

  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw FitWindowError("decay-fit window spans a single abscissa");

  DecayFit fit;
  const double slope = sxy / sxx;
  fit.rate = -slope;
  fit.intercept = my - slope * mx;
  fit.x_lo = x_lo;
  fit.x_hi = x_hi;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  fit.samples = static_cast<int>(xs.size());
  return fit;
}

DecayFit fit_decay_rate(const RealField& field) {
  const double L = field.grid().half_length();
  return fit_decay_rate(field, 0.4 * L, 0.75 * L);
}

double expected_phi_decay(const Params& params) { return std::sqrt(params.alpha0); }

double expected_psi_decay(const Params& params) {
  return std::min(std::sqrt(params.beta0), 2.0 * std::sqrt(params.alpha0));
}

ScalingReport verify_scaling(const Params& params, const Grid& grid, std::span<const double> lambdas,
                             const SolverConfig& config) {
  if (lambdas.size() < 2) throw InvalidParameter("scaling check needs at least two lambda values");
  ScalingReport report;
  for (double lambda : lambdas) {
    Params p = params;
    p.lambda = lambda;
    const GroundState ground = minimize(p, grid, config);
    report.lambdas.push_back(lambda);
    report.m_lambda.push_back(ground.m_lambda);
    report.kappa.push_back(ground.kappa);
    report.normalized.push_back(ground.m_lambda * std::pow(lambda, -2.0 / 3.0));
  }
  double mean = 0.0;
  for (double v : report.normalized) mean += v;
  mean /= static_cast<double>(report.normalized.size());
  for (double v : report.normalized) {
    report.max_relative_deviation = std::max(report.max_relative_deviation, std::abs(v - mean) / mean);
  }
  return report;
}

}  // namespace shg
