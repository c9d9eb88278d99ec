#include "shg/minimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "shg/errors.hpp"

namespace shg {

void SolverConfig::validate() const {
  if (!(tol_residual > 0.0)) throw InvalidConfiguration("tol_residual must be positive");
  if (max_iter < 1) throw InvalidConfiguration("max_iter must be at least 1");
  if (!(step_size > 0.0)) throw InvalidConfiguration("step_size must be positive");
  if (!(max_step > 0.0)) throw InvalidConfiguration("max_step must be positive");
}

double el_residual(const PulsePair& pair, double kappa, const Params& params) {
  const double norm2 = quadrature(density(pair));
  if (norm2 == 0.0) return 0.0;
  const RealField fxx = second_derivative(pair.f);
  const RealField gxx = second_derivative(pair.g);
  double r1 = 0.0;
  double r2 = 0.0;
  for (std::size_t j = 0; j < fxx.size(); ++j) {
    const double f = pair.f[j];
    const double g = pair.g[j];
    const double e1 = -fxx[j] + params.alpha0 * f - kappa * f * g;
    const double e2 = -gxx[j] + params.beta0 * g - 0.5 * kappa * f * f;
    r1 += e1 * e1;
    r2 += e2 * e2;
  }
  const double h = pair.grid().spacing();
  return std::sqrt(h * (r1 + r2)) / std::sqrt(norm2);
}

double lagrange_multiplier(double m_lambda, double lambda) {
  if (!(lambda > 0.0)) {
    throw InvalidParameter("lambda must be positive, got " + std::to_string(lambda));
  }
  return 2.0 * m_lambda / (3.0 * lambda);
}

PulsePair rescale_to_solution(const GroundState& ground) { return ground.kappa * ground.pair; }

namespace {

// Adds 1e-3 max|f|^2 times a unit Gaussian to g, centered at the peak of |f|.
PulsePair bump_g(PulsePair pair) {
  const auto x = pair.grid().nodes();
  const double L = pair.grid().half_length();
  std::size_t peak = 0;
  for (std::size_t j = 0; j < pair.f.size(); ++j) {
    if (std::abs(pair.f[j]) > std::abs(pair.f[peak])) peak = j;
  }
  const double amp = 1e-3 * pair.f[peak] * pair.f[peak];
  const double x0 = x[peak];
  for (std::size_t j = 0; j < pair.g.size(); ++j) {
    const double d = std::remainder(x[j] - x0, 2.0 * L);
    pair.g[j] += amp * std::exp(-d * d);
  }
  return pair;
}

PulsePair onto_constraint(PulsePair pair, double lambda) {
  const double scale = std::cbrt(lambda / constraint(pair));
  return scale * std::move(pair);
}

PulsePair precondition(const PulsePair& grad, const Params& params, Preconditioner kind) {
  if (kind == Preconditioner::none) return grad;
  return PulsePair(apply_resolvent(grad.f, params.alpha0), apply_resolvent(grad.g, params.beta0));
}

}  // namespace

GroundState minimize(const Params& params, const Grid& grid, const SolverConfig& config) {
  params.validate();
  config.validate();

  PulsePair pair = make_initial_pair(grid, config.init);
  if (constraint(pair) == 0.0) {
    pair = bump_g(std::move(pair));
    if (constraint(pair) == 0.0) {
      throw DegenerateConstraint("initial pair has zero constraint integral and cannot be perturbed");
    }
  }
  pair = onto_constraint(std::move(pair), params.lambda);

  double max_step = config.max_step;
  if (config.preconditioner == Preconditioner::none) {
    // Without the resolvent the largest Hessian eigenvalue grows like zeta_max^2.
    const double zmax = grid.wavenumbers()[grid.size() / 2];
    max_step /= zmax * zmax + std::max(params.alpha0, params.beta0);
  }
  double step = std::min(config.step_size, max_step);

  constexpr double armijo = 1e-4;
  // Near convergence J changes by O(residual^2), which drops below the
  // rounding level of J long before the residual reaches tolerance.
  constexpr double rounding_slack = 1e-14;

  std::vector<TraceEntry> trace;
  for (int it = 0;; ++it) {
    const double I = energy(pair, params);
    const double C = constraint(pair);
    const double t = std::cbrt(params.lambda / C);
    const double J = I * t * t;
    const double kappa = 2.0 * I / (3.0 * C);

    Variations var = gradients(pair, params);
    PulsePair grad = (t * t) * (var.energy - kappa * std::move(var.constraint));
    const double residual = el_residual(pair, kappa, params);
    trace.push_back({it, J, residual, it == 0 ? 0.0 : step});

    if (residual < config.tol_residual) break;
    if (it >= config.max_iter) {
      std::ostringstream os;
      os << "quotient descent did not converge in " << config.max_iter
         << " iterations (residual " << residual << ")";
      throw ConvergenceFailure(os.str(), std::move(trace));
    }

    const PulsePair direction = -1.0 * precondition(grad, params, config.preconditioner);
    const double slope = inner(grad, direction);

    PulsePair trial = pair;
    for (;;) {
      trial = pair + step * direction;
      const double Ct = constraint(trial);
      if (Ct != 0.0 && std::isfinite(Ct)) {
        const double tt = std::cbrt(params.lambda / Ct);
        const double Jt = energy(trial, params) * tt * tt;
        if (Jt <= J + armijo * step * slope + rounding_slack * std::abs(J)) break;
      }
      step *= 0.5;
      if (step < 1e-16) {
        throw ConvergenceFailure("line search failed to find a descent step", std::move(trace));
      }
    }
    pair = onto_constraint(std::move(trial), params.lambda);
    step = std::min(1.5 * step, max_step);
  }

  GroundState out{centered(pair), 0.0, 0.0, 0.0, 0, std::move(trace)};
  out.m_lambda = energy(out.pair, params);
  out.kappa = lagrange_multiplier(out.m_lambda, params.lambda);
  out.residual = el_residual(out.pair, out.kappa, params);
  out.iterations = out.trace.back().iteration;
  return out;
}

}  // namespace shg
