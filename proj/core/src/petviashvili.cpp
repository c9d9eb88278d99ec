#include "shg/petviashvili.hpp"

#include <cmath>
#include <sstream>

#include "shg/errors.hpp"

namespace shg {

void FixedPointConfig::validate() const {
  if (!(gamma > 1.0 && gamma < 3.0)) {
    std::ostringstream os;
    os << "stabilization exponent gamma must lie in (1, 3), got " << gamma;
    throw InvalidConfiguration(os.str());
  }
  if (!(tol > 0.0)) throw InvalidConfiguration("tol must be positive");
  if (max_iter < 1) throw InvalidConfiguration("max_iter must be at least 1");
  if (!(relaxation > 0.0 && relaxation <= 1.0)) {
    throw InvalidConfiguration("relaxation must lie in (0, 1]");
  }
}

double stabilization_factor(const PulsePair& pair, const Params& params) {
  const double c = constraint(pair);
  if (c == 0.0) {
    throw DegenerateConstraint("stabilization factor undefined: constraint integral is zero");
  }
  return energy(pair, params) / (1.5 * c);
}

FixedPointResult fixed_point_solve(const Params& params, const Grid& grid,
                                   const FixedPointConfig& config) {
  params.validate();
  config.validate();

  PulsePair pair = make_initial_pair(grid, config.init);
  if (constraint(pair) < 0.0) pair.g *= -1.0;

  std::vector<TraceEntry> trace;
  double S = 0.0;
  for (int it = 1;; ++it) {
    if (constraint(pair) == 0.0) {
      throw DegenerateConstraint("fixed-point iterate has zero constraint integral");
    }
    S = stabilization_factor(pair, params);
    if (!std::isfinite(S) || S <= 0.0) {
      throw ConvergenceFailure("stabilization factor left (0, inf)", std::move(trace));
    }

    RealField u = apply_resolvent(pair.f * pair.g, params.alpha0);
    RealField v = 0.5 * apply_resolvent(pair.f * pair.f, params.beta0);
    PulsePair mapped(std::move(u), std::move(v));
    mapped *= std::pow(S, config.gamma);

    PulsePair update = config.relaxation * (mapped - pair);
    const double change = std::sqrt(inner(update, update));
    pair += update;
    trace.push_back({it, S, change, config.relaxation});

    if (!std::isfinite(change)) {
      throw ConvergenceFailure("fixed-point iterate diverged", std::move(trace));
    }
    if (change < config.tol && std::abs(S - 1.0) < std::sqrt(config.tol)) break;
    if (it >= config.max_iter) {
      std::ostringstream os;
      os << "fixed-point iteration did not converge in " << config.max_iter
         << " iterations (|S - 1| = " << std::abs(S - 1.0) << ", update " << change << ")";
      throw ConvergenceFailure(os.str(), std::move(trace));
    }
  }

  FixedPointResult out{centered(pair), 0.0, 0, std::move(trace)};
  out.stabilization = stabilization_factor(out.pair, params);
  out.iterations = out.trace.back().iteration;
  return out;
}

}  // namespace shg
