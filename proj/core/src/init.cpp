#include "shg/init.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "shg/analytic.hpp"
#include "shg/errors.hpp"

namespace shg {

namespace {

PulsePair random_bump(const Grid& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  const double L = grid.half_length();
  const double c = uniform(-0.25 * L, 0.25 * L);
  const double width_f = uniform(1.0, 4.0);
  const double amp_f = uniform(0.5, 2.0);
  const double wobble_k = uniform(0.0, 2.0);
  const double wobble_phase = uniform(0.0, 2.0 * std::numbers::pi);
  const double amp_g = uniform(0.2, 2.0);
  const double offset_g = uniform(-1.0, 1.0);
  const double width_g = uniform(1.0, 4.0);

  // Periodic distance keeps the initial data smooth across x = +-L.
  auto wrap = [L](double d) { return std::remainder(d, 2.0 * L); };
  RealField f = sample(grid, [&](double x) {
    const double d = wrap(x - c);
    return amp_f * std::exp(-d * d / (width_f * width_f)) *
           (1.0 + 0.3 * std::cos(wobble_k * d + wobble_phase));
  });
  RealField g = sample(grid, [&](double x) {
    const double d = wrap(x - c - offset_g);
    return amp_g * std::exp(-d * d / (width_g * width_g));
  });
  return PulsePair(std::move(f), std::move(g));
}

}  // namespace

PulsePair make_initial_pair(const Grid& grid, const InitSpec& spec) {
  switch (spec.kind) {
    case InitKind::gaussian: {
      RealField f = sample(grid, [](double x) { return std::exp(-x * x / 4.0); });
      RealField g = f * f;
      return PulsePair(std::move(f), std::move(g));
    }
    case InitKind::explicit_pulse:
      return explicit_pulse(grid, +1);
    case InitKind::custom:
      if (!spec.custom) throw InvalidConfiguration("custom init requested without a field pair");
      require_same_grid(grid, spec.custom->grid());
      return *spec.custom;
    case InitKind::seeded_random:
      return random_bump(grid, spec.seed);
  }
  throw InvalidConfiguration("unknown init kind");
}

std::string to_string(InitKind kind) {
  switch (kind) {
    case InitKind::gaussian: return "gaussian";
    case InitKind::explicit_pulse: return "explicit";
    case InitKind::custom: return "custom";
    case InitKind::seeded_random: return "random";
  }
  return "unknown";
}

InitKind parse_init_kind(std::string_view name) {
  if (name == "gaussian") return InitKind::gaussian;
  if (name == "explicit") return InitKind::explicit_pulse;
  if (name == "custom") return InitKind::custom;
  if (name == "random" || name == "seeded-random") return InitKind::seeded_random;
  throw InvalidConfiguration("unknown init kind '" + std::string(name) + "'");
}

}  // namespace shg
