#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "shg/functionals.hpp"

namespace shg {

enum class InitKind {
  gaussian,        ///< f = exp(-x^2 / 4), g = f^2
  explicit_pulse,  ///< the closed-form sech^2 pair
  custom,          ///< caller-supplied pair
  seeded_random,   ///< randomly shaped single bump, reproducible from a seed
};

struct InitSpec {
  InitKind kind = InitKind::gaussian;
  std::optional<PulsePair> custom;
  std::uint64_t seed = 0;
};

/// Throws InvalidConfiguration for a custom init without a pair or on the
/// wrong grid.
PulsePair make_initial_pair(const Grid& grid, const InitSpec& spec);

std::string to_string(InitKind kind);

/// Accepts gaussian, explicit, custom, random (and seeded-random).
InitKind parse_init_kind(std::string_view name);

}  // namespace shg
