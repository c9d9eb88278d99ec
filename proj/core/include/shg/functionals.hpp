#pragma once

#include "shg/grid.hpp"
#include "shg/params.hpp"

namespace shg {

/// Real field pair (f, g) sharing one grid.
struct PulsePair {
  RealField f;
  RealField g;

  PulsePair(RealField f_in, RealField g_in);
  explicit PulsePair(const Grid& grid);

  const Grid& grid() const noexcept { return f.grid(); }

  PulsePair& operator+=(const PulsePair& other);
  PulsePair& operator-=(const PulsePair& other);
  PulsePair& operator*=(double s) noexcept;
};

PulsePair operator+(PulsePair a, const PulsePair& b);
PulsePair operator-(PulsePair a, const PulsePair& b);
PulsePair operator*(double s, PulsePair a);

/// Sum of the component L2 inner products.
double inner(const PulsePair& a, const PulsePair& b);

/// Largest pointwise difference over both components.
double max_abs_difference(const PulsePair& a, const PulsePair& b);

/// I(f, g) = int (f')^2 + (g')^2 + alpha0 f^2 + beta0 g^2 dx.
double energy(const PulsePair& pair, const Params& params);

/// C(f, g) = int f^2 g dx. May have either sign.
double constraint(const PulsePair& pair);

/// Scale-invariant quotient J = I (lambda / C)^{2/3}, using the real cube
/// root so that the sign of C drops out. Throws DegenerateConstraint on C = 0.
double quotient(const PulsePair& pair, const Params& params);

/// L2 gradients of the energy and of the constraint.
struct Variations {
  PulsePair energy;      ///< (2(-f'' + alpha0 f), 2(-g'' + beta0 g))
  PulsePair constraint;  ///< (2 f g, f^2)
};

Variations gradients(const PulsePair& pair, const Params& params);

/// rho = (f')^2 + (g')^2 + f^2 + g^2.
RealField density(const PulsePair& pair);

/// Concentration function P(omega): the largest integral of the density over
/// a window of half-width omega. Windows are centered on grid nodes, cover
/// the nodes within distance omega of the center, and wrap periodically.
double concentration(const PulsePair& pair, double omega);

/// Density-weighted center on the periodic domain (circular mean of rho).
double center(const PulsePair& pair);

PulsePair translate(const PulsePair& pair, double shift);

/// Translates the pair so that its center sits at x = 0.
PulsePair centered(const PulsePair& pair);

/// Cyclic shift by a whole number of nodes (exact, no interpolation).
PulsePair rotate_nodes(const PulsePair& pair, long nodes);

/// max |u(x) - u(-x)| over both components, reflecting nodes through x = 0.
double reflection_asymmetry(const PulsePair& pair);

}  // namespace shg
