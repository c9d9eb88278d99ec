#pragma once

#include <cstdint>
#include <vector>

#include "shg/functionals.hpp"
#include "shg/grid.hpp"
#include "shg/params.hpp"

namespace shg {

/// Complex field pair (W, V) of the time-dependent system at time t.
struct WaveState {
  ComplexField w;
  ComplexField v;
  double t = 0.0;

  WaveState(ComplexField w_in, ComplexField v_in, double t_in = 0.0);
  explicit WaveState(const Grid& grid);

  const Grid& grid() const noexcept { return w.grid(); }
};

struct EvolveConfig {
  double dt = 1e-3;
  double t_end = 10.0;
  int record_every = 100;
  /// Relative amplitude of uniform multiplicative noise on the initial data.
  double init_noise = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
};

enum class Nonlinearity { enabled, disabled };

/// Strang splitting for
///   i W_t + W_xx - alpha W + conj(W) V = 0,
///   i mu V_t + V_xx - beta V + W^2 / 2 = 0.
/// Half linear step in transform space, full nonlinear step
///   W_t = i conj(W) V,  V_t = i W^2 / (2 mu)
/// with classical RK4, half linear step.
class SplitStepPropagator {
 public:
  SplitStepPropagator(const Grid& grid, const Params& params, double dt,
                      Nonlinearity nonlinearity = Nonlinearity::enabled);

  WaveState advance(const WaveState& state) const;
  double dt() const noexcept { return dt_; }

 private:
  void linear_half(ComplexField& w, ComplexField& v) const;
  void nonlinear_full(ComplexField& w, ComplexField& v) const;

  Grid grid_;
  double dt_;
  double mu_;
  Nonlinearity nonlinearity_;
  std::vector<Complex> half_w_;
  std::vector<Complex> half_v_;
};

/// One Strang step of size dt. Prefer SplitStepPropagator in loops.
WaveState step(const WaveState& state, const Params& params, double dt,
               Nonlinearity nonlinearity = Nonlinearity::enabled);

/// Evolves over n_steps steps of size dt.
WaveState propagate(WaveState state, const Params& params, double dt, long n_steps);

/// Q = int |W|^2 + 2 mu |V|^2 dx.
double conserved_charge(const WaveState& state, double mu);

/// H = int |W_x|^2 + |V_x|^2 + alpha |W|^2 + beta |V|^2 - Re(conj(W)^2 V) dx.
double hamiltonian(const WaveState& state, const Params& params);

struct TimeSample {
  double t = 0.0;
  double charge = 0.0;
  double hamiltonian = 0.0;
  double amp_drift_w = 0.0;
  double amp_drift_v = 0.0;
  double phase_w = 0.0;  ///< unwrapped phase of W at the pulse peak
  double phase_v = 0.0;
};

struct TravellingWaveReport {
  double max_amp_drift_w = 0.0;
  double max_amp_drift_v = 0.0;
  double phase_rate_w = 0.0;
  double phase_rate_v = 0.0;
  double expected_rate_w = 0.0;  ///< sigma
  double expected_rate_v = 0.0;  ///< 2 sigma
  double charge_drift = 0.0;       ///< max |Q(t) - Q(0)| / Q(0)
  double hamiltonian_drift = 0.0;  ///< max |H(t) - H(0)| / max(|H(0)|, Q(0))
  double max_imag_w = 0.0;
  double max_imag_v = 0.0;
  double dt = 0.0;
  long steps = 0;
  bool vacuous = false;  ///< zero initial data
  std::vector<TimeSample> series;
};

/// Starts from (W, V) = (Phi, Psi), evolves to t_end and measures how closely
/// the solution follows (e^{i sigma t} Phi, e^{2 i sigma t} Psi).
/// Throws InvalidInput unless el_residual(ground, 1, params) < 1e-8.
TravellingWaveReport verify_travelling_wave(const PulsePair& ground, const Params& params,
                                            const EvolveConfig& config);

struct SplittingOrder {
  double error_coarse = 0.0;  ///< |u(dt) - u(dt/8)|_inf
  double error_fine = 0.0;    ///< |u(dt/2) - u(dt/8)|_inf
  double ratio = 0.0;
};

/// Self-convergence of the splitting at time t_end against a dt/8 reference.
SplittingOrder measure_splitting_order(const WaveState& initial, const Params& params, double dt,
                                       double t_end);

}  // namespace shg
