#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "shg/analytic.hpp"
#include "shg/errors.hpp"
#include "shg/evolve.hpp"

namespace shg {
namespace {

WaveState random_smooth_state(const Grid& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto field = [&] {
    const double a = u(rng), b = u(rng), c = 3 * u(rng), w = 2.5 + u(rng), k = 1.0 + u(rng);
    ComplexField out(grid);
    for (std::size_t j = 0; j < out.size(); ++j) {
      const double x = grid.nodes()[j];
      out[j] = Complex(a, b) * std::exp(-(x - c) * (x - c) / (w * w)) * std::polar(1.0, k * x);
    }
    return out;
  };
  ComplexField w = field();
  ComplexField v = field();
  return WaveState(std::move(w), std::move(v));
}

const Params kTravelling = Params::reduced(1.0, 1.0, 14.4, /*mu=*/1.0, /*sigma=*/0.5);

TEST(EvolveTest, ZeroStateStaysZero) {
  const Grid g = Grid::make(20.0, 128);
  WaveState s = propagate(WaveState(g), kTravelling, 1e-2, 50);
  EXPECT_EQ(max_abs(abs(s.w)), 0.0);
  EXPECT_EQ(max_abs(abs(s.v)), 0.0);
  EXPECT_EQ(conserved_charge(s, 1.0), 0.0);
  EXPECT_EQ(hamiltonian(s, kTravelling), 0.0);
}

TEST(EvolveTest, LinearSingleModeRotatesExactly) {
  const Grid g = Grid::make(20.0, 64);
  const double k = std::numbers::pi / 20.0;
  ComplexField w(g);
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = std::polar(1.0, k * g.nodes()[j]);
  WaveState s(w, ComplexField(g));
  const double dt = 0.01;
  const SplitStepPropagator prop(g, kTravelling, dt, Nonlinearity::disabled);
  for (int n = 0; n < 100; ++n) s = prop.advance(s);
  const Complex rot = std::polar(1.0, -(k * k + kTravelling.alpha) * s.t);
  for (std::size_t j = 0; j < w.size(); ++j) EXPECT_LT(std::abs(s.w[j] - rot * w[j]), 1e-12);
}

TEST(EvolveTest, LinearEvolutionIsUnitary) {
  const Grid g = Grid::make(20.0, 256);
  WaveState s = random_smooth_state(g, 1);
  const double q0 = conserved_charge(s, kTravelling.mu);
  const SplitStepPropagator prop(g, kTravelling, 0.05, Nonlinearity::disabled);
  for (int n = 0; n < 200; ++n) s = prop.advance(s);
  EXPECT_NEAR(conserved_charge(s, kTravelling.mu), q0, 1e-13 * q0);
}

TEST(EvolveTest, ChargeConservedForRandomData) {
  const Grid g = Grid::make(20.0, 256);
  const Params p = Params::physical(0.3, -0.2, 1.7, 0.5, 1.0);
  const WaveState s0 = random_smooth_state(g, 2);
  const double q0 = conserved_charge(s0, p.mu);
  const WaveState s1 = propagate(s0, p, 1e-3, 500);
  EXPECT_NEAR(conserved_charge(s1, p.mu), q0, 1e-8 * q0);
}

TEST(EvolveTest, HamiltonianConservedForRandomData) {
  const Grid g = Grid::make(20.0, 256);
  const Params p = Params::physical(0.3, -0.2, 1.7, 0.5, 1.0);
  WaveState s = random_smooth_state(g, 3);
  const double h0 = hamiltonian(s, p);
  const double scale = std::max(std::abs(h0), conserved_charge(s, p.mu));
  const SplitStepPropagator prop(g, p, 2.5e-4);
  double worst = 0.0;
  for (int n = 0; n < 4000; ++n) {
    s = prop.advance(s);
    if (n % 200 == 0) worst = std::max(worst, std::abs(hamiltonian(s, p) - h0) / scale);
  }
  EXPECT_LT(worst, 1e-7);
}

TEST(EvolveTest, StrangSplittingIsSecondOrder) {
  const Grid g = Grid::make(20.0, 256);
  const PulsePair pulse = explicit_pulse(g);
  // Overweight the pulse so the solution breathes instead of rotating rigidly.
  WaveState s0(to_complex(1.2 * pulse.f), to_complex(0.8 * pulse.g));
  const SplittingOrder order = measure_splitting_order(s0, kTravelling, 0.02, 1.0);
  EXPECT_GE(order.ratio, 3.5);
  EXPECT_LE(order.ratio, 4.5);
}

TEST(EvolveTest, ExplicitPulseTravelsAsPredicted) {
  const Grid g = Grid::make(20.0, 512);
  EvolveConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_end = 10.0;
  const TravellingWaveReport r = verify_travelling_wave(explicit_pulse(g), kTravelling, cfg);
  EXPECT_LT(r.max_amp_drift_w, 1e-4);
  EXPECT_LT(r.max_amp_drift_v, 1e-4);
  EXPECT_NEAR(r.phase_rate_w, 0.5, 1e-3);
  EXPECT_NEAR(r.phase_rate_v, 1.0, 1e-3);
  EXPECT_LT(r.charge_drift, 1e-8);
  EXPECT_LT(r.hamiltonian_drift, 1e-8);
  EXPECT_EQ(r.series.size(), 101u);
}

TEST(EvolveTest, StationaryCaseStaysReal) {
  const Grid g = Grid::make(20.0, 256);
  EvolveConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_end = 2.0;
  const TravellingWaveReport r =
      verify_travelling_wave(explicit_pulse(g), Params::reduced(1.0, 1.0, 14.4), cfg);
  EXPECT_LT(r.max_imag_w, 1e-6);
  EXPECT_LT(r.max_imag_v, 1e-6);
}

TEST(EvolveTest, PerturbedPulsePersists) {
  const Grid g = Grid::make(20.0, 256);
  EvolveConfig cfg;
  cfg.dt = 2e-3;
  cfg.t_end = 5.0;
  cfg.init_noise = 0.01;
  cfg.seed = 5;
  const TravellingWaveReport r = verify_travelling_wave(explicit_pulse(g), kTravelling, cfg);
  EXPECT_GT(r.max_amp_drift_w, 0.0);
  // The pulse does not disperse: its peak stays within a few percent.
  EXPECT_LT(r.max_amp_drift_w, 0.2);
}

TEST(EvolveTest, ZeroDataGivesVacuousReport) {
  const Grid g = Grid::make(20.0, 64);
  EvolveConfig cfg;
  cfg.dt = 0.01;
  cfg.t_end = 0.5;
  const TravellingWaveReport r = verify_travelling_wave(PulsePair(g), kTravelling, cfg);
  EXPECT_TRUE(r.vacuous);
  for (const auto& s : r.series) {
    EXPECT_EQ(s.charge, 0.0);
    EXPECT_EQ(s.hamiltonian, 0.0);
    EXPECT_EQ(s.amp_drift_w, 0.0);
    EXPECT_EQ(s.phase_w, 0.0);
  }
}

TEST(EvolveTest, RejectsNonStationaryGround) {
  const Grid g = Grid::make(20.0, 128);
  const PulsePair pulse = explicit_pulse(g);
  EXPECT_THROW(verify_travelling_wave(2.0 * pulse, kTravelling, {}), InvalidInput);
  EvolveConfig bad;
  bad.dt = -1.0;
  EXPECT_THROW(verify_travelling_wave(pulse, kTravelling, bad), InvalidConfiguration);
}

}  // namespace
}  // namespace shg
