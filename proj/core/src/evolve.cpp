#include "shg/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "shg/errors.hpp"
#include "shg/minimizer.hpp"

namespace shg {

WaveState::WaveState(ComplexField w_in, ComplexField v_in, double t_in)
    : w(std::move(w_in)), v(std::move(v_in)), t(t_in) {
  require_same_grid(w.grid(), v.grid());
}

WaveState::WaveState(const Grid& grid) : w(grid), v(grid) {}

void EvolveConfig::validate() const {
  if (!(dt > 0.0)) throw InvalidConfiguration("dt must be positive");
  if (!(t_end > 0.0)) throw InvalidConfiguration("t_end must be positive");
  if (dt > t_end) throw InvalidConfiguration("dt must not exceed t_end");
  if (record_every < 1) throw InvalidConfiguration("record_every must be at least 1");
  if (init_noise < 0.0) throw InvalidConfiguration("init_noise must be non-negative");
}

SplitStepPropagator::SplitStepPropagator(const Grid& grid, const Params& params, double dt,
                                         Nonlinearity nonlinearity)
    : grid_(grid), dt_(dt), mu_(params.mu), nonlinearity_(nonlinearity) {
  if (!(dt > 0.0)) throw InvalidParameter("time step must be positive");
  params.validate();
  const auto zeta = grid.wavenumbers();
  half_w_.resize(zeta.size());
  half_v_.resize(zeta.size());
  for (std::size_t k = 0; k < zeta.size(); ++k) {
    const double k2 = zeta[k] * zeta[k];
    half_w_[k] = std::polar(1.0, -(k2 + params.alpha) * 0.5 * dt);
    half_v_[k] = std::polar(1.0, -(k2 + params.beta) * 0.5 * dt / params.mu);
  }
}

void SplitStepPropagator::linear_half(ComplexField& w, ComplexField& v) const {
  auto apply = [this](ComplexField& u, const std::vector<Complex>& mult) {
    auto spec = grid_.forward(u.values());
    for (std::size_t k = 0; k < spec.size(); ++k) spec[k] *= mult[k];
    u = ComplexField(grid_, grid_.inverse(spec));
  };
  apply(w, half_w_);
  apply(v, half_v_);
}

void SplitStepPropagator::nonlinear_full(ComplexField& w, ComplexField& v) const {
  const Complex iw(0.0, 1.0);
  const Complex iv(0.0, 0.5 / mu_);
  const double h = dt_;
  auto rhs_w = [&](Complex a, Complex b) { return iw * std::conj(a) * b; };
  auto rhs_v = [&](Complex a) { return iv * a * a; };
  for (std::size_t j = 0; j < w.size(); ++j) {
    const Complex a = w[j];
    const Complex b = v[j];
    const Complex k1a = rhs_w(a, b);
    const Complex k1b = rhs_v(a);
    const Complex a2 = a + 0.5 * h * k1a;
    const Complex b2 = b + 0.5 * h * k1b;
    const Complex k2a = rhs_w(a2, b2);
    const Complex k2b = rhs_v(a2);
    const Complex a3 = a + 0.5 * h * k2a;
    const Complex b3 = b + 0.5 * h * k2b;
    const Complex k3a = rhs_w(a3, b3);
    const Complex k3b = rhs_v(a3);
    const Complex a4 = a + h * k3a;
    const Complex b4 = b + h * k3b;
    const Complex k4a = rhs_w(a4, b4);
    const Complex k4b = rhs_v(a4);
    w[j] = a + (h / 6.0) * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
    v[j] = b + (h / 6.0) * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
  }
}

WaveState SplitStepPropagator::advance(const WaveState& state) const {
  WaveState next = state;
  linear_half(next.w, next.v);
  if (nonlinearity_ == Nonlinearity::enabled) nonlinear_full(next.w, next.v);
  linear_half(next.w, next.v);
  next.t = state.t + dt_;
  return next;
}

WaveState step(const WaveState& state, const Params& params, double dt, Nonlinearity nonlinearity) {
  return SplitStepPropagator(state.grid(), params, dt, nonlinearity).advance(state);
}

WaveState propagate(WaveState state, const Params& params, double dt, long n_steps) {
  const SplitStepPropagator prop(state.grid(), params, dt);
  for (long n = 0; n < n_steps; ++n) state = prop.advance(state);
  return state;
}

double conserved_charge(const WaveState& state, double mu) {
  double sum = 0.0;
  for (std::size_t j = 0; j < state.w.size(); ++j) {
    sum += std::norm(state.w[j]) + 2.0 * mu * std::norm(state.v[j]);
  }
  return state.grid().spacing() * sum;
}

double hamiltonian(const WaveState& state, const Params& params) {
  const ComplexField wx = differentiate(state.w);
  const ComplexField vx = differentiate(state.v);
  double sum = 0.0;
  for (std::size_t j = 0; j < wx.size(); ++j) {
    const Complex w = state.w[j];
    const Complex v = state.v[j];
    sum += std::norm(wx[j]) + std::norm(vx[j]) + params.alpha * std::norm(w) +
           params.beta * std::norm(v) - (std::conj(w) * std::conj(w) * v).real();
  }
  return state.grid().spacing() * sum;
}

namespace {

double unwrap(double previous, double raw) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return raw + two_pi * std::round((previous - raw) / two_pi);
}

// Least-squares slope of y against x.
double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  if (x.size() < 2) return 0.0;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

ComplexField with_noise(const RealField& u, double amplitude, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  ComplexField out = to_complex(u);
  if (amplitude == 0.0) return out;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] *= 1.0 + amplitude * unit(rng);
  return out;
}

}  // namespace

TravellingWaveReport verify_travelling_wave(const PulsePair& ground, const Params& params,
                                            const EvolveConfig& config) {
  params.validate();
  config.validate();
  const double res = el_residual(ground, 1.0, params);
  if (!(res < 1e-8)) {
    throw InvalidInput("initial pair is not a stationary solution (residual " +
                       std::to_string(res) + ")");
  }

  const Grid& grid = ground.grid();
  const long steps = std::max(1L, std::lround(std::ceil(config.t_end / config.dt - 1e-9)));
  const double dt = config.t_end / static_cast<double>(steps);
  const SplitStepPropagator prop(grid, params, dt);

  std::mt19937_64 rng(config.seed);
  WaveState state(with_noise(ground.f, config.init_noise, rng),
                  with_noise(ground.g, config.init_noise, rng));

  const RealField amp_phi = [&] {
    RealField a = ground.f;
    for (auto& x : a.values()) x = std::abs(x);
    return a;
  }();
  const RealField amp_psi = [&] {
    RealField a = ground.g;
    for (auto& x : a.values()) x = std::abs(x);
    return a;
  }();
  std::size_t peak = 0;
  for (std::size_t j = 0; j < amp_phi.size(); ++j) {
    if (amp_phi[j] > amp_phi[peak]) peak = j;
  }

  TravellingWaveReport report;
  report.expected_rate_w = params.sigma;
  report.expected_rate_v = 2.0 * params.sigma;
  report.dt = dt;
  report.steps = steps;

  const double q0 = conserved_charge(state, params.mu);
  const double h0 = hamiltonian(state, params);
  report.vacuous = q0 == 0.0;

  double phase_w = 0.0, phase_v = 0.0;
  auto record = [&](const WaveState& s, bool first) {
    TimeSample sample;
    sample.t = s.t;
    sample.charge = conserved_charge(s, params.mu);
    sample.hamiltonian = hamiltonian(s, params);
    sample.amp_drift_w = max_abs(abs(s.w) - amp_phi);
    sample.amp_drift_v = max_abs(abs(s.v) - amp_psi);
    const double raw_w = std::arg(s.w[peak]);
    const double raw_v = std::arg(s.v[peak]);
    phase_w = first ? raw_w : unwrap(phase_w, raw_w);
    phase_v = first ? raw_v : unwrap(phase_v, raw_v);
    sample.phase_w = phase_w;
    sample.phase_v = phase_v;

    report.max_amp_drift_w = std::max(report.max_amp_drift_w, sample.amp_drift_w);
    report.max_amp_drift_v = std::max(report.max_amp_drift_v, sample.amp_drift_v);
    if (q0 > 0.0) {
      report.charge_drift = std::max(report.charge_drift, std::abs(sample.charge - q0) / q0);
      report.hamiltonian_drift =
          std::max(report.hamiltonian_drift,
                   std::abs(sample.hamiltonian - h0) / std::max(std::abs(h0), q0));
    }
    report.max_imag_w = std::max(report.max_imag_w, max_abs(imag_part(s.w)));
    report.max_imag_v = std::max(report.max_imag_v, max_abs(imag_part(s.v)));
    report.series.push_back(sample);
  };

  record(state, true);
  // The phase is unwrapped from every step so the recorded samples may be sparse.
  for (long n = 1; n <= steps; ++n) {
    state = prop.advance(state);
    if (n % config.record_every == 0 || n == steps) {
      record(state, false);
    } else {
      phase_w = unwrap(phase_w, std::arg(state.w[peak]));
      phase_v = unwrap(phase_v, std::arg(state.v[peak]));
    }
  }

  std::vector<double> t, pw, pv;
  for (const auto& s : report.series) {
    t.push_back(s.t);
    pw.push_back(s.phase_w);
    pv.push_back(s.phase_v);
  }
  report.phase_rate_w = slope(t, pw);
  report.phase_rate_v = slope(t, pv);
  return report;
}

SplittingOrder measure_splitting_order(const WaveState& initial, const Params& params, double dt,
                                       double t_end) {
  const long n = std::lround(t_end / dt);
  if (n < 1) throw InvalidConfiguration("t_end must hold at least one step");
  const WaveState coarse = propagate(initial, params, dt, n);
  const WaveState fine = propagate(initial, params, dt / 2.0, 2 * n);
  const WaveState ref = propagate(initial, params, dt / 8.0, 8 * n);
  auto distance = [](const WaveState& a, const WaveState& b) {
    double d = 0.0;
    for (std::size_t j = 0; j < a.w.size(); ++j) {
      d = std::max({d, std::abs(a.w[j] - b.w[j]), std::abs(a.v[j] - b.v[j])});
    }
    return d;
  };
  SplittingOrder out;
  out.error_coarse = distance(coarse, ref);
  out.error_fine = distance(fine, ref);
  out.ratio = out.error_fine > 0.0 ? out.error_coarse / out.error_fine : 0.0;
  return out;
}

}  // namespace shg
