#include "shg/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "shg/errors.hpp"

namespace shg {

PulsePair::PulsePair(RealField f_in, RealField g_in) : f(std::move(f_in)), g(std::move(g_in)) {
  require_same_grid(f.grid(), g.grid());
}

PulsePair::PulsePair(const Grid& grid) : f(grid), g(grid) {}

PulsePair& PulsePair::operator+=(const PulsePair& other) {
  f += other.f;
  g += other.g;
  return *this;
}

PulsePair& PulsePair::operator-=(const PulsePair& other) {
  f -= other.f;
  g -= other.g;
  return *this;
}

PulsePair& PulsePair::operator*=(double s) noexcept {
  f *= s;
  g *= s;
  return *this;
}

PulsePair operator+(PulsePair a, const PulsePair& b) { return a += b; }
PulsePair operator-(PulsePair a, const PulsePair& b) { return a -= b; }
PulsePair operator*(double s, PulsePair a) { return a *= s; }

double inner(const PulsePair& a, const PulsePair& b) { return inner(a.f, b.f) + inner(a.g, b.g); }

double max_abs_difference(const PulsePair& a, const PulsePair& b) {
  return std::max(max_abs(a.f - b.f), max_abs(a.g - b.g));
}

double energy(const PulsePair& pair, const Params& params) {
  const RealField df = differentiate(pair.f);
  const RealField dg = differentiate(pair.g);
  const double h = pair.grid().spacing();
  double sum = 0.0;
  for (std::size_t j = 0; j < df.size(); ++j) {
    const double f = pair.f[j];
    const double g = pair.g[j];
    sum += df[j] * df[j] + dg[j] * dg[j] + params.alpha0 * f * f + params.beta0 * g * g;
  }
  return h * sum;
}

double constraint(const PulsePair& pair) {
  double sum = 0.0;
  for (std::size_t j = 0; j < pair.f.size(); ++j) sum += pair.f[j] * pair.f[j] * pair.g[j];
  return pair.grid().spacing() * sum;
}

double quotient(const PulsePair& pair, const Params& params) {
  const double c = constraint(pair);
  if (c == 0.0) {
    throw DegenerateConstraint("quotient undefined: constraint integral is zero");
  }
  const double t = std::cbrt(params.lambda / c);
  return energy(pair, params) * t * t;
}

Variations gradients(const PulsePair& pair, const Params& params) {
  // -D(D u) keeps the gradient exact for the discrete energy.
  RealField gi_f = -2.0 * second_derivative(pair.f);
  RealField gi_g = -2.0 * second_derivative(pair.g);
  RealField gc_f(pair.grid());
  RealField gc_g(pair.grid());
  for (std::size_t j = 0; j < pair.f.size(); ++j) {
    const double f = pair.f[j];
    const double g = pair.g[j];
    gi_f[j] += 2.0 * params.alpha0 * f;
    gi_g[j] += 2.0 * params.beta0 * g;
    gc_f[j] = 2.0 * f * g;
    gc_g[j] = f * f;
  }
  return {PulsePair(std::move(gi_f), std::move(gi_g)), PulsePair(std::move(gc_f), std::move(gc_g))};
}

RealField density(const PulsePair& pair) {
  const RealField df = differentiate(pair.f);
  const RealField dg = differentiate(pair.g);
  RealField rho(pair.grid());
  for (std::size_t j = 0; j < rho.size(); ++j) {
    rho[j] = df[j] * df[j] + dg[j] * dg[j] + pair.f[j] * pair.f[j] + pair.g[j] * pair.g[j];
  }
  return rho;
}

double concentration(const PulsePair& pair, double omega) {
  if (!(omega > 0.0)) {
    throw InvalidParameter("concentration window half-width must be positive, got " +
                           std::to_string(omega));
  }
  const RealField rho = density(pair);
  const std::size_t n = rho.size();
  const double h = pair.grid().spacing();

  const double half = std::floor(omega / h + 1e-9);
  const std::size_t width =
      half >= static_cast<double>(n) ? n : std::min(n, 2 * static_cast<std::size_t>(half) + 1);
  const std::size_t m = (width - 1) / 2;

  // Prefix sums over two periods so every wrapped window is a difference.
  std::vector<double> prefix(2 * n + 1, 0.0);
  for (std::size_t i = 0; i < 2 * n; ++i) prefix[i + 1] = prefix[i] + rho[i % n];

  double best = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t start = (j + n - m % n) % n;
    best = std::max(best, prefix[start + width] - prefix[start]);
  }
  return h * best;
}

double center(const PulsePair& pair) {
  const RealField rho = density(pair);
  const double L = pair.grid().half_length();
  const auto x = pair.grid().nodes();
  double s = 0.0;
  double c = 0.0;
  for (std::size_t j = 0; j < rho.size(); ++j) {
    const double theta = std::numbers::pi * x[j] / L;
    s += rho[j] * std::sin(theta);
    c += rho[j] * std::cos(theta);
  }
  if (s == 0.0 && c == 0.0) return 0.0;
  return L / std::numbers::pi * std::atan2(s, c);
}

PulsePair translate(const PulsePair& pair, double shift) {
  return PulsePair(translate(pair.f, shift), translate(pair.g, shift));
}

PulsePair centered(const PulsePair& pair) { return translate(pair, -center(pair)); }

PulsePair rotate_nodes(const PulsePair& pair, long nodes) {
  const auto n = static_cast<long>(pair.f.size());
  const long r = ((nodes % n) + n) % n;
  auto rotate_field = [&](const RealField& u) {
    std::vector<double> v(u.values().begin(), u.values().end());
    std::rotate(v.begin(), v.begin() + (n - r) % n, v.end());
    return RealField(u.grid(), std::move(v));
  };
  return PulsePair(rotate_field(pair.f), rotate_field(pair.g));
}

double reflection_asymmetry(const PulsePair& pair) {
  const std::size_t n = pair.f.size();
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t r = (n - j) % n;
    worst = std::max({worst, std::abs(pair.f[j] - pair.f[r]), std::abs(pair.g[j] - pair.g[r])});
  }
  return worst;
}

}  // namespace shg
