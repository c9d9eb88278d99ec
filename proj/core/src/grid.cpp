#include "shg/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "shg/errors.hpp"

namespace shg {

namespace {

// The FFTW planner is not re-entrant; plan execution through the new-array
// interface is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

fftw_complex* as_fftw(const Complex* p) {
  return reinterpret_cast<fftw_complex*>(const_cast<Complex*>(p));
}

}  // namespace

namespace detail {

struct GridData {
  double half_length = 0.0;
  std::size_t n = 0;
  double h = 0.0;
  std::vector<double> nodes;
  std::vector<double> zeta;
  std::vector<double> zeta_d;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  GridData(double L, std::size_t n_points) : half_length(L), n(n_points), h(2.0 * L / n_points) {
    nodes.resize(n);
    zeta.resize(n);
    zeta_d.resize(n);
    const double dk = std::numbers::pi / L;
    const auto ni = static_cast<long>(n);
    for (long j = 0; j < ni; ++j) {
      nodes[j] = -L + static_cast<double>(j) * h;
      const long k = j < ni / 2 ? j : j - ni;
      zeta[j] = dk * static_cast<double>(k);
      zeta_d[j] = (j == ni / 2) ? 0.0 : zeta[j];
    }

    std::vector<Complex> in(n), out(n);
    std::lock_guard lock(planner_mutex());
    const int ni32 = static_cast<int>(n);
    forward = fftw_plan_dft_1d(ni32, as_fftw(in.data()), as_fftw(out.data()), FFTW_FORWARD,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
    backward = fftw_plan_dft_1d(ni32, as_fftw(in.data()), as_fftw(out.data()), FFTW_BACKWARD,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
  }

  ~GridData() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }

  GridData(const GridData&) = delete;
  GridData& operator=(const GridData&) = delete;
};

}  // namespace detail

Grid::Grid(std::shared_ptr<const detail::GridData> data) : data_(std::move(data)) {}

Grid Grid::make(double half_length, std::size_t n_points) {
  if (!(half_length > 0.0) || !std::isfinite(half_length)) {
    throw InvalidConfiguration("grid half-length must be positive, got " +
                               std::to_string(half_length));
  }
  if (n_points < 8 || n_points % 2 != 0) {
    throw InvalidConfiguration("grid size must be even and at least 8, got " +
                               std::to_string(n_points));
  }
  return Grid(std::make_shared<const detail::GridData>(half_length, n_points));
}

double Grid::half_length() const noexcept { return data_->half_length; }
std::size_t Grid::size() const noexcept { return data_->n; }
double Grid::spacing() const noexcept { return data_->h; }
std::span<const double> Grid::nodes() const noexcept { return data_->nodes; }
std::span<const double> Grid::wavenumbers() const noexcept { return data_->zeta; }
std::span<const double> Grid::derivative_wavenumbers() const noexcept { return data_->zeta_d; }

std::vector<Complex> Grid::forward(std::span<const Complex> values) const {
  std::vector<Complex> out(size());
  fftw_execute_dft(data_->forward, as_fftw(values.data()), as_fftw(out.data()));
  return out;
}

std::vector<Complex> Grid::forward(std::span<const double> values) const {
  std::vector<Complex> in(values.begin(), values.end());
  return forward(std::span<const Complex>(in));
}

std::vector<Complex> Grid::inverse(std::span<const Complex> spectrum) const {
  std::vector<Complex> out(size());
  fftw_execute_dft(data_->backward, as_fftw(spectrum.data()), as_fftw(out.data()));
  const double scale = 1.0 / static_cast<double>(size());
  for (auto& z : out) z *= scale;
  return out;
}

bool operator==(const Grid& a, const Grid& b) noexcept {
  return a.data_ == b.data_ ||
         (a.half_length() == b.half_length() && a.size() == b.size());
}

void require_same_grid(const Grid& a, const Grid& b) {
  if (!(a == b)) {
    throw GridMismatch("fields live on different grids");
  }
}

template <typename T>
Field<T>::Field(Grid grid, std::vector<T> values) : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw GridMismatch("field has " + std::to_string(values_.size()) + " values but grid has " +
                       std::to_string(grid_.size()) + " nodes");
  }
}

template <typename T>
Field<T>& Field<T>::operator+=(const Field& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

template <typename T>
Field<T>& Field<T>::operator-=(const Field& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

template <typename T>
Field<T>& Field<T>::operator*=(double scale) noexcept {
  for (auto& v : values_) v *= scale;
  return *this;
}

template <typename T>
Field<T>& Field<T>::operator*=(const Field& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= other.values_[i];
  return *this;
}

template class Field<double>;
template class Field<Complex>;

namespace {

template <typename Symbol>
std::vector<Complex> filtered(const Grid& grid, std::vector<Complex> spectrum, Symbol&& symbol) {
  const auto zeta = grid.wavenumbers();
  const auto zeta_d = grid.derivative_wavenumbers();
  for (std::size_t k = 0; k < spectrum.size(); ++k) spectrum[k] *= symbol(zeta[k], zeta_d[k]);
  return grid.inverse(spectrum);
}

RealField real_of(const Grid& grid, const std::vector<Complex>& z) {
  std::vector<double> v(z.size());
  std::transform(z.begin(), z.end(), v.begin(), [](const Complex& c) { return c.real(); });
  return RealField(grid, std::move(v));
}

auto first_symbol = [](double, double kd) { return Complex(0.0, kd); };
auto second_symbol = [](double, double kd) { return Complex(-kd * kd, 0.0); };

}  // namespace

RealField differentiate(const RealField& u) {
  const auto& g = u.grid();
  return real_of(g, filtered(g, g.forward(u.values()), first_symbol));
}

ComplexField differentiate(const ComplexField& u) {
  const auto& g = u.grid();
  return ComplexField(g, filtered(g, g.forward(u.values()), first_symbol));
}

RealField second_derivative(const RealField& u) {
  const auto& g = u.grid();
  return real_of(g, filtered(g, g.forward(u.values()), second_symbol));
}

ComplexField second_derivative(const ComplexField& u) {
  const auto& g = u.grid();
  return ComplexField(g, filtered(g, g.forward(u.values()), second_symbol));
}

RealField apply_resolvent(const RealField& u, double s) {
  if (!(s > 0.0)) {
    throw InvalidParameter("resolvent parameter must be positive, got " + std::to_string(s));
  }
  const auto& g = u.grid();
  return real_of(g, filtered(g, g.forward(u.values()),
                             [s](double k, double) { return Complex(1.0 / (s + k * k), 0.0); }));
}

RealField translate(const RealField& u, double shift) {
  const auto& g = u.grid();
  return real_of(g, filtered(g, g.forward(u.values()),
                             [shift](double k, double) { return std::polar(1.0, -k * shift); }));
}

double quadrature(const RealField& u) {
  double sum = 0.0;
  for (double v : u.values()) sum += v;
  return u.grid().spacing() * sum;
}

double parseval_norm_squared(const RealField& u) {
  const auto& g = u.grid();
  double sum = 0.0;
  for (const auto& z : g.forward(u.values())) sum += std::norm(z);
  return g.spacing() * sum / static_cast<double>(g.size());
}

double inner(const RealField& a, const RealField& b) {
  require_same_grid(a.grid(), b.grid());
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return a.grid().spacing() * sum;
}

double max_abs(const RealField& u) {
  double m = 0.0;
  for (double v : u.values()) m = std::max(m, std::abs(v));
  return m;
}

namespace {

template <typename Fn>
RealField map_complex(const ComplexField& u, Fn&& fn) {
  std::vector<double> v(u.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(u[i]);
  return RealField(u.grid(), std::move(v));
}

}  // namespace

RealField real_part(const ComplexField& u) {
  return map_complex(u, [](const Complex& z) { return z.real(); });
}

RealField imag_part(const ComplexField& u) {
  return map_complex(u, [](const Complex& z) { return z.imag(); });
}

RealField abs(const ComplexField& u) {
  return map_complex(u, [](const Complex& z) { return std::abs(z); });
}

ComplexField to_complex(const RealField& u) {
  return ComplexField(u.grid(), std::vector<Complex>(u.values().begin(), u.values().end()));
}

}  // namespace shg
