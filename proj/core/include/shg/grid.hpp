#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace shg {

namespace detail {
struct GridData;
}

using Complex = std::complex<double>;

/// Uniform periodic grid on [-L, L) with N nodes and its spectral metadata.
///
/// Grids are cheap to copy: the node and wavenumber tables and the FFT plans
/// live in an immutable shared block. Two grids compare equal when they have
/// the same half-length and node count.
///
/// Transform normalization: the forward transform is unscaled,
///   u_hat[k] = sum_j u[j] exp(-i zeta_k (x_j + L)),
/// and the inverse carries the 1/N factor.
class Grid {
 public:
  /// Throws InvalidConfiguration unless half_length > 0 and n_points is even
  /// and at least 8.
  static Grid make(double half_length, std::size_t n_points);

  double half_length() const noexcept;
  std::size_t size() const noexcept;
  double spacing() const noexcept;

  std::span<const double> nodes() const noexcept;

  /// Standard periodic frequencies zeta_k = 2 pi k / (2L), k in [-N/2, N/2).
  /// The Nyquist entry is stored once, as -N pi / (2L).
  std::span<const double> wavenumbers() const noexcept;

  /// First-derivative symbol: the wavenumbers with the Nyquist entry zeroed.
  std::span<const double> derivative_wavenumbers() const noexcept;

  std::vector<Complex> forward(std::span<const Complex> values) const;
  std::vector<Complex> forward(std::span<const double> values) const;
  std::vector<Complex> inverse(std::span<const Complex> spectrum) const;

  friend bool operator==(const Grid& a, const Grid& b) noexcept;

 private:
  explicit Grid(std::shared_ptr<const detail::GridData> data);
  std::shared_ptr<const detail::GridData> data_;
};

/// Throws GridMismatch when the two grids differ.
void require_same_grid(const Grid& a, const Grid& b);

/// Values sampled at the nodes of one Grid.
template <typename T>
class Field {
 public:
  using value_type = T;

  explicit Field(Grid grid) : grid_(std::move(grid)), values_(grid_.size(), T{}) {}
  Field(Grid grid, std::vector<T> values);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const T> values() const& noexcept { return values_; }
  std::span<T> values() & noexcept { return values_; }
  std::span<const T> values() && = delete;

  T& operator[](std::size_t i) noexcept { return values_[i]; }
  const T& operator[](std::size_t i) const noexcept { return values_[i]; }

  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  Field& operator*=(double scale) noexcept;
  /// Pointwise product.
  Field& operator*=(const Field& other);

 private:
  Grid grid_;
  std::vector<T> values_;
};

using RealField = Field<double>;
using ComplexField = Field<Complex>;

template <typename T>
Field<T> operator+(Field<T> a, const Field<T>& b) {
  return a += b;
}
template <typename T>
Field<T> operator-(Field<T> a, const Field<T>& b) {
  return a -= b;
}
template <typename T>
Field<T> operator*(double s, Field<T> a) {
  return a *= s;
}
template <typename T>
Field<T> operator*(Field<T> a, const Field<T>& b) {
  return a *= b;
}

/// Samples fn(x) at every node.
template <typename Fn>
RealField sample(const Grid& grid, Fn&& fn) {
  std::vector<double> v(grid.size());
  const auto x = grid.nodes();
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = fn(x[j]);
  return RealField(grid, std::move(v));
}

RealField differentiate(const RealField& u);
ComplexField differentiate(const ComplexField& u);

/// Spectral second derivative, consistent with applying differentiate twice.
RealField second_derivative(const RealField& u);
ComplexField second_derivative(const ComplexField& u);

/// Applies the resolvent (s - d^2/dx^2)^{-1}: multiplies the transform by
/// 1 / (s + zeta^2). On the periodic grid this is convolution with K_s.
RealField apply_resolvent(const RealField& u, double s);

/// Periodic translation u(x) -> u(x - shift), exact for band-limited data.
RealField translate(const RealField& u, double shift);

/// Trapezoid (equal-weight) rule h * sum u_j.
double quadrature(const RealField& u);

/// Integral of u^2 evaluated in wavenumber space: (h / N) sum |u_hat_k|^2.
double parseval_norm_squared(const RealField& u);

/// L2 inner product on the grid.
double inner(const RealField& a, const RealField& b);

double max_abs(const RealField& u);

RealField real_part(const ComplexField& u);
RealField imag_part(const ComplexField& u);
RealField abs(const ComplexField& u);
ComplexField to_complex(const RealField& u);

}  // namespace shg
