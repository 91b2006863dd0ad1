#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace kgms {

/// Uniform periodic cube [-L/2, L/2)^3, n points per axis, origin on a node.
/// Angular wavenumbers per axis are (2*pi/L) * {-n/2, ..., n/2 - 1}.
struct GridSpec {
  int n = 0;
  double box_length = 0.0;

  /// Validates n >= 8 and even, box_length > 0.
  static GridSpec make(int n, double box_length);

  double dx() const { return box_length / n; }
  std::size_t volume() const {
    return static_cast<std::size_t>(n) * n * n;
  }
  std::size_t spectral_size() const {
    return static_cast<std::size_t>(n) * n * (n / 2 + 1);
  }
  /// Node coordinate along one axis, i in [0, n).
  double coord(int i) const { return -0.5 * box_length + dx() * i; }
  /// FFT storage index -> signed mode number in [-n/2, n/2).
  int signed_mode(int k) const { return k <= n / 2 - 1 ? k : k - n; }
  /// Angular wavenumber for FFT storage index k.
  double wavenumber(int k) const;
  /// Largest resolvable angular wavenumber, pi/dx.
  double nyquist() const;

  bool operator==(const GridSpec&) const = default;
};

/// Real-valued grid function, row-major (x slowest, z fastest).
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(const GridSpec& grid, double fill = 0.0)
      : grid_(grid), values_(grid.volume(), fill) {}

  const GridSpec& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }
  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }
  double& at(int ix, int iy, int iz) {
    return values_[(static_cast<std::size_t>(ix) * grid_.n + iy) * grid_.n + iz];
  }
  double at(int ix, int iy, int iz) const {
    return values_[(static_cast<std::size_t>(ix) * grid_.n + iy) * grid_.n + iz];
  }

  ScalarField& operator+=(const ScalarField& o);
  ScalarField& operator-=(const ScalarField& o);
  ScalarField& operator*=(double s);
  /// this += a * x
  void axpy(double a, const ScalarField& x);

  bool all_finite() const;
  double max_abs() const;
  /// Discrete L2 norm: sqrt(sum f^2 dx^3).
  double l2_norm() const;

 private:
  GridSpec grid_;
  std::vector<double> values_;
};

/// Half-complex spectrum of a real field (r2c layout): dims n x n x (n/2+1),
/// z axis keeps only kz >= 0; kz < 0 content is implied by conjugate symmetry.
class SpectralField {
 public:
  SpectralField() = default;
  explicit SpectralField(const GridSpec& grid)
      : grid_(grid), coeff_(grid.spectral_size()) {}

  const GridSpec& grid() const { return grid_; }
  std::size_t size() const { return coeff_.size(); }
  std::complex<double>* data() { return coeff_.data(); }
  const std::complex<double>* data() const { return coeff_.data(); }
  std::complex<double>& operator[](std::size_t i) { return coeff_[i]; }
  const std::complex<double>& operator[](std::size_t i) const { return coeff_[i]; }
  std::complex<double>& at(int kx, int ky, int kz) {
    return coeff_[(static_cast<std::size_t>(kx) * grid_.n + ky) * (grid_.n / 2 + 1) + kz];
  }

 private:
  GridSpec grid_;
  std::vector<std::complex<double>> coeff_;
};

/// Coefficients c(k) with the convention f(x) = sum_k c(k) exp(i k.x).
SpectralField forward_r2c(const ScalarField& f);
ScalarField inverse_c2r(const SpectralField& c);

/// Full-cube DFT of a real field, size n^3, FFT index order on every axis.
/// Validates that all input values are finite.
std::vector<std::complex<double>> forward_dft(const ScalarField& f);
ScalarField inverse_dft(const GridSpec& grid,
                        std::span<const std::complex<double>> coeff);

/// d/dx_a via the i*k_a multiplier; axis in {0,1,2}. Exact for band-limited
/// fields; the Nyquist plane (mode -n/2) is dropped since its sign is
/// ambiguous for real data.
ScalarField spatial_derivative(const ScalarField& f, int axis);
std::array<ScalarField, 3> gradient(const ScalarField& f);
ScalarField laplacian(const ScalarField& f);

/// 2/3-rule truncation: zero every mode with |signed mode| > (n-1)/3 on any
/// axis. Applied after pointwise products to absorb quadratic aliasing.
void dealias_23(SpectralField& c);
void dealias_23(ScalarField& f);

/// xi_m(k) = sqrt(|k|^2 + m^2) over the half-complex layout; m in [0,1].
std::vector<double> dispersion_multiplier(const GridSpec& grid, double mass);
/// Same quantity for one mode triple (FFT storage indices).
double dispersion_value(const GridSpec& grid, int kx, int ky, int kz,
                        double mass);

}  // namespace kgms
