#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace nlslab {

using cplx = std::complex<double>;

/// Uniform periodic grid on the box [-L/2, L/2)^d, d in {1, 2}.
///
/// Physical sample j along an axis sits at x_j = -L/2 + j h with h = L/n.
/// Spectral index k along an axis maps to the signed wavenumber
/// k' in [-n/2, n/2) and frequency xi = 2 pi k' / L. The single index with
/// k' = -n/2 is the Nyquist mode.
class GridSpec {
 public:
  GridSpec(int dim, int n, double length);

  int dim() const noexcept { return dim_; }
  int n() const noexcept { return n_; }
  double length() const noexcept { return length_; }

  std::size_t size() const noexcept { return size_; }
  double spacing() const noexcept { return length_ / n_; }
  double dxi() const noexcept;
  /// h^d, the Riemann-sum weight of a physical sample.
  double cell_volume() const noexcept;

  int signed_index(int k) const noexcept { return k < n_ / 2 ? k : k - n_; }
  double frequency(int k) const noexcept { return dxi() * signed_index(k); }
  double position(int j) const noexcept { return -0.5 * length_ + j * spacing(); }
  bool is_nyquist(int k) const noexcept { return k == n_ / 2; }

  /// Axis indices of a flat row-major index (unused axes are zero).
  std::array<int, 2> unflatten(std::size_t flat) const noexcept;

  /// |xi| for every spectral index, row-major.
  std::vector<double> frequency_magnitudes() const;
  /// True for indices touching the Nyquist line along any axis.
  std::vector<bool> nyquist_mask() const;
  /// Largest |xi| on the lattice.
  double max_frequency() const noexcept;

  bool operator==(const GridSpec&) const = default;

 private:
  int dim_;
  int n_;
  double length_;
  std::size_t size_;
};

GridSpec make_grid(int dim, int n, double length);

enum class Side { physical, spectral };

/// Complex samples of a field on a GridSpec, tagged with the side they live on.
class Field {
 public:
  explicit Field(GridSpec grid, Side side = Side::physical);
  Field(GridSpec grid, std::vector<cplx> values, Side side);

  const GridSpec& grid() const noexcept { return grid_; }
  Side side() const noexcept { return side_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const cplx> values() const noexcept { return values_; }
  std::span<cplx> values() noexcept { return values_; }
  std::vector<cplx>& data() noexcept { return values_; }
  const std::vector<cplx>& data() const noexcept { return values_; }

  cplx& operator[](std::size_t i) noexcept { return values_[i]; }
  const cplx& operator[](std::size_t i) const noexcept { return values_[i]; }

  bool operator==(const Field&) const = default;

 private:
  GridSpec grid_;
  std::vector<cplx> values_;
  Side side_;
};

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(cplx scale, const Field& f);

}  // namespace nlslab
