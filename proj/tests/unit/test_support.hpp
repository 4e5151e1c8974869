#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "nlslab/grid.hpp"
#include "nlslab/spectral.hpp"

namespace nlslab::testing {

/// Gaussian random samples, physical side.
inline Field random_field(const GridSpec& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Field f(grid);
  for (auto& v : f.values()) v = {normal(rng), normal(rng)};
  return f;
}

/// Random spectral coefficients inside |xi| <= band (Nyquist empty), returned physical.
inline Field random_band_limited(const GridSpec& grid, double band, std::uint64_t seed, bool zero_mean = false) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const auto xi = grid.frequency_magnitudes();
  const auto nyq = grid.nyquist_mask();
  Field c(grid, Side::spectral);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const cplx z{normal(rng), normal(rng)};
    if (xi[i] <= band && !nyq[i]) c[i] = z;
  }
  if (zero_mean) c[0] = 0.0;
  return to_physical(c);
}

/// c exp(i xi.x) for the lattice wavenumbers (kx, ky).
inline Field plane_wave(const GridSpec& grid, int kx, int ky, cplx c = 1.0) {
  Field f(grid);
  const double dxi = 2.0 * std::numbers::pi / grid.length();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto idx = grid.unflatten(i);
    double phase = dxi * kx * grid.position(idx[0]);
    if (grid.dim() == 2) phase += dxi * ky * grid.position(idx[1]);
    f[i] = c * std::polar(1.0, phase);
  }
  return f;
}

inline double l2(const Field& f) {
  double s = 0.0;
  for (const auto& v : f.values()) s += std::norm(v);
  return std::sqrt(s);
}

/// Plain l2 relative difference of the raw arrays (sides must agree).
inline double rel_diff(const Field& a, const Field& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  return den == 0.0 ? std::sqrt(num) : std::sqrt(num / den);
}

}  // namespace nlslab::testing
