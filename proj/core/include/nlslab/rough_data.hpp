#pragma once

#include <array>
#include <cstdint>
#include <limits>

#include "nlslab/grid.hpp"

namespace nlslab {

/// Recipe for random H^s data below the energy space.
struct RoughSpec {
  double s = 0.8;           ///< target regularity in (0, 1)
  std::uint64_t seed = 1;
  double amplitude = 1.0;
  double width = 1.0;       ///< physical Gaussian envelope width

  void validate() const;
};

/// A exp(-|x - c|^2 / (2 sigma^2)). Throws boundary-mass when more than 1e-10
/// of the mass sits in the boundary shell.
Field gaussian_profile(const GridSpec& grid, double amplitude, double sigma, std::array<double, 2> center = {0.0, 0.0});

/// Fourier-series coefficients a_xi = amplitude <xi>^{-(s + d/2)} e^{i phi_xi}
/// with phases drawn from a std::mt19937_64 seeded by spec.seed (row-major
/// mode order, Nyquist line left empty), then multiplied by the envelope
/// exp(-|x|^2 / (2 width^2)). The result sits on the H^s borderline: in H^sigma
/// for every sigma < s and outside it for sigma > s.
Field rough_sample(const GridSpec& grid, const RoughSpec& spec);

/// Returned by measured_regularity when the spectrum decays faster than any
/// power (band-limited or analytic data).
inline constexpr double kSuperAlgebraic = std::numeric_limits<double>::infinity();

/// Regularity estimate from dyadic shells in <xi> = 1 + |xi|.
///
/// For each shell 2^j <= <xi> < 2^{j+1} (j >= 1, Nyquist excluded) the mean
/// per-mode energy e_j and mean log<xi> are collected. A power law
/// |c_xi|^2 ~ <xi>^{-(2s + d)} gives slope -(2s + d) in log e_j against
/// log<xi>, hence s_est = -(slope + d)/2. A shell that is empty (energy below
/// 1e-24 of the largest shell) means super-algebraic decay and yields
/// kSuperAlgebraic. The shell 2 <= <xi> < 4 is left out of the fit because the
/// physical envelope blurs the spectrum there. Throws insufficient-data with fewer than
/// three shells.
double measured_regularity(const Field& f);

/// Analytic free evolution of gaussian_profile(grid, A, sigma) under
/// i u_t + Delta u = 0:
///   A (sigma^2 / (sigma^2 + 2it))^{d/2} exp(-|x|^2 / (2 (sigma^2 + 2it))).
/// Throws revival-contamination once the boundary shell holds more than 1e-10
/// of the mass, the point where periodic images become visible at 1e-9.
Field exact_free_gaussian(const GridSpec& grid, double amplitude, double sigma, double t);

}  // namespace nlslab
