#pragma once

#include <vector>

#include "nlslab/dynamics.hpp"
#include "nlslab/grid.hpp"
#include "nlslab/strichartz.hpp"

namespace nlslab {

/// How m bridges 1 (at |xi| = N) and (|xi|/N)^{s-1} (at |xi| = 2N).
/// Both write m = exp(chi(|xi|/N) (s-1) log(|xi|/N)) with chi a monotone
/// step from 0 at 1 to 1 at 2:
///   mollifier  chi = 1 - lp_bump (the Littlewood-Paley family)
///   quintic    chi(1+u) = 6u^5 - 15u^4 + 10u^3
enum class Interpolant { mollifier, quintic };

/// Parameters of the smoothing operator I = I_N.
struct IMultiplierSpec {
  double cutoff = 16.0;  ///< N > 1
  double s = 0.5;        ///< target regularity in (0, 1)
  Interpolant interpolant = Interpolant::mollifier;

  void validate() const;
};

/// m(|xi|): 1 below N, (|xi|/N)^{s-1} above 2N, radial and nonincreasing.
double i_multiplier(double xi_abs, const IMultiplierSpec& spec);

Field apply_I(const Field& f, const IMultiplierSpec& spec);

struct SandwichRatios {
  double low;   ///< ||f||_{H^s} / ||I f||_{H^1}
  double high;  ///< ||I f||_{H^1} / (N^{1-s} ||f||_{H^s})
};

SandwichRatios sandwich_ratios(const Field& f, const IMultiplierSpec& spec);

/// energy(I f). Kinetic and potential parts are also exposed separately since
/// only the kinetic part is monotone in N.
double modified_energy(const Field& f, const NlsModel& model, const IMultiplierSpec& spec);
double modified_kinetic_energy(const Field& f, const IMultiplierSpec& spec);
double modified_potential_energy(const Field& f, const NlsModel& model, const IMultiplierSpec& spec);

/// f(u) evaluated on a 3/2-oversampled grid and truncated back; same side as u.
Field nonlinearity_dealiased(const Field& u, const NlsModel& model);

/// I f(u) - f(I u).
Field commutator(const Field& u, const NlsModel& model, const IMultiplierSpec& spec);
double commutator_norm(const Field& u, const NlsModel& model, const IMultiplierSpec& spec, double r);

/// d/dt E(Iu) = Re int conj(I u_t) [f(Iu) - I f(u)] with I u_t = i(Delta Iu - I f(u)).
double energy_increment_direct(const Field& u, const NlsModel& model, const IMultiplierSpec& spec);

/// The same rate after integrating by parts:
/// -Im int conj(grad Iu) . grad B - Im int conj(I f(u)) B,  B = f(Iu) - I f(u).
/// Evaluated through physical-space gradient products.
double energy_increment_ibp(const Field& u, const NlsModel& model, const IMultiplierSpec& spec);

struct ZiNormSpec {
  std::vector<LebesguePair> pairs = default_pairs();
  /// Highest dyadic band; 0 means dyadic_ceiling of the grid.
  double band_ceiling = 0.0;

  static std::vector<LebesguePair> default_pairs();
};

/// sup over pairs of (sum_N ||grad P_N I u||_{L^q_t L^r_x}^2)^{1/2}, with
/// P_1 = P_{<=1} and left-endpoint time quadrature.
double zi_norm(const TimeSeries& series, const IMultiplierSpec& spec, const ZiNormSpec& zspec = {});

}  // namespace nlslab
