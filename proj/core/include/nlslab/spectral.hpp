#pragma once

#include <functional>
#include <limits>

#include "nlslab/grid.hpp"

// Frequency-side operators on periodic fields.
//
// Normalization convention (the one place it is written down): the discrete
// transform is unitary on l2, c_k = M^{-1/2} sum_j u_j exp(-2 pi i j.k/n) with
// M = n^d. Physical integrals are Riemann sums with weight h^d, so
//   ||u||_{L^2}^2 = h^d sum_j |u_j|^2 = h^d sum_k |c_k|^2,
// i.e. spectral_l2_norm carries the same h^{d/2} factor as the physical norm.
namespace nlslab {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class TransformDirection { to_spectral, to_physical };

Field transform(const Field& f, TransformDirection direction);
Field to_spectral(const Field& f);  ///< no-op on spectral input
Field to_physical(const Field& f);  ///< no-op on physical input

/// Multiplies spectral coefficients by symbol(|xi|), returning a field on the
/// same side as the input.
Field apply_radial_symbol(const Field& f, const std::function<double(double)>& symbol);

enum class DerivativeKind { homogeneous, inhomogeneous };

/// |grad|^order (symbol |xi|^order) or <grad>^order (symbol (1+|xi|)^order).
/// Nyquist coefficients are zeroed for every nonzero order; order 0 is the
/// identity. Requires order >= -1; a homogeneous negative order needs a
/// vanishing zero mode.
Field frac_deriv(const Field& f, double order, DerivativeKind kind);

/// Littlewood-Paley bump: 1 on [0,1], exp(1 - 1/(1-(r-1)^2)) on (1,2), 0 beyond.
double lp_bump(double r);

struct LpBand {
  enum class Selector { leq, eq, gt };
  Selector selector;
  double cutoff;

  static LpBand leq(double n) { return {Selector::leq, n}; }
  static LpBand eq(double n) { return {Selector::eq, n}; }
  static LpBand gt(double n) { return {Selector::gt, n}; }

  double symbol(double xi_abs) const;
};

Field lp_project(const Field& f, const LpBand& band);

/// Smallest power of two >= the largest lattice frequency; bands
/// P_{<=1} + sum_{1 < N <= ceiling} P_N tile the whole lattice.
double dyadic_ceiling(const GridSpec& grid);

/// (sum |f|^r h^d)^{1/r}; r = kInfinity gives max |f|. Physical input only.
double lebesgue_norm(const Field& f, double r);

/// L^2 norm of frac_deriv(f, order, kind).
double sobolev_norm(const Field& f, double order, DerivativeKind kind);

/// sqrt(h^d sum |c_k|^2) over the spectral representation of f.
double spectral_l2_norm(const Field& f);

/// h^d sum conj(a) b, valid on either side as long as both agree.
cplx inner_product(const Field& a, const Field& b);

/// ||P_{<=N} f||_q / (N^{d/p - d/q} ||P_{<=N} f||_p).
double bernstein_ratio(const Field& f, double cutoff, double p, double q);

/// Spectral partial derivative along `axis`, same side as input.
Field partial_derivative(const Field& f, int axis);

/// Spectral Laplacian, symbol -|xi|^2 (Nyquist retained).
Field laplacian(const Field& f);

/// Fraction of the mass in the outer shell max_i |x_i| >= 3L/8.
double boundary_mass_fraction(const Field& f);

/// max |f| over physical samples.
double max_abs(const Field& f);

}  // namespace nlslab
