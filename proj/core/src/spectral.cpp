#include "nlslab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nlslab/error.hpp"
#include "nlslab/fft.hpp"

namespace nlslab {

namespace {

Field transform_unchecked(const Field& f, TransformDirection direction) {
  const GridSpec& grid = f.grid();
  std::vector<cplx> data = f.data();
  fft::execute(grid.dim(), grid.n(), data,
               direction == TransformDirection::to_spectral ? fft::Direction::forward : fft::Direction::inverse);
  const double scale = 1.0 / std::sqrt(static_cast<double>(grid.size()));
  for (auto& v : data) v *= scale;
  return Field(grid, std::move(data),
               direction == TransformDirection::to_spectral ? Side::spectral : Side::physical);
}

Field on_side(const Field& spectral, Side side) {
  return side == Side::spectral ? spectral : transform_unchecked(spectral, TransformDirection::to_physical);
}

void require_physical(const Field& f, const char* op) {
  if (f.side() != Side::physical) throw Error(ErrorCode::side_mismatch, std::string(op) + " needs a physical field");
}

}  // namespace

Field transform(const Field& f, TransformDirection direction) {
  const Side expected = direction == TransformDirection::to_spectral ? Side::physical : Side::spectral;
  if (f.side() != expected) throw Error(ErrorCode::side_mismatch, "transform source side does not match direction");
  return transform_unchecked(f, direction);
}

Field to_spectral(const Field& f) {
  return f.side() == Side::spectral ? f : transform_unchecked(f, TransformDirection::to_spectral);
}

Field to_physical(const Field& f) {
  return f.side() == Side::physical ? f : transform_unchecked(f, TransformDirection::to_physical);
}

Field apply_radial_symbol(const Field& f, const std::function<double(double)>& symbol) {
  Field spec = to_spectral(f);
  const auto xi = spec.grid().frequency_magnitudes();
  for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= symbol(xi[i]);
  return on_side(spec, f.side());
}

Field frac_deriv(const Field& f, double order, DerivativeKind kind) {
  if (!(order >= -1.0)) throw Error(ErrorCode::invalid_argument, "derivative order must be >= -1");
  if (order == 0.0) return f;
  Field spec = to_spectral(f);
  const GridSpec& grid = spec.grid();
  if (kind == DerivativeKind::homogeneous && order < 0.0) {
    double total = 0.0;
    for (const auto& c : spec.values()) total += std::norm(c);
    if (std::abs(spec[0]) > 1e-12 * std::sqrt(total))
      throw Error(ErrorCode::invalid_argument, "negative homogeneous order on a field with nonzero mean");
  }
  const auto xi = grid.frequency_magnitudes();
  const auto nyquist = grid.nyquist_mask();
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (nyquist[i]) {
      spec[i] = 0.0;
      continue;
    }
    if (kind == DerivativeKind::homogeneous) {
      spec[i] = xi[i] == 0.0 ? cplx(0.0) : spec[i] * std::pow(xi[i], order);
    } else {
      spec[i] *= std::pow(1.0 + xi[i], order);
    }
  }
  return on_side(spec, f.side());
}

double lp_bump(double r) {
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  const double u = r - 1.0;
  return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

double LpBand::symbol(double xi_abs) const {
  switch (selector) {
    case Selector::leq: return lp_bump(xi_abs / cutoff);
    case Selector::gt: return 1.0 - lp_bump(xi_abs / cutoff);
    case Selector::eq: return lp_bump(xi_abs / cutoff) - lp_bump(2.0 * xi_abs / cutoff);
  }
  return 0.0;
}

Field lp_project(const Field& f, const LpBand& band) {
  if (!(band.cutoff > 0.0)) throw Error(ErrorCode::invalid_argument, "band cutoff must be positive");
  return apply_radial_symbol(f, [&band](double xi) { return band.symbol(xi); });
}

double dyadic_ceiling(const GridSpec& grid) {
  double ceiling = 1.0;
  while (ceiling < grid.max_frequency()) ceiling *= 2.0;
  return ceiling;
}

double lebesgue_norm(const Field& f, double r) {
  require_physical(f, "lebesgue_norm");
  if (!(r >= 1.0)) throw Error(ErrorCode::invalid_argument, "Lebesgue exponent must be >= 1");
  if (std::isinf(r)) return max_abs(f);
  double sum = 0.0;
  if (r == 2.0) {
    for (const auto& v : f.values()) sum += std::norm(v);
    return std::sqrt(sum * f.grid().cell_volume());
  }
  for (const auto& v : f.values()) sum += std::pow(std::abs(v), r);
  return std::pow(sum * f.grid().cell_volume(), 1.0 / r);
}

double sobolev_norm(const Field& f, double order, DerivativeKind kind) {
  return lebesgue_norm(to_physical(frac_deriv(f, order, kind)), 2.0);
}

double spectral_l2_norm(const Field& f) {
  const Field spec = to_spectral(f);
  double sum = 0.0;
  for (const auto& c : spec.values()) sum += std::norm(c);
  return std::sqrt(sum * f.grid().cell_volume());
}

cplx inner_product(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid()) || a.side() != b.side())
    throw Error(ErrorCode::side_mismatch, "inner product of fields with different layouts");
  cplx sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum * a.grid().cell_volume();
}

double bernstein_ratio(const Field& f, double cutoff, double p, double q) {
  if (!(p >= 1.0) || !(q >= p)) throw Error(ErrorCode::invalid_argument, "Bernstein exponents need 1 <= p <= q");
  const Field low = to_physical(lp_project(f, LpBand::leq(cutoff)));
  const double denom_norm = lebesgue_norm(low, p);
  // Relative test: a band far above N leaves only round-off behind.
  if (!(denom_norm > 1e-12 * lebesgue_norm(to_physical(f), p)))
    throw Error(ErrorCode::degenerate_input, "projection onto the band vanishes");
  if (p == q) return 1.0;
  const int d = f.grid().dim();
  const double gain = (std::isinf(p) ? 0.0 : d / p) - (std::isinf(q) ? 0.0 : d / q);
  return lebesgue_norm(low, q) / (std::pow(cutoff, gain) * denom_norm);
}

Field partial_derivative(const Field& f, int axis) {
  const GridSpec& grid = f.grid();
  if (axis < 0 || axis >= grid.dim()) throw Error(ErrorCode::invalid_argument, "axis out of range");
  Field spec = to_spectral(f);
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const auto idx = grid.unflatten(i);
    spec[i] *= cplx(0.0, grid.frequency(idx[axis]));
  }
  return on_side(spec, f.side());
}

Field laplacian(const Field& f) {
  return apply_radial_symbol(f, [](double xi) { return -xi * xi; });
}

double boundary_mass_fraction(const Field& f) {
  require_physical(f, "boundary_mass_fraction");
  const GridSpec& grid = f.grid();
  const double edge = 0.375 * grid.length();
  double total = 0.0;
  double outer = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto idx = grid.unflatten(i);
    double reach = std::abs(grid.position(idx[0]));
    if (grid.dim() == 2) reach = std::max(reach, std::abs(grid.position(idx[1])));
    const double w = std::norm(f[i]);
    total += w;
    if (reach >= edge) outer += w;
  }
  return total > 0.0 ? outer / total : 0.0;
}

double max_abs(const Field& f) {
  double m = 0.0;
  for (const auto& v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace nlslab
