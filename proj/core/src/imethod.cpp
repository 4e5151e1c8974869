#include "nlslab/imethod.hpp"

#include <algorithm>
#include <cmath>

#include "nlslab/error.hpp"
#include "nlslab/fft.hpp"
#include "nlslab/spectral.hpp"

namespace nlslab {

namespace {

double bridge_step(double r, Interpolant interpolant) {
  if (r <= 1.0) return 0.0;
  if (r >= 2.0) return 1.0;
  if (interpolant == Interpolant::mollifier) return 1.0 - lp_bump(r);
  const double u = r - 1.0;
  return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

Field multiply_by_m(const Field& f, const IMultiplierSpec& spec) {
  return apply_radial_symbol(f, [&spec](double xi) { return i_multiplier(xi, spec); });
}

Field gradient_magnitude(const Field& g) {
  const GridSpec& grid = g.grid();
  Field out(grid, Side::physical);
  for (int axis = 0; axis < grid.dim(); ++axis) {
    const Field d = to_physical(partial_derivative(g, axis));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += std::norm(d[i]);
  }
  for (auto& v : out.values()) v = std::sqrt(v.real());
  return out;
}

}  // namespace

void IMultiplierSpec::validate() const {
  if (!(cutoff > 1.0)) throw Error(ErrorCode::invalid_argument, "I-multiplier cutoff must exceed 1");
  if (!(s > 0.0 && s < 1.0)) throw Error(ErrorCode::invalid_argument, "I-multiplier regularity must lie in (0, 1)");
}

double i_multiplier(double xi_abs, const IMultiplierSpec& spec) {
  const double r = xi_abs / spec.cutoff;
  if (r <= 1.0) return 1.0;
  const double exponent = (spec.s - 1.0) * std::log(r);
  if (r >= 2.0) return std::pow(r, spec.s - 1.0);
  return std::exp(bridge_step(r, spec.interpolant) * exponent);
}

Field apply_I(const Field& f, const IMultiplierSpec& spec) {
  spec.validate();
  return multiply_by_m(f, spec);
}

SandwichRatios sandwich_ratios(const Field& f, const IMultiplierSpec& spec) {
  spec.validate();
  const double hs = sobolev_norm(f, spec.s, DerivativeKind::inhomogeneous);
  const double ih1 = sobolev_norm(apply_I(f, spec), 1.0, DerivativeKind::inhomogeneous);
  if (!(hs > 0.0) || !(ih1 > 0.0)) throw Error(ErrorCode::degenerate_input, "sandwich ratios of a zero field");
  return {hs / ih1, ih1 / (std::pow(spec.cutoff, 1.0 - spec.s) * hs)};
}

double modified_kinetic_energy(const Field& f, const IMultiplierSpec& spec) {
  return kinetic_energy(apply_I(f, spec));
}

double modified_potential_energy(const Field& f, const NlsModel& model, const IMultiplierSpec& spec) {
  return potential_energy(apply_I(f, spec), model);
}

double modified_energy(const Field& f, const NlsModel& model, const IMultiplierSpec& spec) {
  return energy(apply_I(f, spec), model);
}

Field nonlinearity_dealiased(const Field& u, const NlsModel& model) {
  const Field spec = to_spectral(u);
  const GridSpec& grid = spec.grid();
  const int d = grid.dim();
  const int n = grid.n();
  const int fine = 3 * n / 2;

  std::vector<cplx> buffer = fft::resample_spectrum(spec.values(), d, n, fine);
  const double unitary = 1.0 / std::sqrt(static_cast<double>(buffer.size()));
  fft::execute(d, fine, buffer, fft::Direction::inverse);
  for (auto& v : buffer) v = model.apply(v * unitary);
  fft::execute(d, fine, buffer, fft::Direction::forward);
  for (auto& v : buffer) v *= unitary;

  Field out(grid, fft::resample_spectrum(buffer, d, fine, n), Side::spectral);
  return u.side() == Side::spectral ? out : to_physical(out);
}

Field commutator(const Field& u, const NlsModel& model, const IMultiplierSpec& spec) {
  spec.validate();
  const Field uhat = to_spectral(u);
  const Field i_of_f = multiply_by_m(nonlinearity_dealiased(uhat, model), spec);
  const Field f_of_i = nonlinearity_dealiased(multiply_by_m(uhat, spec), model);
  const Field diff = i_of_f - f_of_i;
  return u.side() == Side::spectral ? diff : to_physical(diff);
}

double commutator_norm(const Field& u, const NlsModel& model, const IMultiplierSpec& spec, double r) {
  return lebesgue_norm(to_physical(commutator(u, model, spec)), r);
}

double energy_increment_direct(const Field& u, const NlsModel& model, const IMultiplierSpec& spec) {
  spec.validate();
  const Field uhat = to_spectral(u);
  const Field v = multiply_by_m(uhat, spec);
  const Field i_of_f = multiply_by_m(nonlinearity_dealiased(uhat, model), spec);
  const Field bracket = nonlinearity_dealiased(v, model) - i_of_f;

  const auto xi = uhat.grid().frequency_magnitudes();
  double sum = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const cplx v_t = cplx(0.0, 1.0) * (-xi[k] * xi[k] * v[k] - i_of_f[k]);
    sum += (std::conj(v_t) * bracket[k]).real();
  }
  return sum * uhat.grid().cell_volume();
}

double energy_increment_ibp(const Field& u, const NlsModel& model, const IMultiplierSpec& spec) {
  spec.validate();
  const Field uhat = to_spectral(u);
  const Field v = multiply_by_m(uhat, spec);
  const Field i_of_f = multiply_by_m(nonlinearity_dealiased(uhat, model), spec);
  const Field bracket = nonlinearity_dealiased(v, model) - i_of_f;

  const GridSpec& grid = uhat.grid();
  cplx gradient_pairing = 0.0;
  for (int axis = 0; axis < grid.dim(); ++axis) {
    gradient_pairing += inner_product(to_physical(partial_derivative(v, axis)), to_physical(partial_derivative(bracket, axis)));
  }
  const cplx source_pairing = inner_product(to_physical(i_of_f), to_physical(bracket));
  return -gradient_pairing.imag() - source_pairing.imag();
}

std::vector<LebesguePair> ZiNormSpec::default_pairs() {
  return {{kInfinity, 2.0}, {8.0, 8.0 / 3.0}, {4.0, 4.0}, {3.0, 6.0}};
}

double zi_norm(const TimeSeries& series, const IMultiplierSpec& spec, const ZiNormSpec& zspec) {
  spec.validate();
  if (series.empty()) throw Error(ErrorCode::empty_series, "Z_I norm of an empty series");
  if (zspec.pairs.empty()) throw Error(ErrorCode::invalid_argument, "Z_I norm needs at least one pair");
  const GridSpec& grid = series.samples.front().field.grid();
  for (const auto& pair : zspec.pairs) {
    if (!is_admissible(pair.q, pair.r, grid.dim()))
      throw Error(ErrorCode::invalid_argument, "Z_I pair is not admissible");
  }

  const double ceiling = zspec.band_ceiling > 0.0 ? zspec.band_ceiling : dyadic_ceiling(grid);
  std::vector<LpBand> bands{LpBand::leq(1.0)};
  for (double n = 2.0; n <= ceiling; n *= 2.0) bands.push_back(LpBand::eq(n));

  // accumulators[pair][band]
  std::vector<std::vector<SpaceTimeAccumulator>> acc(zspec.pairs.size());
  for (std::size_t p = 0; p < zspec.pairs.size(); ++p)
    acc[p].assign(bands.size(), SpaceTimeAccumulator(zspec.pairs[p], series.t_start));

  const auto weights = series.left_weights();
  for (std::size_t j = 0; j < series.samples.size(); ++j) {
    const Field v = multiply_by_m(to_spectral(series.samples[j].field), spec);
    for (std::size_t b = 0; b < bands.size(); ++b) {
      const Field grad = gradient_magnitude(lp_project(v, bands[b]));
      for (std::size_t p = 0; p < zspec.pairs.size(); ++p)
        acc[p][b].add_norm(lebesgue_norm(grad, zspec.pairs[p].r), weights[j]);
    }
  }

  double best = 0.0;
  for (const auto& per_pair : acc) {
    double sum = 0.0;
    for (const auto& a : per_pair) {
      const double v = a.finalize();
      sum += v * v;
    }
    best = std::max(best, std::sqrt(sum));
  }
  return best;
}

}  // namespace nlslab
