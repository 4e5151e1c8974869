#include "nlslab/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nlslab/error.hpp"
#include "nlslab/fft.hpp"
#include "nlslab/spectral.hpp"

namespace nlslab {

NlsModel NlsModel::single(int dim, double p, double lambda) {
  NlsModel m;
  m.dim = dim;
  m.p1 = p;
  m.lambda1 = lambda;
  m.validate();
  return m;
}

NlsModel NlsModel::combined(int dim, double p1, double p2, double lambda1, double lambda2) {
  NlsModel m;
  m.dim = dim;
  m.p1 = p1;
  m.lambda1 = lambda1;
  m.p2 = p2;
  m.lambda2 = lambda2;
  m.validate();
  return m;
}

void NlsModel::validate() const {
  if (dim != 1 && dim != 2) throw Error(ErrorCode::invalid_dimension, "model dimension must be 1 or 2");
  if (!(p1 > 0.0)) throw Error(ErrorCode::invalid_argument, "p1 must be positive");
  if (!(lambda1 >= 0.0)) throw Error(ErrorCode::invalid_argument, "couplings must be nonnegative (defocusing)");
  if (p2) {
    if (!(*p2 > p1)) throw Error(ErrorCode::invalid_argument, "p2 must exceed p1");
    if (!(lambda2 >= 0.0)) throw Error(ErrorCode::invalid_argument, "couplings must be nonnegative (defocusing)");
  }
}

double modulus_power(double modulus_sq, double p) {
  if (modulus_sq == 0.0) return 0.0;
  if (p == 2.0) return modulus_sq;
  if (p == 4.0) return modulus_sq * modulus_sq;
  if (p == 6.0) return modulus_sq * modulus_sq * modulus_sq;
  return std::pow(modulus_sq, 0.5 * p);
}

double NlsModel::potential_rate(double modulus_sq) const {
  double rate = lambda1 == 0.0 ? 0.0 : lambda1 * modulus_power(modulus_sq, p1);
  if (p2 && lambda2 != 0.0) rate += lambda2 * modulus_power(modulus_sq, *p2);
  return rate;
}

double NlsModel::potential_density(double modulus_sq) const {
  double density = lambda1 == 0.0 ? 0.0 : lambda1 * modulus_power(modulus_sq, p1 + 2.0) / (p1 + 2.0);
  if (p2 && lambda2 != 0.0) density += lambda2 * modulus_power(modulus_sq, *p2 + 2.0) / (*p2 + 2.0);
  return density;
}

std::vector<double> TimeSeries::left_weights() const {
  std::vector<double> w(samples.size());
  for (std::size_t j = 0; j < samples.size(); ++j) {
    const double next = j + 1 < samples.size() ? samples[j + 1].t : t_end;
    w[j] = next - samples[j].t;
  }
  return w;
}

Field free_propagate(const Field& f, double t) {
  if (t == 0.0) return f;
  Field spec = to_spectral(f);
  const auto xi = spec.grid().frequency_magnitudes();
  for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= std::polar(1.0, -xi[i] * xi[i] * t);
  return f.side() == Side::spectral ? spec : to_physical(spec);
}

Field nonlinear_phase(const Field& f, double dt, const NlsModel& model) {
  if (f.side() != Side::physical) throw Error(ErrorCode::side_mismatch, "nonlinear_phase needs a physical field");
  Field out = f;
  for (auto& v : out.values()) v *= std::polar(1.0, -dt * model.potential_rate(std::norm(v)));
  return out;
}

StrangStepper::StrangStepper(const GridSpec& grid, NlsModel model, double dt)
    : grid_(grid), model_(model), dt_(dt), half_phase_(make_phase(0.5 * dt)) {
  if (!(dt > 0.0)) throw Error(ErrorCode::invalid_argument, "time step must be positive");
}

std::vector<cplx> StrangStepper::make_phase(double half_dt) const {
  const auto xi = grid_.frequency_magnitudes();
  const double inv_count = 1.0 / static_cast<double>(grid_.size());
  std::vector<cplx> phase(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) phase[i] = std::polar(inv_count, -xi[i] * xi[i] * half_dt);
  return phase;
}

void StrangStepper::half_free(std::vector<cplx>& u, const std::vector<cplx>& phase) const {
  fft::execute(grid_.dim(), grid_.n(), u, fft::Direction::forward);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] *= phase[i];
  fft::execute(grid_.dim(), grid_.n(), u, fft::Direction::inverse);
}

void StrangStepper::step(std::vector<cplx>& u) const {
  half_free(u, half_phase_);
  if (!model_.is_linear()) {
    for (auto& v : u) v *= std::polar(1.0, -dt_ * model_.potential_rate(std::norm(v)));
  }
  half_free(u, half_phase_);
}

void StrangStepper::step(std::vector<cplx>& u, double dt) const {
  if (dt == dt_) {
    step(u);
    return;
  }
  const auto phase = make_phase(0.5 * dt);
  half_free(u, phase);
  if (!model_.is_linear()) {
    for (auto& v : u) v *= std::polar(1.0, -dt * model_.potential_rate(std::norm(v)));
  }
  half_free(u, phase);
}

Field strang_step(const Field& f, double dt, const NlsModel& model) {
  if (f.side() != Side::physical) throw Error(ErrorCode::side_mismatch, "strang_step needs a physical field");
  StrangStepper stepper(f.grid(), model, dt);
  Field out = f;
  stepper.step(out.data());
  return out;
}

TimeSeries simulate(const Field& u0, const NlsModel& model, const SimulateOptions& options,
                    std::span<const Recorder> recorders) {
  if (!(options.horizon > 0.0)) throw Error(ErrorCode::invalid_argument, "horizon must be positive");
  if (!(options.dt > 0.0)) throw Error(ErrorCode::invalid_argument, "time step must be positive");
  model.validate();
  if (model.dim != u0.grid().dim()) throw Error(ErrorCode::invalid_argument, "model and field dimensions differ");

  Field u = to_physical(u0);
  const StrangStepper stepper(u.grid(), model, options.dt);

  const double ratio = options.horizon / options.dt;
  auto full_steps = static_cast<long long>(std::floor(ratio + 1e-9));
  double remainder = options.horizon - static_cast<double>(full_steps) * options.dt;
  if (remainder <= 1e-12 * options.horizon) remainder = 0.0;
  if (full_steps == 0 && remainder == 0.0) full_steps = 1;
  const long long total_steps = full_steps + (remainder > 0.0 ? 1 : 0);

  TimeSeries series;
  series.t_start = 0.0;
  series.t_end = options.horizon;
  series.dt = options.dt;

  const double guard = options.blowup_factor * std::max(max_abs(u), 1e-300);
  for (const auto& r : recorders) r(0.0, u);
  if (options.record_every > 0) series.samples.push_back({0.0, u});

  double t = 0.0;
  for (long long step = 1; step <= total_steps; ++step) {
    const bool partial = step > full_steps;
    const double last_good = t;
    stepper.step(u.data(), partial ? remainder : options.dt);
    t = partial ? options.horizon : static_cast<double>(step) * options.dt;
    if (step == total_steps) t = options.horizon;

    double peak = 0.0;
    for (const auto& v : u.values()) {
      const double a = std::abs(v);
      if (!std::isfinite(a)) throw NumericalAbort(last_good, "non-finite field value after t = " + std::to_string(last_good));
      peak = std::max(peak, a);
    }
    if (peak > guard) throw NumericalAbort(last_good, "blow-up guard tripped after t = " + std::to_string(last_good));

    for (const auto& r : recorders) r(t, u);
    if (options.record_every > 0 && (step % options.record_every == 0 || step == total_steps))
      series.samples.push_back({t, u});
  }
  return series;
}

double mass(const Field& f) {
  const double norm = spectral_l2_norm(f);
  return norm * norm;
}

double kinetic_energy(const Field& f) {
  const Field spec = to_spectral(f);
  const auto xi = spec.grid().frequency_magnitudes();
  double sum = 0.0;
  for (std::size_t i = 0; i < spec.size(); ++i) sum += xi[i] * xi[i] * std::norm(spec[i]);
  return 0.5 * sum * f.grid().cell_volume();
}

double potential_energy(const Field& f, const NlsModel& model) {
  const Field phys = to_physical(f);
  double sum = 0.0;
  for (const auto& v : phys.values()) sum += model.potential_density(std::norm(v));
  return sum * f.grid().cell_volume();
}

double energy(const Field& f, const NlsModel& model) {
  return kinetic_energy(f) + potential_energy(f, model);
}

double critical_index(int dim, double p) { return 0.5 * dim - 2.0 / p; }

namespace {

// Row-major (points x n) matrix evaluating the 1D trigonometric interpolant
// of a source axis at arbitrary offsets from its left edge.
std::vector<cplx> interpolation_matrix(const GridSpec& source, std::span<const double> offsets) {
  const int n = source.n();
  std::vector<cplx> e(offsets.size() * n);
  for (std::size_t j = 0; j < offsets.size(); ++j) {
    for (int k = 0; k < n; ++k) {
      const double xi = source.frequency(k);
      e[j * n + k] = source.is_nyquist(k) ? cplx(std::cos(xi * offsets[j]), 0.0) : std::polar(1.0, xi * offsets[j]);
    }
  }
  return e;
}

}  // namespace

Field scale_transform(const Field& f, double lambda, double p, std::optional<GridSpec> target) {
  if (!(lambda > 0.0)) throw Error(ErrorCode::invalid_argument, "scale must be positive");
  if (!(p > 0.0)) throw Error(ErrorCode::invalid_argument, "exponent must be positive");
  const GridSpec& source = f.grid();
  const GridSpec out_grid = target.value_or(source);
  if (out_grid.dim() != source.dim()) throw Error(ErrorCode::invalid_argument, "target grid dimension differs");

  const Field spec = to_spectral(f);
  const double amplitude = std::pow(lambda, -2.0 / p) / std::sqrt(static_cast<double>(source.size()));
  std::vector<double> offsets(out_grid.n());
  for (int j = 0; j < out_grid.n(); ++j) offsets[j] = out_grid.position(j) / lambda + 0.5 * source.length();
  const auto e = interpolation_matrix(source, offsets);
  const int n = source.n();
  const int m = out_grid.n();

  Field out(out_grid, Side::physical);
  if (source.dim() == 1) {
    for (int j = 0; j < m; ++j) {
      cplx sum = 0.0;
      for (int k = 0; k < n; ++k) sum += e[static_cast<std::size_t>(j) * n + k] * spec[k];
      out[j] = amplitude * sum;
    }
  } else {
    // partial[a][j2] = sum_b c[a][b] e[j2][b]
    std::vector<cplx> partial(static_cast<std::size_t>(n) * m);
    for (int a = 0; a < n; ++a) {
      for (int j2 = 0; j2 < m; ++j2) {
        cplx sum = 0.0;
        const cplx* row = &e[static_cast<std::size_t>(j2) * n];
        const std::size_t base = static_cast<std::size_t>(a) * n;
        for (int b = 0; b < n; ++b) sum += spec[base + b] * row[b];
        partial[static_cast<std::size_t>(a) * m + j2] = sum;
      }
    }
    for (int j1 = 0; j1 < m; ++j1) {
      const cplx* row = &e[static_cast<std::size_t>(j1) * n];
      for (int j2 = 0; j2 < m; ++j2) {
        cplx sum = 0.0;
        for (int a = 0; a < n; ++a) sum += row[a] * partial[static_cast<std::size_t>(a) * m + j2];
        out[static_cast<std::size_t>(j1) * m + j2] = amplitude * sum;
      }
    }
  }
  const double shell = boundary_mass_fraction(out);
  if (shell > 1e-8)
    throw Error(ErrorCode::support_overflow,
                "rescaled field leaves " + std::to_string(shell) + " of its mass in the boundary shell");
  return f.side() == Side::spectral ? to_spectral(out) : out;
}

}  // namespace nlslab
