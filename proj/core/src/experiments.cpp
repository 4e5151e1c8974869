#include "nlslab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "nlslab/checkpoint.hpp"
#include "nlslab/error.hpp"
#include "nlslab/imethod.hpp"
#include "nlslab/rough_data.hpp"
#include "nlslab/spectral.hpp"
#include "nlslab/strichartz.hpp"

namespace nlslab {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_reals(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ";" : "") + format_real(values[i]);
  return out;
}

IMultiplierSpec cutoff_spec(const RunConfig& config, double cutoff) {
  IMultiplierSpec spec = config.imultiplier();
  spec.cutoff = cutoff;
  return spec;
}

double variation(const std::vector<double>& values) {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi / *lo - 1.0;
}

RoughSpec sample_spec(const RunConfig& config, int index) {
  RoughSpec spec = config.rough();
  spec.seed = config.seed + static_cast<std::uint64_t>(index);
  return spec;
}

struct CheckRow {
  std::string invariant;
  std::string anchor;
  std::string parameter;
  double measured;
  double bound;
  bool pass;
};

void add_check_rows(Report& report, const std::string& check, const std::vector<CheckRow>& rows) {
  for (const auto& r : rows) {
    report.add_row({check, r.invariant, r.anchor, r.parameter, format_real(r.measured), format_real(r.bound),
                    r.pass ? "pass" : "fail"});
    report.passed = report.passed && r.pass;
  }
}

// Bernstein: the (2, inf) ratio is bounded by sqrt(#modes with |xi| < 2N) /
// (L N)^{d/2} (Cauchy-Schwarz on the band), and (2, 4) by its square root.
std::vector<CheckRow> check_bernstein(const RunConfig& config) {
  const GridSpec grid = config.grid();
  const auto xi = grid.frequency_magnitudes();
  const int d = grid.dim();
  std::vector<Field> fields;
  for (int i = 0; i < config.samples; ++i) fields.push_back(rough_sample(grid, sample_spec(config, i)));

  std::vector<CheckRow> rows;
  for (double cutoff : config.cutoff_list) {
    const auto modes = std::count_if(xi.begin(), xi.end(), [&](double x) { return x < 2.0 * cutoff; });
    const double bound_inf =
        std::sqrt(static_cast<double>(modes)) / std::pow(grid.length() * cutoff, 0.5 * d);
    double worst_inf = 0.0;
    double worst_4 = 0.0;
    for (const auto& f : fields) {
      worst_inf = std::max(worst_inf, bernstein_ratio(f, cutoff, 2.0, kInfinity));
      worst_4 = std::max(worst_4, bernstein_ratio(f, cutoff, 2.0, 4.0));
    }
    const std::string param = "N=" + format_real(cutoff);
    rows.push_back({"L2 to Linf band ratio", "Bernstein inequality", param, worst_inf, bound_inf,
                    worst_inf <= bound_inf * (1.0 + 1e-12)});
    rows.push_back({"L2 to L4 band ratio", "Bernstein inequality", param, worst_4, std::sqrt(bound_inf),
                    worst_4 <= std::sqrt(bound_inf) * (1.0 + 1e-12)});
  }
  return rows;
}

std::vector<CheckRow> check_sandwich(const RunConfig& config) {
  const GridSpec grid = config.grid();
  std::vector<Field> fields;
  for (int i = 0; i < config.samples; ++i) fields.push_back(rough_sample(grid, sample_spec(config, i)));

  std::vector<double> low(config.cutoff_list.size(), 0.0);
  std::vector<double> high(config.cutoff_list.size(), 0.0);
  std::vector<CheckRow> rows;
  for (std::size_t j = 0; j < config.cutoff_list.size(); ++j) {
    for (const auto& f : fields) {
      const auto r = sandwich_ratios(f, cutoff_spec(config, config.cutoff_list[j]));
      low[j] = std::max(low[j], r.low);
      high[j] = std::max(high[j], r.high);
    }
    const std::string param = "N=" + format_real(config.cutoff_list[j]);
    rows.push_back({"max ||f||_Hs / ||If||_H1", "I-operator sandwich", param, low[j], kInfinity, true});
    rows.push_back({"max ||If||_H1 / (N^(1-s) ||f||_Hs)", "I-operator sandwich", param, high[j], kInfinity, true});
  }
  const double v_low = variation(low);
  const double v_high = variation(high);
  rows.push_back({"lower ratio variation across N", "I-operator sandwich", "all N", v_low, 0.2, v_low < 0.2});
  rows.push_back({"upper ratio variation across N", "I-operator sandwich", "all N", v_high, 0.2, v_high < 0.2});
  return rows;
}

std::vector<CheckRow> check_dispersive(const RunConfig& config) {
  const GridSpec grid = config.grid();
  const Field f = gaussian_profile(grid, config.amplitude, config.width);
  const double constant = dispersive_constant(grid.dim());
  std::vector<CheckRow> rows;
  for (double t : config.t_list) {
    const std::string param = "t=" + format_real(t);
    const double ratio = dispersive_ratio(f, t);
    rows.push_back({"||e^{it Delta} f||_inf t^{d/2} / ||f||_1", "dispersive estimate", param, ratio, constant,
                    ratio <= constant});
    const Field exact = exact_free_gaussian(grid, config.amplitude, config.width, t);
    const Field evolved = to_physical(free_propagate(f, t));
    const double err = lebesgue_norm(evolved - exact, 2.0) / lebesgue_norm(exact, 2.0);
    rows.push_back({"grid vs closed form, relative L2", "free Gaussian evolution", param, err, 1e-6, err < 1e-6});
  }
  return rows;
}

std::vector<MorawetzVariant> variants_for(int dim) {
  if (dim == 1) return {MorawetzVariant::d1_L8, MorawetzVariant::d1_improved_L6};
  return {MorawetzVariant::classical_L4L8, MorawetzVariant::classical_L5, MorawetzVariant::improved_L4};
}

std::vector<CheckRow> check_morawetz(const RunConfig& config) {
  const Field base = initial_data(config);
  const auto variants = variants_for(config.dim);
  const auto& family = config.amplitudes;
  std::vector<std::vector<double>> ratios(family.size());

  parallel_for(family.size(), config.jobs, [&](std::size_t i) {
    SimulateOptions options{config.horizon, config.dt, std::max(config.record_every, 1)};
    const TimeSeries series = simulate(cplx(family[i]) * base, config.model(), options);
    for (auto v : variants) ratios[i].push_back(morawetz_ratio(series, v));
  });

  std::vector<CheckRow> rows;
  for (std::size_t k = 0; k < variants.size(); ++k) {
    const std::string name(to_string(variants[k]));
    std::vector<double> per_family;
    for (std::size_t i = 0; i < family.size(); ++i) {
      per_family.push_back(ratios[i][k]);
      rows.push_back({name + " lhs/rhs", "interaction Morawetz", "scale=" + format_real(family[i]), ratios[i][k],
                      kInfinity, std::isfinite(ratios[i][k])});
    }
    const double spread = variation(per_family) + 1.0;
    rows.push_back({name + " ratio spread", "interaction Morawetz", "all scales", spread, 3.0, spread < 3.0});
  }
  return rows;
}

std::vector<CheckRow> check_commutator(const RunConfig& config) {
  const Field u = initial_data(config);
  const NlsModel model = config.model();
  std::vector<double> norms(config.cutoff_list.size());
  parallel_for(norms.size(), config.jobs, [&](std::size_t j) {
    norms[j] = commutator_norm(u, model, cutoff_spec(config, config.cutoff_list[j]), config.lebesgue_r);
  });
  // Cutoffs at or beyond the lattice make I the identity; those rows are
  // reported but left out of the fit.
  const double lattice_max = u.grid().max_frequency();
  std::vector<CheckRow> rows;
  std::vector<double> fx, fy;
  for (std::size_t j = 0; j < norms.size(); ++j) {
    const double cutoff = config.cutoff_list[j];
    const bool identity = cutoff >= lattice_max;
    rows.push_back({identity ? "||I f(u) - f(Iu)||_r (I = identity)" : "||I f(u) - f(Iu)||_r", "commutator decay",
                    "N=" + format_real(cutoff), norms[j], kInfinity, std::isfinite(norms[j])});
    if (!identity && norms[j] > 0.0) {
      fx.push_back(cutoff);
      fy.push_back(norms[j]);
    }
  }
  const double slope = fx.size() >= 2 ? loglog_slope(fx, fy) : std::numeric_limits<double>::quiet_NaN();
  const double bound = -(1.0 - config.s) + 0.2;
  rows.push_back({"log-log slope in N", "commutator decay", "all N", slope, bound, slope <= bound});
  return rows;
}

}  // namespace

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
  }
  if (error) std::rethrow_exception(error);
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::invalid_argument, "slope fit needs matching samples");
  if (x.size() < 2) throw Error(ErrorCode::insufficient_data, "slope fit needs at least two points");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw Error(ErrorCode::invalid_argument, "slope fit needs positive data");
    lx.push_back(std::log2(x[i]));
    ly.push_back(std::log2(y[i]));
  }
  const double n = static_cast<double>(lx.size());
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  if (sxx == 0.0) throw Error(ErrorCode::insufficient_data, "slope fit needs distinct abscissae");
  return sxy / sxx;
}

Field initial_data(const RunConfig& config) {
  const GridSpec grid = config.grid();
  if (config.data == "gaussian") return gaussian_profile(grid, config.amplitude, config.width);
  if (config.data == "rough") return rough_sample(grid, config.rough());
  if (config.data == "checkpoint") {
    Checkpoint cp = read_checkpoint(config.init_path);
    if (!(cp.field.grid() == grid))
      throw Error(ErrorCode::config_parse, "checkpoint grid does not match dim, n and L of the config");
    return std::move(cp.field);
  }
  throw Error(ErrorCode::config_parse, "unknown data kind '" + config.data + "'");
}

void echo_config(Report& report, const RunConfig& config) {
  report.config = config_entries(config);
  ThresholdInputs inputs{config.dim, config.p1, std::nullopt, std::nullopt};
  if (config.k && *config.k > 1) inputs.k = config.k;
  if (config.p2) inputs.p2 = config.p2;
  const ThresholdReport t = thresholds(inputs);
  report.add_summary("s_c", format_real(t.s_c));
  for (const auto& e : t.entries) report.add_summary("applicable " + e.name, yes_no(e.applicable));
}

DiagnosticsRecorder::DiagnosticsRecorder(RunConfig config, int every)
    : config_(std::move(config)), model_(config_.model()), every_(std::max(every, 1)) {}

Recorder DiagnosticsRecorder::recorder() {
  return [this](double t, const Field& u) { observe(t, u); };
}

DiagnosticsRecord DiagnosticsRecorder::measure(double t, const Field& u) const {
  DiagnosticsRecord r;
  r.t = t;
  r.mass = mass(u);
  r.energy = energy(u, model_);
  r.modified_energy = modified_energy(u, model_, config_.imultiplier());
  r.hs_norm = sobolev_norm(u, config_.s, DerivativeKind::inhomogeneous);
  r.h_half_norm = sobolev_norm(u, 0.5, DerivativeKind::homogeneous);
  r.morawetz_l5 = acc_l5_;
  r.morawetz_l4l8 = acc_l4l8_;
  r.boundary_mass = boundary_mass_fraction(u);
  r.max_abs = max_abs(u);
  return r;
}

void DiagnosticsRecorder::observe(double t, const Field& u) {
  if (calls_ > 0) {
    const double dt = t - last_t_;
    acc_l5_ += std::pow(last_l5_, 5.0) * dt;
    acc_l4l8_ += std::pow(last_l8_, 4.0) * dt;
  }
  last_t_ = t;
  last_l5_ = lebesgue_norm(u, 5.0);
  last_l8_ = lebesgue_norm(u, 8.0);
  last_recorded_ = calls_ % every_ == 0;
  if (last_recorded_) records_.push_back(measure(t, u));
  last_ = Sample{t, u};
  ++calls_;
}

void DiagnosticsRecorder::finish() {
  if (last_ && !last_recorded_) {
    records_.push_back(measure(last_->t, last_->field));
    last_recorded_ = true;
  }
}

Report run_thresholds(const ThresholdInputs& inputs) {
  const ThresholdReport t = thresholds(inputs);
  Report report;
  report.kind = "thresholds";
  report.config = {{"dim", std::to_string(inputs.dim)},
                   {"p", format_real(inputs.p)},
                   {"k", inputs.k ? std::to_string(*inputs.k) : "none"},
                   {"p2", inputs.p2 ? format_real(*inputs.p2) : "none"}};
  report.add_summary("s_c", format_real(t.s_c));
  if (t.s_c2) report.add_summary("s_c2", format_real(*t.s_c2));
  for (const auto& w : t.warnings) report.add_summary("warning", w);
  report.columns = {"name", "result", "value", "applicable", "condition", "candidates", "residual", "note"};
  for (const auto& e : t.entries) {
    const bool has_root = e.quadratic.a != 0.0;
    const double residual = has_root ? e.quadratic.residual() : 0.0;
    report.add_row({e.name, e.result, format_real(e.value), yes_no(e.applicable), e.condition,
                    join_reals(e.candidates), has_root ? format_real(residual) : "", e.note});
    if (has_root && e.quadratic.positive && !(std::abs(residual) < 1e-12)) report.passed = false;
  }
  return report;
}

Report run_simulate(const RunConfig& config) {
  config.validate();
  const Field u0 = initial_data(config);
  DiagnosticsRecorder diag(config, config.record_every);
  const Recorder rec = diag.recorder();
  simulate(u0, config.model(), SimulateOptions{config.horizon, config.dt, 0}, std::span(&rec, 1));
  diag.finish();

  Report report;
  report.kind = "simulate";
  echo_config(report, config);
  report.columns = {"t", "mass", "energy", "modified_energy", "hs_norm", "h_half_norm", "morawetz_l5",
                    "morawetz_l4l8", "boundary_mass", "max_abs"};
  for (const auto& r : diag.records())
    report.add_row({format_real(r.t), format_real(r.mass), format_real(r.energy), format_real(r.modified_energy),
                    format_real(r.hs_norm), format_real(r.h_half_norm), format_real(r.morawetz_l5),
                    format_real(r.morawetz_l4l8), format_real(r.boundary_mass), format_real(r.max_abs)});
  const auto& first = diag.records().front();
  const auto& last = diag.records().back();
  report.add_summary("mass_drift", format_real(std::abs(last.mass - first.mass) / first.mass));
  report.add_summary("energy_drift", format_real(std::abs(last.energy - first.energy) / std::abs(first.energy)));
  if (!config.checkpoint_out.empty() && diag.last_state())
    write_checkpoint(diag.last_state()->field, diag.last_state()->t, config.checkpoint_out);
  return report;
}

SweepResult almost_conservation_sweep(const RunConfig& config) {
  config.validate();
  const auto& cutoffs = config.cutoff_list;
  if (cutoffs.size() < 4) throw Error(ErrorCode::insufficient_data, "the N sweep needs at least four values");
  const GridSpec grid = config.grid();
  const NlsModel model = config.model();
  const int every = std::max(config.record_every, 1);

  std::vector<double> e0(cutoffs.size(), 0.0);
  std::vector<double> worst(cutoffs.size(), 0.0);
  long calls = 0;
  Recorder rec = [&](double, const Field& u) {
    const bool first = calls == 0;
    if (calls++ % every != 0) return;
    std::vector<double> e(cutoffs.size());
    parallel_for(cutoffs.size(), config.jobs,
                 [&](std::size_t j) { e[j] = modified_energy(u, model, cutoff_spec(config, cutoffs[j])); });
    for (std::size_t j = 0; j < cutoffs.size(); ++j) {
      if (first) e0[j] = e[j];
      worst[j] = std::max(worst[j], std::abs(e[j] - e0[j]));
    }
  };
  // The final instant is included through a dedicated last-step sample.
  Field last(grid);
  Recorder keep = [&](double, const Field& u) { last = u; };
  const std::vector<Recorder> recorders{rec, keep};
  simulate(initial_data(config), model, SimulateOptions{config.horizon, config.dt, 0}, recorders);
  if ((calls - 1) % every != 0) {
    for (std::size_t j = 0; j < cutoffs.size(); ++j)
      worst[j] = std::max(worst[j], std::abs(modified_energy(last, model, cutoff_spec(config, cutoffs[j])) - e0[j]));
  }

  SweepResult result;
  const double lattice_max = grid.max_frequency();
  std::vector<double> fx, fy;
  for (std::size_t j = 0; j < cutoffs.size(); ++j) {
    SweepPoint p{cutoffs[j], worst[j], cutoffs[j] >= lattice_max, false};
    p.fitted = !p.identity && p.delta_energy >= 1e-12;
    if (p.fitted) {
      fx.push_back(p.cutoff);
      fy.push_back(p.delta_energy);
    }
    result.points.push_back(p);
  }
  // With fewer than two fitted rows (e.g. zero couplings) there is no slope
  // and the sweep fails, but the rows are still reported.
  result.slope = fx.size() >= 2 ? loglog_slope(fx, fy) : std::numeric_limits<double>::quiet_NaN();
  result.target = -(config.s - critical_index(config.dim, config.p1));
  result.threshold = result.target + 0.2;
  result.passed = result.slope <= result.threshold;
  return result;
}

Report run_almost_conservation_sweep(const RunConfig& config) {
  const SweepResult r = almost_conservation_sweep(config);
  Report report;
  report.kind = "sweep-n";
  echo_config(report, config);
  report.add_summary("anchor", "almost conservation of E(Iu)");
  report.add_summary("slope", format_real(r.slope));
  report.add_summary("target", format_real(r.target));
  report.add_summary("threshold", format_real(r.threshold));
  report.columns = {"N", "delta_E", "identity", "fitted"};
  for (const auto& p : r.points)
    report.add_row({format_real(p.cutoff), format_real(p.delta_energy), yes_no(p.identity), yes_no(p.fitted)});
  report.passed = r.passed;
  return report;
}

ScatteringResult scattering_cauchy(const RunConfig& config) {
  config.validate();
  const long steps = std::lround(config.horizon / config.dt);
  if (std::abs(steps * config.dt - config.horizon) > 1e-9 * config.horizon || steps % config.windows != 0)
    throw Error(ErrorCode::config_parse, "T / dt must be an integer multiple of windows");
  const long stride = steps / config.windows;

  std::vector<Sample> profiles;
  long calls = 0;
  double max_shell = 0.0;
  Recorder rec = [&](double t, const Field& u) {
    const double shell = boundary_mass_fraction(u);
    max_shell = std::max(max_shell, shell);
    if (shell > config.revival_tol)
      throw Error(ErrorCode::revival_contamination, "boundary shell holds " + format_real(shell) +
                                                        " of the mass at t = " + format_real(t));
    if (calls++ % stride == 0) profiles.push_back({t, free_propagate(u, -t)});
  };
  simulate(initial_data(config), config.model(), SimulateOptions{config.horizon, config.dt, 0},
           std::span(&rec, 1));

  ScatteringResult result;
  result.max_boundary_mass = max_shell;
  for (std::size_t j = 1; j < profiles.size(); ++j)
    result.windows.push_back({profiles[j - 1].t, profiles[j].t,
                              sobolev_norm(profiles[j].field - profiles[j - 1].field, config.s,
                                           DerivativeKind::inhomogeneous)});
  const auto& w = result.windows;
  result.decreasing = w.size() >= 3 && w[w.size() - 3].difference > w[w.size() - 2].difference &&
                      w[w.size() - 2].difference > w[w.size() - 1].difference;
  return result;
}

Report run_scattering_cauchy(const RunConfig& config) {
  const ScatteringResult r = scattering_cauchy(config);
  Report report;
  report.kind = "scatter";
  echo_config(report, config);
  report.add_summary("anchor", "Cauchy differences of e^{-it Delta} u(t)");
  report.add_summary("decreasing_last_three", yes_no(r.decreasing));
  report.add_summary("max_boundary_mass", format_real(r.max_boundary_mass));
  report.columns = {"t1", "t2", "difference_Hs"};
  for (const auto& w : r.windows) report.add_row({format_real(w.t1), format_real(w.t2), format_real(w.difference)});
  report.passed = r.decreasing;
  return report;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"bernstein", "sandwich", "dispersive", "morawetz", "commutator"};
  return names;
}

Report run_checks(const RunConfig& config) {
  config.validate();
  for (const auto& name : config.checks)
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
      throw Error(ErrorCode::config_parse, "unknown check '" + name + "'");
  Report report;
  report.kind = "check";
  echo_config(report, config);
  report.columns = {"check", "invariant", "anchor", "parameter", "measured", "bound", "status"};
  for (const auto& name : config.checks) {
    if (name == "bernstein") add_check_rows(report, name, check_bernstein(config));
    else if (name == "sandwich") add_check_rows(report, name, check_sandwich(config));
    else if (name == "dispersive") add_check_rows(report, name, check_dispersive(config));
    else if (name == "morawetz") add_check_rows(report, name, check_morawetz(config));
    else add_check_rows(report, name, check_commutator(config));
  }
  return report;
}

}  // namespace nlslab
