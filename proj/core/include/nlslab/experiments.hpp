#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlslab/config.hpp"
#include "nlslab/dynamics.hpp"
#include "nlslab/report.hpp"
#include "nlslab/thresholds.hpp"

namespace nlslab {

/// Runs fn(0), ..., fn(count-1) on up to `jobs` threads. Each index is handled
/// exactly once; callers write results into slot i, so the output order does
/// not depend on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

/// Ordinary least squares slope of log2 y against log2 x.
double loglog_slope(std::span<const double> x, std::span<const double> y);

/// Initial data selected by config.data.
Field initial_data(const RunConfig& config);

/// Fills the config echo and the threshold applicability flags for config.p1.
void echo_config(Report& report, const RunConfig& config);

struct DiagnosticsRecord {
  double t = 0.0;
  double mass = 0.0;
  double energy = 0.0;
  double modified_energy = 0.0;
  double hs_norm = 0.0;
  double h_half_norm = 0.0;
  double morawetz_l5 = 0.0;    ///< running integral of ||u||_5^5
  double morawetz_l4l8 = 0.0;  ///< running integral of ||u||_8^4
  double boundary_mass = 0.0;
  double max_abs = 0.0;
};

/// Recorder collecting one DiagnosticsRecord every `every` steps (and at the
/// final instant). The Morawetz accumulators are integrated at every step.
class DiagnosticsRecorder {
 public:
  DiagnosticsRecorder(RunConfig config, int every);
  Recorder recorder();
  /// Records the final state if the last step was not already recorded.
  void finish();
  const std::vector<DiagnosticsRecord>& records() const noexcept { return records_; }
  const std::optional<Sample>& last_state() const noexcept { return last_; }

 private:
  void observe(double t, const Field& u);
  DiagnosticsRecord measure(double t, const Field& u) const;

  RunConfig config_;
  NlsModel model_;
  int every_;
  long calls_ = 0;
  double last_t_ = 0.0;
  double last_l5_ = 0.0;
  double last_l8_ = 0.0;
  double acc_l5_ = 0.0;
  double acc_l4l8_ = 0.0;
  bool last_recorded_ = false;
  std::optional<Sample> last_;
  std::vector<DiagnosticsRecord> records_;
};

Report run_thresholds(const ThresholdInputs& inputs);
Report run_simulate(const RunConfig& config);

struct SweepPoint {
  double cutoff = 0.0;
  double delta_energy = 0.0;
  bool identity = false;  ///< I_N is the identity on the lattice
  bool fitted = false;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  double slope = 0.0;
  double target = 0.0;     ///< -(s - s_c)
  double threshold = 0.0;  ///< target + 0.2
  bool passed = false;
};

/// One trajectory, sampled every record_every steps; E(I_N u) is evaluated
/// for every N of config.cutoff_list at each sample.
SweepResult almost_conservation_sweep(const RunConfig& config);
Report run_almost_conservation_sweep(const RunConfig& config);

struct ScatteringWindow {
  double t1 = 0.0;
  double t2 = 0.0;
  double difference = 0.0;  ///< ||v(t2) - v(t1)||_{H^s}
};

struct ScatteringResult {
  std::vector<ScatteringWindow> windows;
  bool decreasing = false;  ///< strictly decreasing over the last three windows
  double max_boundary_mass = 0.0;
};

/// v(t) = e^{-it Delta} u(t) at config.windows + 1 equally spaced instants in
/// [0, T]. Throws revival-contamination once the boundary shell of u holds
/// more than config.revival_tol of the mass.
ScatteringResult scattering_cauchy(const RunConfig& config);
Report run_scattering_cauchy(const RunConfig& config);

/// Names accepted in config.checks.
const std::vector<std::string>& check_names();

/// Runs the named checks in config order; one row per named invariant.
Report run_checks(const RunConfig& config);

}  // namespace nlslab
