#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "nlslab/grid.hpp"

namespace nlslab {

/// f(u) = lambda1 |u|^p1 u + lambda2 |u|^p2 u, defocusing couplings.
struct NlsModel {
  int dim = 2;
  double p1 = 4.0;
  double lambda1 = 1.0;
  std::optional<double> p2;
  double lambda2 = 0.0;

  static NlsModel single(int dim, double p, double lambda = 1.0);
  static NlsModel combined(int dim, double p1, double p2, double lambda1 = 1.0, double lambda2 = 1.0);

  /// Throws on p1 <= 0, p2 <= p1 or negative couplings.
  void validate() const;
  bool is_linear() const noexcept { return lambda1 == 0.0 && (!p2 || lambda2 == 0.0); }
  /// lambda1 |z|^p1 + lambda2 |z|^p2, the phase rate of the nonlinear sub-flow.
  double potential_rate(double modulus_sq) const;
  /// f(z).
  cplx apply(cplx z) const { return potential_rate(std::norm(z)) * z; }
  /// F(z) = sum lambda_j |z|^{p_j+2} / (p_j+2).
  double potential_density(double modulus_sq) const;

  bool operator==(const NlsModel&) const = default;
};

/// |z|^p from |z|^2, with cheap paths for the even integer powers.
double modulus_power(double modulus_sq, double p);

struct Sample {
  double t;
  Field field;
};

/// Field snapshots ordered in time over [t_start, t_end]; dt is the step used
/// to produce them.
struct TimeSeries {
  double t_start = 0.0;
  double t_end = 0.0;
  double dt = 0.0;
  std::vector<Sample> samples;

  bool empty() const noexcept { return samples.empty(); }
  /// Left-endpoint quadrature weights: sample j covers [t_j, t_{j+1}), the
  /// last one covers [t_last, t_end].
  std::vector<double> left_weights() const;
};

/// e^{it Delta}: spectral multiplication by exp(-i |xi|^2 t). Same side as input.
Field free_propagate(const Field& f, double t);

/// Exact flow of i u_t = f(u) for a time dt: u exp(-i dt (lambda1|u|^p1 + lambda2|u|^p2)).
Field nonlinear_phase(const Field& f, double dt, const NlsModel& model);

/// Reusable Strang integrator: half free step, full nonlinear phase, half free step.
class StrangStepper {
 public:
  StrangStepper(const GridSpec& grid, NlsModel model, double dt);

  /// Advances a physical field in place by dt.
  void step(std::vector<cplx>& u) const;
  /// Advances by an arbitrary dt (used for a final partial step).
  void step(std::vector<cplx>& u, double dt) const;

  double dt() const noexcept { return dt_; }

 private:
  void half_free(std::vector<cplx>& u, const std::vector<cplx>& phase) const;
  std::vector<cplx> make_phase(double half_dt) const;

  GridSpec grid_;
  NlsModel model_;
  double dt_;
  std::vector<cplx> half_phase_;
};

Field strang_step(const Field& f, double dt, const NlsModel& model);

using Recorder = std::function<void(double t, const Field& u)>;

struct SimulateOptions {
  double horizon = 1.0;
  double dt = 1e-3;
  /// Store a snapshot every this many steps (and always at t = 0 and at the
  /// horizon); 0 disables snapshots.
  int record_every = 0;
  /// Blow-up guard: abort once max|u| exceeds this multiple of the initial max.
  double blowup_factor = 1e6;
};

/// Marches strang_step from t = 0 to the horizon. Recorders run at t = 0 and
/// after every step. Throws NumericalAbort on non-finite values or when the
/// blow-up guard trips.
TimeSeries simulate(const Field& u0, const NlsModel& model, const SimulateOptions& options,
                    std::span<const Recorder> recorders = {});

double mass(const Field& f);
double kinetic_energy(const Field& f);  ///< 1/2 ||grad f||_2^2
double potential_energy(const Field& f, const NlsModel& model);
double energy(const Field& f, const NlsModel& model);

/// lambda^{-2/p} f(x / lambda) sampled on `target` (defaults to f's grid) by
/// trigonometric interpolation. Throws support-overflow when more than 1e-8
/// of the rescaled mass lands in the boundary shell.
Field scale_transform(const Field& f, double lambda, double p, std::optional<GridSpec> target = std::nullopt);

/// Critical Sobolev index d/2 - 2/p.
double critical_index(int dim, double p);

}  // namespace nlslab
