#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nlslab/dynamics.hpp"
#include "nlslab/grid.hpp"
#include "nlslab/imethod.hpp"
#include "nlslab/rough_data.hpp"

namespace nlslab {

/// Everything an experiment needs. The text form is one `key = value` per
/// line with `#` comments and comma-separated lists; the keys are exactly the
/// ones listed by config_keys().
struct RunConfig {
  // grid
  int dim = 2;
  int n = 128;
  double length = 32.0;
  // model
  double p1 = 4.0;
  double lambda1 = 1.0;
  std::optional<double> p2;
  double lambda2 = 1.0;
  std::optional<int> k;  ///< second power 2k for the threshold calculator
  // time stepping
  double dt = 1e-3;
  double horizon = 1.0;
  int record_every = 10;
  // initial data: "gaussian", "rough" or "checkpoint"
  std::string data = "rough";
  double amplitude = 1.0;
  double width = 1.0;
  std::string init_path;
  // I-method
  double cutoff = 16.0;
  double s = 0.8;
  std::vector<double> cutoff_list{4.0, 8.0, 16.0, 32.0};
  // diagnostics
  double eta = 0.1;
  double lebesgue_r = 2.0;
  std::vector<std::string> checks{"bernstein", "sandwich", "dispersive", "morawetz", "commutator"};
  std::vector<double> t_list{0.1, 0.2, 0.5, 1.0};
  std::vector<double> amplitudes{1.0, 2.0, 4.0};
  int samples = 20;
  int windows = 8;
  double revival_tol = 1e-6;
  std::uint64_t seed = 1;
  // output
  std::string out;
  std::string checkpoint_out;
  int jobs = 1;

  GridSpec grid() const { return GridSpec(dim, n, length); }
  NlsModel model() const;
  IMultiplierSpec imultiplier() const { return {cutoff, s, Interpolant::mollifier}; }
  RoughSpec rough() const { return {s, seed, amplitude, width}; }

  /// Throws config-parse on inconsistent values.
  void validate() const;

  bool operator==(const RunConfig&) const = default;
};

const std::vector<std::string>& config_keys();

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config(const std::string& path);

/// Every key with its current value, in config_keys() order.
std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& config);
std::string write_config_text(const RunConfig& config);
void write_config(const RunConfig& config, const std::string& path);

/// Shortest text that round-trips a double (17 significant digits).
std::string format_real(double value);

}  // namespace nlslab
