#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nlslab/checkpoint.hpp"
#include "nlslab/config.hpp"
#include "nlslab/error.hpp"
#include "nlslab/experiments.hpp"
#include "nlslab/fft.hpp"
#include "nlslab/report.hpp"
#include "nlslab/spectral.hpp"

namespace {

enum Exit { kPass = 0, kFailed = 1, kUsage = 2, kAbort = 3 };

struct Common {
  std::string config_path;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<int> jobs;
};

void add_common(CLI::App* app, Common& common) {
  app->add_option("--config", common.config_path, "Run configuration (key = value lines)")->check(CLI::ExistingFile);
  app->add_option("--out", common.out, "Write the CSV report here instead of stdout");
  app->add_option("--seed", common.seed, "Override the config seed");
  app->add_option("--jobs", common.jobs, "Worker threads for independent sweep points")->check(CLI::PositiveNumber);
}

nlslab::RunConfig load(const Common& common) {
  nlslab::RunConfig config = common.config_path.empty() ? nlslab::RunConfig{} : nlslab::parse_config(common.config_path);
  if (common.seed) config.seed = *common.seed;
  if (common.jobs) config.jobs = *common.jobs;
  if (!common.out.empty()) config.out = common.out;
  config.validate();
  return config;
}

int emit(const nlslab::Report& report, const std::string& out) {
  if (out.empty())
    std::cout << nlslab::render_report(report);
  else
    nlslab::write_report(report, out);
  return report.passed ? kPass : kFailed;
}

int inspect(const std::string& path) {
  const auto cp = nlslab::read_checkpoint(path);
  const auto& g = cp.field.grid();
  std::printf("dim = %d\nn = %d\nL = %s\nt = %s\nmass = %s\nmax_abs = %s\n", g.dim(), g.n(),
              nlslab::format_real(g.length()).c_str(), nlslab::format_real(cp.t).c_str(),
              nlslab::format_real(nlslab::mass(cp.field)).c_str(),
              nlslab::format_real(nlslab::max_abs(cp.field)).c_str());
  return kPass;
}

int convert(const std::string& in, const std::string& out, std::optional<int> n, const std::string& format) {
  auto cp = nlslab::read_checkpoint(in);
  nlslab::Field field = cp.field;
  if (n && *n != field.grid().n()) {
    const auto& g = field.grid();
    const nlslab::GridSpec target(g.dim(), *n, g.length());
    const nlslab::Field spec = nlslab::to_spectral(field);
    field = nlslab::to_physical(
        nlslab::Field(target, nlslab::fft::resample_spectrum(spec.values(), g.dim(), g.n(), *n), nlslab::Side::spectral));
  }
  if (format == "nlsf") {
    nlslab::write_checkpoint(field, cp.t, out);
    return kPass;
  }
  std::ofstream csv(out);
  if (!csv) throw nlslab::Error(nlslab::ErrorCode::io, "cannot write '" + out + "'");
  const auto& g = field.grid();
  csv << (g.dim() == 2 ? "x,y,re,im\n" : "x,re,im\n");
  for (std::size_t i = 0; i < field.size(); ++i) {
    const auto idx = g.unflatten(i);
    csv << nlslab::format_real(g.position(idx[0])) << ',';
    if (g.dim() == 2) csv << nlslab::format_real(g.position(idx[1])) << ',';
    csv << nlslab::format_real(field[i].real()) << ',' << nlslab::format_real(field[i].imag()) << '\n';
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nlslab: split-step NLS experiments and I-method diagnostics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", nlslab::library_version());

  Common common;

  auto* thr = app.add_subcommand("thresholds", "Critical and threshold regularities for given exponents");
  int dim = 2;
  double p = 4.0;
  std::optional<int> k;
  std::optional<double> p2;
  std::string thr_out;
  thr->add_option("--dim", dim, "Spatial dimension")->check(CLI::IsMember({1, 2}));
  thr->add_option("--p", p, "Power of the (first) nonlinearity")->check(CLI::PositiveNumber);
  thr->add_option("--k", k, "Second power given as 2k");
  thr->add_option("--p2", p2, "Second power, general form");
  thr->add_option("--out", thr_out, "Write the CSV report here instead of stdout");

  auto* sim = app.add_subcommand("simulate", "Evolve initial data and record diagnostics");
  add_common(sim, common);
  auto* sweep = app.add_subcommand("sweep-n", "Almost-conservation sweep of E(I_N u) over N");
  add_common(sweep, common);
  auto* scatter = app.add_subcommand("scatter", "Cauchy differences of the interaction representation");
  add_common(scatter, common);

  auto* check = app.add_subcommand("check", "Inequality checks");
  add_common(check, common);
  std::vector<std::string> selectors;
  check->add_option("selectors", selectors, "Subset of checks to run (default: the config list)")
      ->check(CLI::IsMember(nlslab::check_names()));

  auto* cp = app.add_subcommand("checkpoint", "Inspect or convert NLSF checkpoints");
  cp->require_subcommand(1);
  auto* cp_inspect = cp->add_subcommand("inspect", "Print the header and basic norms");
  std::string cp_in, cp_out, cp_format = "nlsf";
  std::optional<int> cp_n;
  cp_inspect->add_option("path", cp_in)->required()->check(CLI::ExistingFile);
  auto* cp_convert = cp->add_subcommand("convert", "Resample and/or export a checkpoint");
  cp_convert->add_option("input", cp_in)->required()->check(CLI::ExistingFile);
  cp_convert->add_option("output", cp_out)->required();
  cp_convert->add_option("--n", cp_n, "Target points per axis (spectral resampling)");
  cp_convert->add_option("--format", cp_format, "nlsf or csv")->check(CLI::IsMember({"nlsf", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (thr->parsed()) {
      nlslab::ThresholdInputs inputs{dim, p, k, p2};
      return emit(nlslab::run_thresholds(inputs), thr_out);
    }
    if (cp_inspect->parsed()) return inspect(cp_in);
    if (cp_convert->parsed()) return convert(cp_in, cp_out, cp_n, cp_format);

    nlslab::RunConfig config = load(common);
    if (sim->parsed()) return emit(nlslab::run_simulate(config), config.out);
    if (sweep->parsed()) return emit(nlslab::run_almost_conservation_sweep(config), config.out);
    if (scatter->parsed()) return emit(nlslab::run_scattering_cauchy(config), config.out);
    if (!selectors.empty()) config.checks = selectors;
    return emit(nlslab::run_checks(config), config.out);
  } catch (const nlslab::NumericalAbort& e) {
    std::cerr << "numerical abort: " << e.what() << " (last good t = " << e.last_good_time() << ")\n";
    return kAbort;
  } catch (const nlslab::Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case nlslab::ErrorCode::revival_contamination:
      case nlslab::ErrorCode::numerical_abort:
        return kAbort;
      case nlslab::ErrorCode::config_parse:
      case nlslab::ErrorCode::unknown_key:
      case nlslab::ErrorCode::io:
      case nlslab::ErrorCode::checkpoint_format:
        return kUsage;
      default:
        return kUsage;
    }
  }
}
