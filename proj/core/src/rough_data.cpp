#include "nlslab/rough_data.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "nlslab/error.hpp"
#include "nlslab/fft.hpp"
#include "nlslab/spectral.hpp"

namespace nlslab {

namespace {

double squared_radius(const GridSpec& grid, std::size_t i, std::array<double, 2> center) {
  const auto idx = grid.unflatten(i);
  const double dx = grid.position(idx[0]) - center[0];
  if (grid.dim() == 1) return dx * dx;
  const double dy = grid.position(idx[1]) - center[1];
  return dx * dx + dy * dy;
}

}  // namespace

void RoughSpec::validate() const {
  if (!(s > 0.0 && s < 1.0)) throw Error(ErrorCode::invalid_argument, "rough data regularity must lie in (0, 1)");
  if (!(amplitude > 0.0)) throw Error(ErrorCode::invalid_argument, "rough data amplitude must be positive");
  if (!(width > 0.0)) throw Error(ErrorCode::invalid_argument, "envelope width must be positive");
}

Field gaussian_profile(const GridSpec& grid, double amplitude, double sigma, std::array<double, 2> center) {
  if (!(sigma > 0.0)) throw Error(ErrorCode::invalid_argument, "Gaussian width must be positive");
  Field out(grid, Side::physical);
  const double inv = 1.0 / (2.0 * sigma * sigma);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = amplitude * std::exp(-squared_radius(grid, i, center) * inv);
  if (amplitude != 0.0) {
    const double shell = boundary_mass_fraction(out);
    if (shell > 1e-10)
      throw Error(ErrorCode::boundary_mass, "Gaussian of width " + std::to_string(sigma) + " leaves " +
                                                std::to_string(shell) + " of its mass in the boundary shell");
  }
  return out;
}

Field rough_sample(const GridSpec& grid, const RoughSpec& spec) {
  spec.validate();
  const int d = grid.dim();
  const auto xi = grid.frequency_magnitudes();
  const auto nyquist = grid.nyquist_mask();
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);

  std::vector<cplx> coeffs(grid.size());
  const double decay = spec.s + 0.5 * d;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const double angle = phase(rng);
    if (nyquist[i]) continue;
    coeffs[i] = std::polar(spec.amplitude * std::pow(1.0 + xi[i], -decay), angle);
  }
  // Fourier series u(x) = sum a_xi e^{i xi (x + L/2)}: the plain inverse DFT.
  fft::execute(d, grid.n(), coeffs, fft::Direction::inverse);

  Field out(grid, std::move(coeffs), Side::physical);
  const double inv = 1.0 / (2.0 * spec.width * spec.width);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= std::exp(-squared_radius(grid, i, {0.0, 0.0}) * inv);
  return out;
}

double measured_regularity(const Field& f) {
  const Field spec = to_spectral(f);
  const GridSpec& grid = spec.grid();
  const auto xi = grid.frequency_magnitudes();
  const auto nyquist = grid.nyquist_mask();
  const int d = grid.dim();

  struct Shell {
    double energy = 0.0;
    double log_bracket = 0.0;
    int count = 0;
  };
  std::vector<Shell> shells;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (nyquist[i]) continue;
    const double bracket = 1.0 + xi[i];
    const int j = static_cast<int>(std::floor(std::log2(bracket)));
    if (j < 1) continue;
    if (static_cast<int>(shells.size()) <= j) shells.resize(j + 1);
    shells[j].energy += std::norm(spec[i]);
    shells[j].log_bracket += std::log(bracket);
    shells[j].count += 1;
  }

  std::vector<double> xs;
  std::vector<double> ys;
  double largest = 0.0;
  for (const auto& sh : shells)
    if (sh.count > 0) largest = std::max(largest, sh.energy / sh.count);
  if (!(largest > 0.0)) throw Error(ErrorCode::degenerate_input, "no spectral energy above <xi> = 2");
  bool empty_shell = false;
  for (std::size_t j = 0; j < shells.size(); ++j) {
    const auto& sh = shells[j];
    if (sh.count < 4) continue;
    const double mean = sh.energy / sh.count;
    if (mean < 1e-24 * largest) {
      empty_shell = true;
      continue;
    }
    if (j < 2) continue;
    xs.push_back(sh.log_bracket / sh.count);
    ys.push_back(std::log(mean));
  }
  if (empty_shell) return kSuperAlgebraic;
  if (xs.size() < 3) throw Error(ErrorCode::insufficient_data, "fewer than three usable dyadic shells");

  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  return -(slope + d) / 2.0;
}

Field exact_free_gaussian(const GridSpec& grid, double amplitude, double sigma, double t) {
  if (!(sigma > 0.0)) throw Error(ErrorCode::invalid_argument, "Gaussian width must be positive");
  if (t == 0.0) return gaussian_profile(grid, amplitude, sigma);
  const cplx width_sq(sigma * sigma, 2.0 * t);
  const cplx prefactor = amplitude * std::pow(sigma * sigma / width_sq, 0.5 * grid.dim());
  Field out(grid, Side::physical);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = prefactor * std::exp(-squared_radius(grid, i, {0.0, 0.0}) / (2.0 * width_sq));
  // Periodic images perturb the grid solution by about 7 * shell in relative
  // L2, so 1e-10 keeps the oracle good to about 1e-9.
  const double shell = boundary_mass_fraction(out);
  if (shell > 1e-10)
    throw Error(ErrorCode::revival_contamination,
                "free Gaussian reaches the boundary by t = " + std::to_string(t));
  return out;
}

}  // namespace nlslab
