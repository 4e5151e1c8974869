#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nlslab/error.hpp"
#include "nlslab/fft.hpp"
#include "nlslab/spectral.hpp"
#include "test_support.hpp"

using namespace nlslab;
using nlslab::testing::plane_wave;
using nlslab::testing::random_band_limited;
using nlslab::testing::random_field;
using nlslab::testing::rel_diff;

namespace {

// O(M^2) unitary DFT straight from the definition.
Field naive_dft(const Field& f) {
  const GridSpec& g = f.grid();
  Field out(g, Side::spectral);
  const double scale = 1.0 / std::sqrt(static_cast<double>(g.size()));
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto kk = g.unflatten(k);
    cplx sum = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto jj = g.unflatten(j);
      const double angle = -2.0 * std::numbers::pi * (double(jj[0]) * kk[0] + double(jj[1]) * kk[1]) / g.n();
      sum += f[j] * std::polar(1.0, angle);
    }
    out[k] = sum * scale;
  }
  return out;
}

}  // namespace

TEST(Grid, TwoPiBoxHasIntegerFrequencies) {
  const auto g = make_grid(2, 8, 2.0 * std::numbers::pi);
  EXPECT_DOUBLE_EQ(g.spacing(), 2.0 * std::numbers::pi / 8.0);
  double max_component = 0.0;
  for (int k = 0; k < g.n(); ++k) max_component = std::max(max_component, std::abs(g.frequency(k)));
  EXPECT_NEAR(max_component, 4.0, 1e-15);
}

TEST(Grid, LatticeStep) {
  const auto g = make_grid(1, 16, 32.0);
  EXPECT_NEAR(g.dxi(), 0.19634954084936207, 1e-15);
}

TEST(Grid, RejectsBadParameters) {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::io;
  };
  EXPECT_EQ(code([] { make_grid(3, 8, 1.0); }), ErrorCode::invalid_dimension);
  EXPECT_EQ(code([] { make_grid(2, 12, 1.0); }), ErrorCode::non_power_of_two);
  EXPECT_EQ(code([] { make_grid(2, 4, 1.0); }), ErrorCode::non_power_of_two);
  EXPECT_EQ(code([] { make_grid(1, 8, 0.0); }), ErrorCode::nonpositive_length);
}

TEST(Grid, LatticeIsSymmetricExceptNyquist) {
  const auto g = make_grid(1, 16, 5.0);
  for (int k = 0; k < g.n(); ++k) {
    if (g.is_nyquist(k)) {
      EXPECT_EQ(g.signed_index(k), -8);
      continue;
    }
    const int mirror = (g.n() - k) % g.n();
    EXPECT_DOUBLE_EQ(g.frequency(k), -g.frequency(mirror));
  }
}

TEST(Transform, MatchesNaiveDft) {
  for (int dim : {1, 2}) {
    const auto g = make_grid(dim, 16, 3.0);
    const Field f = random_field(g, 11);
    EXPECT_LT(rel_diff(to_spectral(f), naive_dft(f)), 1e-13) << "dim " << dim;
  }
}

TEST(Transform, ZeroAndPlaneWave) {
  const auto g = make_grid(2, 16, 2.0 * std::numbers::pi);
  const Field zero(g);
  const Field zero_hat = to_spectral(zero);
  for (const auto& v : zero_hat.values()) EXPECT_EQ(v, cplx(0.0));

  const Field c = to_spectral(plane_wave(g, 3, -2));
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto idx = g.unflatten(i);
    const bool target = g.signed_index(idx[0]) == 3 && g.signed_index(idx[1]) == -2;
    if (target)
      EXPECT_NEAR(std::abs(c[i]), 16.0, 1e-12);  // sqrt(M) for a unit-modulus wave
    else
      EXPECT_LT(std::abs(c[i]), 1e-12);
  }
}

TEST(Transform, RoundTripAndSideMismatch) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = make_grid(seed % 2 ? 2 : 1, 64, 7.0);
    const Field f = random_field(g, seed);
    EXPECT_LT(rel_diff(to_physical(to_spectral(f)), f), 1e-12);
  }
  const auto g = make_grid(1, 8, 1.0);
  EXPECT_THROW(transform(Field(g, Side::spectral), TransformDirection::to_spectral), Error);
  EXPECT_THROW(transform(Field(g), TransformDirection::to_physical), Error);
}

TEST(Transform, PlancherelUnderTheConvention) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = make_grid(2, 32, 4.0 + seed);
    const Field f = random_field(g, seed);
    const double physical = lebesgue_norm(f, 2.0);
    EXPECT_NEAR(spectral_l2_norm(to_spectral(f)) / physical, 1.0, 1e-12);
  }
}

TEST(FracDeriv, PlaneWaveEigenfunction) {
  const auto g = make_grid(2, 32, 2.0 * std::numbers::pi);
  const Field f = plane_wave(g, 3, 4);
  const Field d = to_physical(frac_deriv(f, 1.0, DerivativeKind::homogeneous));
  EXPECT_LT(rel_diff(d, 5.0 * f), 1e-12);
  const Field inh = to_physical(frac_deriv(f, 0.5, DerivativeKind::inhomogeneous));
  EXPECT_LT(rel_diff(inh, std::sqrt(6.0) * f), 1e-12);
}

TEST(FracDeriv, OrderZeroIsIdentity) {
  const auto g = make_grid(2, 16, 3.0);
  const Field f = random_field(g, 3);
  EXPECT_EQ(frac_deriv(f, 0.0, DerivativeKind::homogeneous), f);
  EXPECT_EQ(frac_deriv(f, 0.0, DerivativeKind::inhomogeneous), f);
}

TEST(FracDeriv, SemigroupOnZeroMeanFields) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto g = make_grid(2, 32, 6.0);
    const Field f = random_band_limited(g, 1e9, seed, true);
    const Field two = frac_deriv(frac_deriv(f, 0.3, DerivativeKind::homogeneous), 0.7, DerivativeKind::homogeneous);
    const Field one = frac_deriv(f, 1.0, DerivativeKind::homogeneous);
    EXPECT_LT(rel_diff(two, one), 1e-12);
    const Field back = frac_deriv(frac_deriv(f, -0.5, DerivativeKind::homogeneous), 0.5, DerivativeKind::homogeneous);
    EXPECT_LT(rel_diff(to_physical(back), f), 1e-12);
  }
}

TEST(FracDeriv, ZeroModeRules) {
  const auto g = make_grid(1, 16, 2.0);
  Field constant(g);
  for (auto& v : constant.values()) v = 2.0;
  EXPECT_LT(lebesgue_norm(to_physical(frac_deriv(constant, 0.5, DerivativeKind::homogeneous)), 2.0), 1e-14);
  EXPECT_THROW(frac_deriv(constant, -0.5, DerivativeKind::homogeneous), Error);
  EXPECT_NO_THROW(frac_deriv(constant, -0.5, DerivativeKind::inhomogeneous));
  EXPECT_THROW(frac_deriv(constant, -1.5, DerivativeKind::inhomogeneous), Error);
}

TEST(LittlewoodPaley, BumpShape) {
  EXPECT_EQ(lp_bump(0.0), 1.0);
  EXPECT_EQ(lp_bump(1.0), 1.0);
  EXPECT_EQ(lp_bump(2.0), 0.0);
  EXPECT_EQ(lp_bump(3.0), 0.0);
  EXPECT_NEAR(lp_bump(1.5), std::exp(1.0 - 1.0 / 0.75), 1e-15);
  double prev = 1.0;
  for (double r = 1.0; r <= 2.0; r += 1e-3) {
    EXPECT_LE(lp_bump(r), prev);
    prev = lp_bump(r);
  }
}

TEST(LittlewoodPaley, BandLimitedIsFixed) {
  const auto g = make_grid(2, 32, 2.0 * std::numbers::pi);
  const Field f = random_band_limited(g, 4.0, 5);
  EXPECT_LT(rel_diff(to_physical(lp_project(f, LpBand::leq(4.0))), f), 1e-14);
}

TEST(LittlewoodPaley, DyadicTilingIsIdentity) {
  for (int dim : {1, 2}) {
    const auto g = make_grid(dim, 64, 2.0 * std::numbers::pi);
    const Field f = random_field(g, 17);
    Field sum = to_physical(lp_project(f, LpBand::leq(1.0)));
    for (double n = 2.0; n <= dyadic_ceiling(g); n *= 2.0) sum = sum + to_physical(lp_project(f, LpBand::eq(n)));
    EXPECT_LT(rel_diff(sum, f), 1e-12) << "dim " << dim;
  }
}

TEST(LittlewoodPaley, FarWaveIsRemoved) {
  const auto g = make_grid(2, 64, 2.0 * std::numbers::pi);
  const Field f = plane_wave(g, 16, 0);
  EXPECT_LT(lebesgue_norm(to_physical(lp_project(f, LpBand::leq(4.0))), 2.0), 1e-14);
}

TEST(LittlewoodPaley, IdempotenceAndCommutation) {
  const auto g = make_grid(2, 32, 5.0);
  const Field f = random_band_limited(g, 1e9, 23, true);
  const Field p = lp_project(f, LpBand::leq(4.0));
  // A smooth bump is idempotent only away from its transition band; in
  // general P P has symbol phi^2.
  const Field twice = lp_project(p, LpBand::leq(4.0));
  const Field squared = apply_radial_symbol(f, [](double xi) { return std::pow(lp_bump(xi / 4.0), 2); });
  EXPECT_LT(rel_diff(to_physical(twice), to_physical(squared)), 1e-12);
  const Field inside = lp_project(random_band_limited(g, 4.0, 24), LpBand::leq(4.0));
  EXPECT_LT(rel_diff(lp_project(inside, LpBand::leq(4.0)), inside), 1e-12);
  const Field a = lp_project(frac_deriv(f, 0.6, DerivativeKind::homogeneous), LpBand::eq(8.0));
  const Field b = frac_deriv(lp_project(f, LpBand::eq(8.0)), 0.6, DerivativeKind::homogeneous);
  EXPECT_LT(rel_diff(to_physical(a), to_physical(b)), 1e-12);
  const Field gt = lp_project(f, LpBand::gt(4.0));
  EXPECT_LT(rel_diff(to_physical(p) + to_physical(gt), f), 1e-12);
}

TEST(Lebesgue, ConstantFieldAndZero) {
  const auto g = make_grid(2, 16, 3.0);
  Field c(g);
  for (auto& v : c.values()) v = cplx(0.6, 0.8);
  for (double r : {1.0, 2.0, 3.5, 8.0}) EXPECT_NEAR(lebesgue_norm(c, r), std::pow(9.0, 1.0 / r), 1e-12);
  EXPECT_DOUBLE_EQ(lebesgue_norm(c, kInfinity), 1.0);
  const Field zero(g);
  for (double r : {1.0, 2.0, kInfinity}) EXPECT_EQ(lebesgue_norm(zero, r), 0.0);
  EXPECT_THROW(lebesgue_norm(c, 0.5), Error);
  EXPECT_THROW(lebesgue_norm(to_spectral(c), 2.0), Error);
}

TEST(Lebesgue, GaussianIntegral) {
  const auto g = make_grid(2, 128, 32.0);
  const double a = 1.3, sigma = 1.7;
  Field f(g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto idx = g.unflatten(i);
    const double x = g.position(idx[0]), y = g.position(idx[1]);
    f[i] = a * std::exp(-(x * x + y * y) / (2.0 * sigma * sigma));
  }
  const double exact = a * a * std::numbers::pi * sigma * sigma;
  EXPECT_NEAR(std::pow(lebesgue_norm(f, 2.0), 2) / exact, 1.0, 1e-6);
}

TEST(Sobolev, PlaneWaveAndOrderZero) {
  const auto g = make_grid(2, 32, 2.0 * std::numbers::pi);
  const Field f = plane_wave(g, 0, 4, 2.0);
  const double l2n = lebesgue_norm(f, 2.0);
  EXPECT_NEAR(sobolev_norm(f, 0.7, DerivativeKind::homogeneous), std::pow(4.0, 0.7) * l2n, 1e-11);
  const Field r = random_field(g, 4);
  EXPECT_NEAR(sobolev_norm(r, 0.0, DerivativeKind::homogeneous), lebesgue_norm(r, 2.0), 1e-12);
  EXPECT_NEAR(sobolev_norm(r, 0.0, DerivativeKind::inhomogeneous), lebesgue_norm(r, 2.0), 1e-12);
}

TEST(Sobolev, PlancherelSumOracle) {
  const auto g = make_grid(2, 32, 9.0);
  const Field f = random_band_limited(g, 10.0, 8);
  const Field c = naive_dft(f);
  const auto xi = g.frequency_magnitudes();
  double sum = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) sum += std::pow(1.0 + xi[i], 2 * 0.8) * std::norm(c[i]);
  const double oracle = std::sqrt(sum * g.cell_volume());
  EXPECT_NEAR(sobolev_norm(f, 0.8, DerivativeKind::inhomogeneous) / oracle, 1.0, 1e-12);
}

TEST(Bernstein, UnimodularWave) {
  const double len = 2.0 * std::numbers::pi;
  const auto g = make_grid(2, 32, len);
  const Field f = plane_wave(g, 2, 1);
  for (auto [p, q] : {std::pair{2.0, 4.0}, {1.0, kInfinity}, {2.0, kInfinity}}) {
    const double e = (q == kInfinity ? 0.0 : 2.0 / q) - 2.0 / p;
    EXPECT_NEAR(bernstein_ratio(f, 8.0, p, q), std::pow(len, e) * std::pow(8.0, e), 1e-12);
  }
  EXPECT_NEAR(bernstein_ratio(random_field(g, 2), 4.0, 3.0, 3.0), 1.0, 1e-12);
  EXPECT_THROW(bernstein_ratio(plane_wave(g, 12, 0), 2.0, 2.0, 4.0), Error);
}

// Generic data sits far below the Bernstein bound at large N, so uniformity is
// checked as a sup bound plus near-constancy on the extremal family P_{<=N} delta.
TEST(Bernstein, BoundedAcrossBands) {
  const auto g = make_grid(2, 128, 2.0 * std::numbers::pi);
  const auto xi = g.frequency_magnitudes();
  Field delta(g);
  delta[g.size() / 2 + g.n() / 2] = 1.0;
  double worst = 0.0, bound_sup = 0.0, lo = kInfinity, hi = 0.0;
  for (double n = 2.0; n <= 32.0; n *= 2.0) {
    double modes = 0.0;
    for (double x : xi) modes += x < 2.0 * n;
    // Cauchy-Schwarz on the band.
    const double bound = std::sqrt(modes) / (g.length() * n);
    bound_sup = std::max(bound_sup, bound);
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      const double r = bernstein_ratio(random_band_limited(g, 2.0 * n, seed), n, 2.0, kInfinity);
      EXPECT_LE(r, bound);
      worst = std::max(worst, r);
    }
    const double extremal = bernstein_ratio(delta, n, 2.0, kInfinity);
    EXPECT_LE(extremal, bound);
    lo = std::min(lo, extremal);
    hi = std::max(hi, extremal);
  }
  EXPECT_LE(worst, bound_sup);
  EXPECT_LT(bound_sup, 1.0);
  EXPECT_LT(hi / lo, 1.5);
}

TEST(Resample, PadThenTruncateIsIdentity) {
  const auto g = make_grid(2, 16, 1.0);
  const Field c = to_spectral(random_field(g, 9));
  const auto up = fft::resample_spectrum(c.values(), 2, 16, 24);
  const auto down = fft::resample_spectrum(up, 2, 24, 16);
  EXPECT_LT(rel_diff(Field(g, down, Side::spectral), c), 1e-14);
}

TEST(Resample, InterpolantKeepsSamples) {
  const auto g = make_grid(1, 16, 2.0);
  const Field f = random_band_limited(g, 1e9, 10);
  const auto up = fft::resample_spectrum(to_spectral(f).values(), 1, 16, 32);
  const Field fine = to_physical(Field(make_grid(1, 32, 2.0), up, Side::spectral));
  for (int j = 0; j < 16; ++j) EXPECT_LT(std::abs(fine[2 * j] - f[j]), 1e-13);
}

TEST(Derivatives, GradientAndLaplacianOfWave) {
  const auto g = make_grid(2, 32, 2.0 * std::numbers::pi);
  const Field f = plane_wave(g, 3, -5);
  EXPECT_LT(rel_diff(to_physical(partial_derivative(f, 0)), cplx(0.0, 3.0) * f), 1e-12);
  EXPECT_LT(rel_diff(to_physical(partial_derivative(f, 1)), cplx(0.0, -5.0) * f), 1e-12);
  EXPECT_LT(rel_diff(to_physical(laplacian(f)), cplx(-34.0) * f), 1e-12);
}

TEST(Diagnostics, BoundaryMassAndMax) {
  const auto g = make_grid(1, 16, 16.0);
  Field f(g);
  f[0] = 3.0;   // x = -8, in the shell
  f[8] = 4.0;   // x = 0
  EXPECT_NEAR(boundary_mass_fraction(f), 9.0 / 25.0, 1e-15);
  EXPECT_EQ(max_abs(f), 4.0);
}
