#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nlslab/error.hpp"
#include "nlslab/imethod.hpp"
#include "nlslab/rough_data.hpp"
#include "nlslab/spectral.hpp"
#include "test_support.hpp"

using namespace nlslab;
using nlslab::testing::plane_wave;
using nlslab::testing::random_band_limited;
using nlslab::testing::random_field;
using nlslab::testing::rel_diff;

namespace {

const double kTwoPi = 2.0 * std::numbers::pi;

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log2(x[i]) / x.size();
    my += std::log2(y[i]) / y.size();
  }
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (std::log2(x[i]) - mx) * (std::log2(y[i]) - my);
    sxx += std::pow(std::log2(x[i]) - mx, 2);
  }
  return sxy / sxx;
}

}  // namespace

TEST(Multiplier, PinnedValues) {
  const IMultiplierSpec spec{16.0, 0.5};
  EXPECT_EQ(i_multiplier(0.0, spec), 1.0);
  EXPECT_EQ(i_multiplier(8.0, spec), 1.0);
  EXPECT_EQ(i_multiplier(8.0, {16.0, 0.9}), 1.0);
  EXPECT_NEAR(i_multiplier(64.0, spec), 0.5, 1e-15);
}

TEST(Multiplier, RegionsMonotoneAndBounded) {
  for (auto interp : {Interpolant::mollifier, Interpolant::quintic}) {
    for (double s : {0.2, 0.5, 0.85}) {
      const IMultiplierSpec spec{10.0, s, interp};
      double prev = 1.0;
      for (double xi = 0.0; xi < 100.0; xi += 0.01) {
        const double m = i_multiplier(xi, spec);
        EXPECT_GT(m, 0.0);
        EXPECT_LE(m, 1.0);
        EXPECT_LE(m, prev + 1e-15);
        if (xi <= 10.0) EXPECT_EQ(m, 1.0);
        if (xi >= 20.0) EXPECT_NEAR(m, std::pow(xi / 10.0, s - 1.0), 1e-15);
        prev = m;
      }
    }
  }
}

TEST(Multiplier, SpecValidation) {
  EXPECT_THROW((IMultiplierSpec{1.0, 0.5}.validate()), Error);
  EXPECT_THROW((IMultiplierSpec{4.0, 1.0}.validate()), Error);
  EXPECT_THROW((IMultiplierSpec{4.0, 0.0}.validate()), Error);
}

TEST(ApplyI, IdentityOnLowBandBitForBit) {
  const auto g = make_grid(2, 64, kTwoPi);
  const Field f = to_spectral(random_band_limited(g, 8.0, 1));
  const Field out = apply_I(f, {8.0, 0.3});
  const auto xi = g.frequency_magnitudes();
  for (std::size_t i = 0; i < f.size(); ++i)
    if (xi[i] <= 8.0) EXPECT_EQ(out[i], f[i]);
}

TEST(ApplyI, WaveAtFourNIsHalved) {
  const auto g = make_grid(2, 128, kTwoPi);
  const Field f = plane_wave(g, 0, 32, 1.7);
  EXPECT_LT(rel_diff(to_physical(apply_I(f, {8.0, 0.5})), 0.5 * f), 1e-13);
}

TEST(ApplyI, ContractsL2) {
  const auto g = make_grid(2, 64, 9.0);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Field f = random_field(g, seed);
    EXPECT_LE(lebesgue_norm(to_physical(apply_I(f, {2.0 + seed, 0.4})), 2.0), lebesgue_norm(f, 2.0));
  }
}

TEST(Sandwich, LowBandData) {
  const auto g = make_grid(2, 64, 40.0);
  const Field f = random_band_limited(g, 1.0, 3);
  const double s = 0.6;
  for (double n : {4.0, 8.0, 16.0, 32.0}) {
    const auto r = sandwich_ratios(f, {n, s});
    // <xi> in [1, 2] on the band, and I f = f.
    EXPECT_GE(r.low, std::pow(2.0, s - 1.0));
    EXPECT_LE(r.low, 1.0);
    EXPECT_GE(r.high * std::pow(n, 1.0 - s), 1.0);
    EXPECT_LE(r.high * std::pow(n, 1.0 - s), std::pow(2.0, 1.0 - s));
  }
}

TEST(Sandwich, WaveAtTwoN) {
  const auto g = make_grid(2, 64, kTwoPi);
  const double n = 8.0, s = 0.7;
  const auto r = sandwich_ratios(plane_wave(g, 16, 0), {n, s});
  const double expect = (1.0 + 2.0 * n) * std::pow(2.0, s - 1.0) / (std::pow(n, 1.0 - s) * std::pow(1.0 + 2.0 * n, s));
  EXPECT_NEAR(r.high, expect, 1e-13);
  EXPECT_NEAR(r.low * r.high, std::pow(n, s - 1.0), 1e-13);
  EXPECT_THROW(sandwich_ratios(Field(g), {n, s}), Error);
}

TEST(ModifiedEnergy, ZeroBandLimitedAndKineticMonotone) {
  const auto g = make_grid(2, 64, 16.0);
  const auto model = NlsModel::single(2, 4.0);
  EXPECT_EQ(modified_energy(Field(g), model, {4.0, 0.5}), 0.0);
  const Field low = random_band_limited(g, 4.0, 5);
  EXPECT_NEAR(modified_energy(low, model, {4.0, 0.5}) / energy(low, model), 1.0, 1e-12);
  const Field rough = rough_sample(g, {0.6, 7, 0.3, 2.0});
  double prev = 0.0;
  for (double n : {2.0, 4.0, 8.0, 16.0}) {
    const double k = modified_kinetic_energy(rough, {n, 0.6});
    EXPECT_GE(k + 1e-10, prev);
    prev = k;
  }
  EXPECT_LE(prev, kinetic_energy(rough) + 1e-10);
}

TEST(Commutator, VanishesForLowCubic) {
  const auto g = make_grid(2, 64, kTwoPi);
  const Field u = random_band_limited(g, 4.0, 8);
  EXPECT_LT(commutator_norm(u, NlsModel::single(2, 2.0), {12.5, 0.5}, 2.0), 1e-11);
}

TEST(Commutator, PlaneWaveClosedForm) {
  const auto g = make_grid(2, 64, kTwoPi);
  const cplx c(0.8, 0.3);
  const Field u = plane_wave(g, 12, 5, c);
  const IMultiplierSpec spec{4.0, 0.5};
  const double m = i_multiplier(13.0, spec);
  for (double p : {2.0, 3.0, 4.5}) {
    const Field comm = to_physical(commutator(u, NlsModel::single(2, p), spec));
    const cplx amp = (m - std::pow(m, p + 1.0)) * std::pow(std::abs(c), p) * c;
    EXPECT_LT(rel_diff(comm, plane_wave(g, 12, 5, amp)), 1e-11) << "p " << p;
  }
}

TEST(Commutator, DecaysInN) {
  const auto g = make_grid(2, 256, kTwoPi);
  const Field u = rough_sample(g, {0.6, 1, 1.0, 0.5});
  std::vector<double> ns{8, 16, 32, 64}, norms;
  for (double n : ns) norms.push_back(commutator_norm(u, NlsModel::single(2, 2.0), {n, 0.6}, 2.0));
  EXPECT_LE(slope(ns, norms), -(1.0 - 0.6) + 0.2);
}

TEST(Increment, VanishingCases) {
  const auto g = make_grid(2, 64, kTwoPi);
  const auto cubic = NlsModel::single(2, 2.0);
  const Field low = random_band_limited(g, 4.0, 9);
  EXPECT_LT(std::abs(energy_increment_direct(low, cubic, {12.5, 0.5})), 1e-11);
  EXPECT_LT(std::abs(energy_increment_ibp(low, cubic, {12.5, 0.5})), 1e-11);
  const Field rough = rough_sample(g, {0.7, 2, 0.5, 0.6});
  const IMultiplierSpec beyond{2.0 * g.max_frequency(), 0.7};
  EXPECT_LT(std::abs(energy_increment_direct(rough, NlsModel::single(2, 4.0), beyond)), 1e-12);
  EXPECT_LT(std::abs(energy_increment_ibp(rough, NlsModel::single(2, 4.0), beyond)), 1e-12);
}

TEST(Increment, TwoFormsAgree) {
  const auto g = make_grid(2, 64, kTwoPi);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Field u = rough_sample(g, {0.7, seed, 0.5, 0.6});
    const auto model = seed % 2 ? NlsModel::single(2, 2.0) : NlsModel::combined(2, 2.0, 3.5, 1.0, 0.5);
    const IMultiplierSpec spec{4.0 + seed % 4 * 4.0, 0.7};
    const double a = energy_increment_direct(u, model, spec);
    const double b = energy_increment_ibp(u, model, spec);
    EXPECT_LT(std::abs(a - b) / std::max(std::abs(a), 1e-300), 1e-9) << "seed " << seed;
  }
}

// The grid dynamics evaluate f(u) by collocation, the increment by dealiased
// products; the two agree for data whose nonlinearity is resolved.
TEST(Increment, IntegratesToEnergyChange) {
  const auto g = make_grid(2, 64, 16.0);
  const auto model = NlsModel::single(2, 2.0);
  const IMultiplierSpec spec{2.0, 0.7};
  const Field u0 = gaussian_profile(g, 1.0, 1.0);
  const double dt = 1e-4;
  // Trapezoid rule on the per-step rates.
  double integral = 0.0, prev_rate = 0.0, prev_t = 0.0;
  long calls = 0;
  Field last = u0;
  const Recorder r = [&](double t, const Field& u) {
    const double rate = energy_increment_direct(u, model, spec);
    if (calls++ > 0) integral += 0.5 * (rate + prev_rate) * (t - prev_t);
    prev_rate = rate;
    prev_t = t;
    last = u;
  };
  simulate(u0, model, {0.02, dt, 0}, std::span(&r, 1));
  const double change = modified_energy(last, model, spec) - modified_energy(u0, model, spec);
  EXPECT_LT(std::abs(integral - change) / std::abs(change), 1e-3);
}

TEST(ZiNorm, ZeroSingleSnapshotAndMonotone) {
  const auto g = make_grid(2, 64, kTwoPi);
  const IMultiplierSpec spec{8.0, 0.6};
  TimeSeries zero{0.0, 1.0, 0.1, {{0.0, Field(g)}}};
  EXPECT_EQ(zi_norm(zero, spec), 0.0);

  const Field u = rough_sample(g, {0.6, 4, 1.0, 0.6});
  TimeSeries one{0.0, 1.0, 1.0, {{0.0, u}}};
  ZiNormSpec energy_only;
  energy_only.pairs = {{kInfinity, 2.0}};
  const double z = zi_norm(one, spec, energy_only);
  const double grad = std::sqrt(2.0 * kinetic_energy(apply_I(u, spec)));
  EXPECT_GE(grad / z, 1.0 - 1e-12);
  EXPECT_LE(grad / z, std::sqrt(3.0));

  TimeSeries series = simulate(u, NlsModel::single(2, 2.0), {0.02, 1e-3, 5});
  double prev = 0.0;
  for (std::size_t k = 1; k <= series.samples.size(); ++k) {
    TimeSeries prefix{0.0, series.samples[std::min(k, series.samples.size() - 1)].t, series.dt,
                      {series.samples.begin(), series.samples.begin() + static_cast<long>(k)}};
    if (k == series.samples.size()) prefix.t_end = series.t_end;
    const double zk = zi_norm(prefix, spec);
    EXPECT_GE(zk, prev);
    prev = zk;
  }
  EXPECT_THROW(zi_norm(TimeSeries{}, spec), Error);
  ZiNormSpec bad;
  bad.pairs = {{4.0, 5.0}};
  EXPECT_THROW(zi_norm(one, spec, bad), Error);
}

TEST(Dealiasing, PolynomialNonlinearityIsExact) {
  // |u|^2 u of a field band-limited to n/6 per axis fits the 3n/2 grid exactly.
  const auto g = make_grid(1, 64, kTwoPi);
  const Field u = random_band_limited(g, 10.0, 12);
  Field direct(g);
  for (std::size_t i = 0; i < u.size(); ++i) direct[i] = std::norm(u[i]) * u[i];
  EXPECT_LT(rel_diff(to_physical(nonlinearity_dealiased(u, NlsModel::single(1, 2.0))), direct), 1e-13);
}
