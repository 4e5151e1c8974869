#include "nlslab/strichartz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "nlslab/error.hpp"
#include "nlslab/spectral.hpp"

namespace nlslab {

namespace {

struct Rational {
  long long num;
  long long den;
};

// Continued-fraction recovery of x = num/den with a bounded denominator.
std::optional<Rational> exact_rational(double x) {
  if (x == 0.0) return Rational{0, 1};
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double rest = x;
  for (int iter = 0; iter < 40; ++iter) {
    const double a = std::floor(rest);
    const auto ai = static_cast<long long>(a);
    const long long h2 = ai * h1 + h0;
    const long long k2 = ai * k1 + k0;
    if (k2 > 1000000) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    const double approx = static_cast<double>(h1) / static_cast<double>(k1);
    if (std::abs(approx - x) <= 1e-14 * std::max(1.0, std::abs(x))) return Rational{h1, k1};
    const double frac = rest - a;
    if (frac == 0.0) break;
    rest = 1.0 / frac;
  }
  return std::nullopt;
}

std::optional<Rational> reciprocal(double x) {
  if (std::isinf(x)) return Rational{0, 1};
  return exact_rational(1.0 / x);
}

}  // namespace

bool is_admissible(double q, double r, int dim) {
  if (!(q >= 2.0) || !(r >= 2.0)) throw Error(ErrorCode::invalid_argument, "space-time exponents must be >= 2");
  if (dim != 1 && dim != 2) throw Error(ErrorCode::invalid_dimension, "dimension must be 1 or 2");
  const auto a = reciprocal(q);
  const auto b = reciprocal(r);
  if (!a || !b) return false;
  // 2/q + d/r = d/2  <=>  2 (2 a.num b.den + d b.num a.den) = d a.den b.den
  // Denominators are capped at 1e6, so every product fits in 64 bits.
  const long long lhs = 2 * (2 * a->num * b->den + dim * b->num * a->den);
  const long long rhs = dim * a->den * b->den;
  if (lhs != rhs) return false;
  if (dim == 2 && q == 2.0 && std::isinf(r)) return false;
  return true;
}

AdmissiblePair::AdmissiblePair(double q, double r, int dim) : pair_{q, r}, dim_(dim) {
  if (!is_admissible(q, r, dim))
    throw Error(ErrorCode::invalid_argument,
                "(" + std::to_string(q) + ", " + std::to_string(r) + ") is not admissible in dimension " + std::to_string(dim));
}

SpaceTimeAccumulator::SpaceTimeAccumulator(LebesguePair pair, double t_begin)
    : pair_(pair), t_begin_(t_begin), t_end_(t_begin) {
  if (!(pair.q >= 1.0) || !(pair.r >= 1.0)) throw Error(ErrorCode::invalid_argument, "exponents must be >= 1");
}

void SpaceTimeAccumulator::add(const Field& f, double dt) { add_norm(lebesgue_norm(to_physical(f), pair_.r), dt); }

void SpaceTimeAccumulator::add_norm(double spatial_norm, double dt) {
  if (!(dt >= 0.0)) throw Error(ErrorCode::invalid_argument, "time weight must be nonnegative");
  t_end_ += dt;
  if (std::isinf(pair_.q)) {
    value_ = std::max(value_, spatial_norm);
  } else {
    value_ += std::pow(spatial_norm, pair_.q) * dt;
  }
}

double SpaceTimeAccumulator::finalize() const {
  return std::isinf(pair_.q) ? value_ : std::pow(value_, 1.0 / pair_.q);
}

double SpaceTimeAccumulator::integral() const { return value_; }

SpaceTimeAccumulator accumulate(SpaceTimeAccumulator acc, const Field& f, double dt) {
  acc.add(f, dt);
  return acc;
}

std::string_view to_string(MorawetzVariant variant) {
  switch (variant) {
    case MorawetzVariant::classical_L4L8: return "classical_L4L8";
    case MorawetzVariant::classical_L5: return "classical_L5";
    case MorawetzVariant::improved_L4: return "improved_L4";
    case MorawetzVariant::d1_L8: return "d1_L8";
    case MorawetzVariant::d1_improved_L6: return "d1_improved_L6";
  }
  return "unknown";
}

int variant_dimension(MorawetzVariant variant) {
  return variant == MorawetzVariant::d1_L8 || variant == MorawetzVariant::d1_improved_L6 ? 1 : 2;
}

MorawetzTerms morawetz_terms(const TimeSeries& series, MorawetzVariant variant) {
  if (series.empty()) throw Error(ErrorCode::empty_series, "Morawetz ratio of an empty series");
  const int dim = series.samples.front().field.grid().dim();
  if (dim != variant_dimension(variant))
    throw Error(ErrorCode::invalid_argument, std::string(to_string(variant)) + " does not apply in dimension " + std::to_string(dim));

  LebesguePair pair{};
  switch (variant) {
    case MorawetzVariant::classical_L4L8: pair = {4.0, 8.0}; break;
    case MorawetzVariant::classical_L5: pair = {5.0, 5.0}; break;
    case MorawetzVariant::improved_L4: pair = {4.0, 4.0}; break;
    case MorawetzVariant::d1_L8: pair = {8.0, 8.0}; break;
    case MorawetzVariant::d1_improved_L6: pair = {6.0, 6.0}; break;
  }

  MorawetzTerms terms;
  SpaceTimeAccumulator acc(pair, series.t_start);
  const auto weights = series.left_weights();
  for (std::size_t j = 0; j < series.samples.size(); ++j) {
    const Field phys = to_physical(series.samples[j].field);
    acc.add(phys, weights[j]);
    terms.h_half_max = std::max(terms.h_half_max, sobolev_norm(phys, 0.5, DerivativeKind::homogeneous));
  }
  terms.mass_norm = lebesgue_norm(to_physical(series.samples.front().field), 2.0);
  terms.duration = series.t_end - series.t_start;
  terms.lhs = acc.integral();

  const double h2 = terms.h_half_max * terms.h_half_max;
  const double m = terms.mass_norm;
  const double t13 = std::cbrt(terms.duration);
  switch (variant) {
    case MorawetzVariant::classical_L4L8: terms.rhs = h2 * m * m; break;
    case MorawetzVariant::classical_L5: terms.rhs = h2 * m * m * m; break;
    case MorawetzVariant::improved_L4: terms.rhs = t13 * (h2 * m * m + std::pow(m, 4)); break;
    case MorawetzVariant::d1_L8: terms.rhs = h2 * std::pow(m, 6); break;
    case MorawetzVariant::d1_improved_L6: terms.rhs = t13 * (std::pow(m, 4) * h2 + std::pow(m, 6)); break;
  }
  if (!(terms.rhs > 0.0)) throw Error(ErrorCode::degenerate_input, "Morawetz bound has a vanishing right-hand side");
  return terms;
}

double morawetz_ratio(const TimeSeries& series, MorawetzVariant variant) {
  return morawetz_terms(series, variant).ratio();
}

double dispersive_constant(int dim) { return std::pow(4.0 * std::numbers::pi, -0.5 * dim); }

double dispersive_ratio(const Field& f, double t) {
  if (!(t > 0.0)) throw Error(ErrorCode::invalid_argument, "dispersive ratio needs t > 0");
  const Field phys = to_physical(f);
  const double l1 = lebesgue_norm(phys, 1.0);
  if (!(l1 > 0.0)) throw Error(ErrorCode::degenerate_input, "zero field");
  const Field evolved = to_physical(free_propagate(phys, t));
  const double shell = boundary_mass_fraction(evolved);
  if (shell > 1e-6)
    throw Error(ErrorCode::revival_contamination,
                "evolved field at t = " + std::to_string(t) + " has " + std::to_string(shell) + " of its mass at the boundary");
  return max_abs(evolved) * std::pow(t, 0.5 * phys.grid().dim()) / l1;
}

std::vector<Subinterval> split_by_smallness(const TimeSeries& series, LebesguePair norm, double eta) {
  if (!(eta > 0.0)) throw Error(ErrorCode::invalid_argument, "smallness threshold must be positive");
  if (std::isinf(norm.q)) throw Error(ErrorCode::invalid_argument, "splitting needs a finite time exponent");
  if (series.empty()) throw Error(ErrorCode::empty_series, "nothing to split");

  const auto weights = series.left_weights();
  const double budget = std::pow(eta, norm.q);
  std::vector<Subinterval> out;
  Subinterval current;
  double used = 0.0;
  bool open = false;
  for (std::size_t j = 0; j < series.samples.size(); ++j) {
    const double contribution =
        std::pow(lebesgue_norm(to_physical(series.samples[j].field), norm.r), norm.q) * weights[j];
    if (contribution > budget)
      throw Error(ErrorCode::indivisible_sample, "sample at t = " + std::to_string(series.samples[j].t) + " alone exceeds eta");
    if (open && used + contribution > budget) {
      current.norm = std::pow(used, 1.0 / norm.q);
      out.push_back(current);
      open = false;
    }
    if (!open) {
      current = Subinterval{j, j, series.samples[j].t, series.samples[j].t, 0.0};
      used = 0.0;
      open = true;
    }
    used += contribution;
    current.last = j;
    current.t_end = j + 1 < series.samples.size() ? series.samples[j + 1].t : series.t_end;
  }
  if (open) {
    current.norm = std::pow(used, 1.0 / norm.q);
    out.push_back(current);
  }
  return out;
}

}  // namespace nlslab
