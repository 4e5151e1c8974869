#include "nlslab/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nlslab/error.hpp"

namespace nlslab {

QuadraticRoot positive_root(double a, double b, double c) {
  QuadraticRoot q{a, b, c, std::numeric_limits<double>::quiet_NaN(), false};
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return q;
  const double sq = std::sqrt(disc);
  // Larger root; the other one follows from Vieta when the sum cancels.
  const double big = b >= 0.0 ? (-b - sq) / (2.0 * a) : (-b + sq) / (2.0 * a);
  const double other = big != 0.0 ? c / (a * big) : (-b) / a;
  q.root = std::max(big, other);
  q.positive = q.root > 0.0;
  return q;
}

const ThresholdEntry* ThresholdReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

double growth_exponent(int dim, double s, double s_c) {
  const double c = dim == 1 ? 9.0 : 6.0;
  return (1.0 - s) / (3.0 * (s - s_c) * (s - s_c) - 2.0 * (1.0 + c * s_c) * (1.0 - s));
}

namespace {

// 3(s - s_c)^2 - 2(1 + c s_c)(1 - s) = 0 expanded.
QuadraticRoot growth_quadratic(double s_c, double c) {
  const double k = 2.0 * (1.0 + c * s_c);
  return positive_root(3.0, -6.0 * s_c + k, 3.0 * s_c * s_c - k);
}

ThresholdEntry root_entry(std::string name, std::string result, const QuadraticRoot& q, bool applicable,
                          std::string condition) {
  ThresholdEntry e;
  e.name = std::move(name);
  e.result = std::move(result);
  e.quadratic = q;
  e.value = q.root;
  e.applicable = applicable;
  e.condition = std::move(condition);
  return e;
}

ThresholdEntry max_entry(std::string name, std::string result, std::vector<double> candidates, bool applicable,
                         std::string condition) {
  ThresholdEntry e;
  e.name = std::move(name);
  e.result = std::move(result);
  e.candidates = std::move(candidates);
  e.value = -std::numeric_limits<double>::infinity();
  for (double v : e.candidates) e.value = std::max(e.value, v);
  e.applicable = applicable;
  e.condition = std::move(condition);
  return e;
}

void check_root(ThresholdReport& report, const ThresholdEntry& e) {
  if (!e.quadratic.positive) report.warnings.push_back(e.name + ": quadratic has no positive root");
  if (e.applicable && !(e.value > 0.0 && e.value < 1.0))
    report.warnings.push_back(e.name + " lies outside (0, 1) although its result applies");
}

void two_dimensional(ThresholdReport& r) {
  const double p = r.inputs.p;
  const double sc = r.s_c;

  const bool scatter_ok = p >= 11.0 / 4.0;
  auto s1 = root_entry("s1", "scattering", positive_root(1.0, 2.0 * sc, sc * sc - 4.0 * sc), scatter_ok, "p >= 11/4");
  check_root(r, s1);
  auto s0 = max_entry("s0", "scattering", {(1.0 + sc) / 2.0, p / (p + 1.0), s1.value}, scatter_ok, "p >= 11/4");
  if (!scatter_ok) r.warnings.push_back("scattering thresholds reported outside p >= 11/4");

  const bool growth_ok = p > 2.0;
  auto s1t = root_entry("s1_tilde", "global-with-growth", growth_quadratic(sc, 6.0), growth_ok, "p > 2");
  check_root(r, s1t);
  auto s0t = max_entry("s0_tilde", "global-with-growth", {(1.0 + sc) / 2.0, p / (p + 1.0), s1t.value}, growth_ok, "p > 2");
  s0t.note = "H^s growth exponent (1-s)/(3(s-s_c)^2-2(1+6s_c)(1-s)) + epsilon";
  if (!growth_ok) r.warnings.push_back("growth thresholds reported outside p > 2");
  r.entries.insert(r.entries.end(), {s1, s0, s1t, s0t});

  if (r.inputs.k) {
    const int k = *r.inputs.k;
    const double sc1 = sc;
    const double sc2 = 1.0 - 1.0 / k;
    r.s_c2 = sc2;
    const bool ok = k > 1 && 2.0 * k > p && p >= 11.0 / 4.0;
    ThresholdEntry alpha;
    alpha.name = "alpha";
    alpha.result = "combined-algebraic";
    alpha.value = 4.0 * sc2 - 9.0 * (2.0 - p / k) / (2.0 * (p + 2.0));
    alpha.applicable = ok;
    alpha.condition = "2k > p >= 11/4, k > 1";
    auto s3 = root_entry("s3", "combined-algebraic", positive_root(1.0, -(sc1 + sc2 - alpha.value), -alpha.value), ok,
                         alpha.condition);
    check_root(r, s3);
    auto s3t = max_entry("s3_tilde", "combined-algebraic",
                         {(1.0 + sc1) / 2.0, 2.0 * k / (2.0 * k + 1.0), 5.0 * sc2 / (4.0 * sc2 + 1.0), s3.value}, ok,
                         alpha.condition);
    auto s3t_short = max_entry("s3_tilde_without_5sc2", "combined-algebraic",
                               {(1.0 + sc1) / 2.0, 2.0 * k / (2.0 * k + 1.0), s3.value}, ok, alpha.condition);
    s3t_short.note = "variant omitting 5 s_c2/(4 s_c2+1)";
    if (s3t.value != s3t_short.value)
      r.warnings.push_back("s3_tilde depends on whether the 5 s_c2/(4 s_c2+1) term is included");
    if (!ok) r.warnings.push_back("combined-algebraic thresholds reported outside 2k > p >= 11/4, k > 1");
    r.entries.insert(r.entries.end(), {alpha, s3, s3t, s3t_short});
  }

  if (r.inputs.p2) {
    const double p2 = *r.inputs.p2;
    const double sc2 = 1.0 - 2.0 / p2;
    r.s_c2 = sc2;
    const bool ok = p >= 11.0 / 4.0 && p < p2;
    auto s2 = root_entry("s2", "combined-scattering", positive_root(1.0, 2.0 * sc2, sc2 * sc2 - 4.0 * sc2), ok,
                         "11/4 <= p1 < p2");
    check_root(r, s2);
    auto s2max = max_entry("s2_threshold", "combined-scattering", {(1.0 + sc2) / 2.0, p2 / (p2 + 1.0), s2.value}, ok,
                           "11/4 <= p1 < p2");
    if (!ok) r.warnings.push_back("combined-scattering thresholds reported outside 11/4 <= p1 < p2");
    r.entries.insert(r.entries.end(), {s2, s2max});
  }
}

void one_dimensional(ThresholdReport& r) {
  const double p = r.inputs.p;
  const double sc = r.s_c;

  const bool scatter_ok = p >= 17.0 / 3.0;
  auto s1 = root_entry("s1", "scattering-1d", positive_root(1.0, 5.0 * sc, sc * sc - 7.0 * sc), scatter_ok, "p >= 17/3");
  check_root(r, s1);
  auto s0 = max_entry("s0", "scattering-1d", {(1.0 + sc) / 2.0, p / (2.0 * (p + 1.0)), s1.value}, scatter_ok, "p >= 17/3");
  if (!scatter_ok) r.warnings.push_back("1D scattering thresholds reported outside p >= 17/3");

  const bool growth_ok = p >= 4.0;
  auto s1t = root_entry("s1_tilde", "global-with-growth-1d", growth_quadratic(sc, 9.0), growth_ok, "p >= 4");
  check_root(r, s1t);
  auto s0t = max_entry("s0_tilde", "global-with-growth-1d", {(1.0 + sc) / 2.0, p / (2.0 * (p + 1.0)), s1t.value},
                       growth_ok, "p >= 4");
  s0t.note = "H^s growth exponent (1-s)/(3(s-s_c)^2-2(1+9s_c)(1-s)) + epsilon";
  if (!growth_ok) r.warnings.push_back("1D growth thresholds reported outside p >= 4");
  r.entries.insert(r.entries.end(), {s1, s0, s1t, s0t});

  if (r.inputs.p2) {
    const double p2 = *r.inputs.p2;
    const double sc2 = 0.5 - 2.0 / p2;
    r.s_c2 = sc2;
    const bool ok = p >= 17.0 / 3.0 && p < p2;
    auto s2 = root_entry("s2", "combined-scattering-1d", positive_root(1.0, 5.0 * sc2, sc2 * sc2 - 7.0 * sc2), ok,
                         "17/3 <= p1 < p2");
    check_root(r, s2);
    auto s2max = max_entry("s2_threshold", "combined-scattering-1d",
                           {(1.0 + sc2) / 2.0, p2 / (2.0 * (p2 + 1.0)), s2.value}, ok, "17/3 <= p1 < p2");
    if (!ok) r.warnings.push_back("1D combined thresholds reported outside 17/3 <= p1 < p2");
    r.entries.insert(r.entries.end(), {s2, s2max});
  }
  if (r.inputs.k) r.warnings.push_back("the algebraic two-power mode is two-dimensional only; k ignored");
}

}  // namespace

ThresholdReport thresholds(const ThresholdInputs& inputs) {
  if (inputs.dim != 1 && inputs.dim != 2) throw Error(ErrorCode::invalid_dimension, "thresholds need d = 1 or 2");
  if (!(inputs.p > 0.0)) throw Error(ErrorCode::invalid_argument, "exponent p must be positive");
  if (inputs.k && *inputs.k < 1) throw Error(ErrorCode::invalid_argument, "k must be a positive integer");
  if (inputs.p2 && !(*inputs.p2 > 0.0)) throw Error(ErrorCode::invalid_argument, "exponent p2 must be positive");
  if (inputs.k && inputs.p2) throw Error(ErrorCode::invalid_argument, "give either k or p2, not both");

  ThresholdReport r;
  r.inputs = inputs;
  r.s_c = inputs.dim == 2 ? 1.0 - 2.0 / inputs.p : 0.5 - 2.0 / inputs.p;
  if (inputs.dim == 2) {
    two_dimensional(r);
  } else {
    one_dimensional(r);
  }
  return r;
}

}  // namespace nlslab
