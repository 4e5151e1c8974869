#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nlslab {

/// Coefficients of a s^2 + b s + c = 0 together with its selected root.
struct QuadraticRoot {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double root = 0.0;  ///< the largest real root; NaN when the roots are complex
  bool positive = false;

  double residual() const { return a * root * root + b * root + c; }
};

/// Largest real root computed without cancellation.
QuadraticRoot positive_root(double a, double b, double c);

/// One threshold: the regularity above which a result applies.
struct ThresholdEntry {
  std::string name;        ///< e.g. "s0"
  std::string result;      ///< which result the entry belongs to
  double value = 0.0;
  std::vector<double> candidates;  ///< the terms entering the max
  QuadraticRoot quadratic;
  bool applicable = false;
  std::string condition;   ///< the applicability condition, human readable
  std::string note;
};

/// Inputs: the dimension and the single power p, optionally with the second
/// power given either as an even integer 2k (algebraic mode) or as a general
/// p2 > p.
struct ThresholdInputs {
  int dim = 2;
  double p = 4.0;
  std::optional<int> k;
  std::optional<double> p2;
};

struct ThresholdReport {
  ThresholdInputs inputs;
  double s_c = 0.0;
  std::optional<double> s_c2;  ///< critical index of the second power
  std::vector<ThresholdEntry> entries;
  std::vector<std::string> warnings;

  const ThresholdEntry* find(const std::string& name) const;
};

/// Every critical and threshold regularity for the given exponents.
///
/// dim = 2, single power: s1, s0 (scattering, p >= 11/4), s~1, s~0
/// (global existence with polynomial growth, p > 2) and the growth exponent.
/// With k: s3, alpha, s~3 (2k > p >= 11/4, k > 1), reported with and without
/// the 5 s_c2 / (4 s_c2 + 1) term. With p2: s2 and its max (11/4 <= p < p2).
/// dim = 1: the one-dimensional analogues (p >= 17/3, p >= 4, 17/3 <= p < p2).
/// Inapplicable regimes are flagged and still reported.
ThresholdReport thresholds(const ThresholdInputs& inputs);

/// The growth exponent (1-s)/(3(s-s_c)^2 - 2(1+c s_c)(1-s)) with c = 6 in
/// 2D and 9 in 1D; the true exponent is this value plus an arbitrary epsilon.
double growth_exponent(int dim, double s, double s_c);

}  // namespace nlslab
