#pragma once

#include <string_view>
#include <vector>

#include "nlslab/dynamics.hpp"
#include "nlslab/grid.hpp"

namespace nlslab {

/// Exponents of a mixed space-time norm L^q_t L^r_x; either may be kInfinity.
struct LebesguePair {
  double q;
  double r;
  bool operator==(const LebesguePair&) const = default;
};

/// Exact admissibility test. In 2D: 1/q + 1/r = 1/2 with (q, r) != (2, inf);
/// in 1D: 2/q + 1/r = 1/2. Reciprocals are recovered as exact rationals, so
/// exponents such as 8/3 are accepted. Throws for exponents below 2.
bool is_admissible(double q, double r, int dim);

/// A pair checked against is_admissible at construction.
class AdmissiblePair {
 public:
  AdmissiblePair(double q, double r, int dim);
  double q() const noexcept { return pair_.q; }
  double r() const noexcept { return pair_.r; }
  int dim() const noexcept { return dim_; }
  LebesguePair pair() const noexcept { return pair_; }

 private:
  LebesguePair pair_;
  int dim_;
};

/// Left-endpoint time quadrature of ||u||_{L^q_t L^r_x}.
class SpaceTimeAccumulator {
 public:
  explicit SpaceTimeAccumulator(LebesguePair pair, double t_begin = 0.0);

  /// Adds ||f||_r^q dt (q finite) or updates the running max (q infinite).
  void add(const Field& f, double dt);
  /// Same, for a precomputed spatial norm.
  void add_norm(double spatial_norm, double dt);

  /// The norm estimate: (sum)^{1/q}, or the running max.
  double finalize() const;
  /// finalize()^q for finite q (the "raw" integral), finalize() otherwise.
  double integral() const;

  LebesguePair pair() const noexcept { return pair_; }
  double t_begin() const noexcept { return t_begin_; }
  double t_end() const noexcept { return t_end_; }

 private:
  LebesguePair pair_;
  double t_begin_;
  double t_end_;
  double value_ = 0.0;
};

/// Functional form of SpaceTimeAccumulator::add.
SpaceTimeAccumulator accumulate(SpaceTimeAccumulator acc, const Field& f, double dt);

enum class MorawetzVariant { classical_L4L8, classical_L5, improved_L4, d1_L8, d1_improved_L6 };

std::string_view to_string(MorawetzVariant variant);
int variant_dimension(MorawetzVariant variant);

struct MorawetzTerms {
  double lhs = 0.0;          ///< the space-time norm raised to its power
  double rhs = 0.0;          ///< the controlling product of mass and H^{1/2} norms
  double h_half_max = 0.0;   ///< max over samples of ||u||_{H^{1/2}} (homogeneous)
  double mass_norm = 0.0;    ///< ||u(t_0)||_2
  double duration = 0.0;
  double ratio() const { return lhs / rhs; }
};

/// Evaluates both sides of the interaction Morawetz bound selected by
/// `variant`:
///   classical_L4L8 (2D)  ||u||_{L^4L^8}^4       vs  H^2 M^2
///   classical_L5   (2D)  ||u||_{L^5L^5}^5       vs  H^2 M^3
///   improved_L4    (2D)  ||u||_{L^4L^4}^4       vs  T^{1/3} (H^2 M^2 + M^4)
///   d1_L8          (1D)  ||u||_{L^8L^8}^8       vs  H^2 M^6
///   d1_improved_L6 (1D)  ||u||_{L^6L^6}^6       vs  T^{1/3} (M^4 H^2 + M^6)
/// with H = sup_t ||u||_{H^{1/2}}, M = ||u(t_0)||_2 and T the interval length.
MorawetzTerms morawetz_terms(const TimeSeries& series, MorawetzVariant variant);
double morawetz_ratio(const TimeSeries& series, MorawetzVariant variant);

/// ||e^{it Delta} f||_inf t^{d/2} / ||f||_1. Throws revival-contamination when
/// more than 1e-6 of the evolved mass sits in the boundary shell.
double dispersive_ratio(const Field& f, double t);

/// Sharp whole-space constant of the dispersive bound, (4 pi)^{-d/2}.
double dispersive_constant(int dim);

struct Subinterval {
  std::size_t first = 0;  ///< first sample index
  std::size_t last = 0;   ///< last sample index (inclusive)
  double t_begin = 0.0;
  double t_end = 0.0;
  double norm = 0.0;      ///< the L^q_t L^r_x norm over the subinterval
};

/// Greedy left-to-right partition with each piece's norm <= eta. Throws
/// indivisible-sample when one sample alone exceeds eta.
std::vector<Subinterval> split_by_smallness(const TimeSeries& series, LebesguePair norm, double eta);

}  // namespace nlslab
