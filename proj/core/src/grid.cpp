#include "nlslab/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nlslab/error.hpp"

namespace nlslab {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void require_same_layout(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid())) throw Error(ErrorCode::invalid_argument, "fields live on different grids");
  if (a.side() != b.side()) throw Error(ErrorCode::side_mismatch, "fields live on different sides");
}

}  // namespace

GridSpec::GridSpec(int dim, int n, double length) : dim_(dim), n_(n), length_(length), size_(0) {
  if (dim != 1 && dim != 2) throw Error(ErrorCode::invalid_dimension, "dimension must be 1 or 2, got " + std::to_string(dim));
  if (n < 8 || !is_power_of_two(n))
    throw Error(ErrorCode::non_power_of_two, "points per axis must be a power of two >= 8, got " + std::to_string(n));
  if (!(length > 0.0) || !std::isfinite(length)) throw Error(ErrorCode::nonpositive_length, "box side must be positive");
  size_ = dim == 1 ? static_cast<std::size_t>(n) : static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
}

double GridSpec::dxi() const noexcept { return 2.0 * std::numbers::pi / length_; }

double GridSpec::cell_volume() const noexcept { return dim_ == 1 ? spacing() : spacing() * spacing(); }

std::array<int, 2> GridSpec::unflatten(std::size_t flat) const noexcept {
  if (dim_ == 1) return {static_cast<int>(flat), 0};
  return {static_cast<int>(flat / n_), static_cast<int>(flat % n_)};
}

std::vector<double> GridSpec::frequency_magnitudes() const {
  std::vector<double> out(size_);
  if (dim_ == 1) {
    for (int k = 0; k < n_; ++k) out[k] = std::abs(frequency(k));
    return out;
  }
  for (int a = 0; a < n_; ++a) {
    const double xa = frequency(a);
    for (int b = 0; b < n_; ++b) {
      const double xb = frequency(b);
      out[static_cast<std::size_t>(a) * n_ + b] = std::sqrt(xa * xa + xb * xb);
    }
  }
  return out;
}

std::vector<bool> GridSpec::nyquist_mask() const {
  std::vector<bool> out(size_, false);
  for (std::size_t i = 0; i < size_; ++i) {
    const auto [a, b] = unflatten(i);
    out[i] = is_nyquist(a) || (dim_ == 2 && is_nyquist(b));
  }
  return out;
}

double GridSpec::max_frequency() const noexcept {
  const double axis = dxi() * (n_ / 2);
  return dim_ == 1 ? axis : axis * std::sqrt(2.0);
}

GridSpec make_grid(int dim, int n, double length) { return GridSpec(dim, n, length); }

Field::Field(GridSpec grid, Side side) : grid_(grid), values_(grid.size()), side_(side) {}

Field::Field(GridSpec grid, std::vector<cplx> values, Side side)
    : grid_(grid), values_(std::move(values)), side_(side) {
  if (values_.size() != grid_.size())
    throw Error(ErrorCode::invalid_argument, "value count " + std::to_string(values_.size()) +
                                                 " does not match grid size " + std::to_string(grid_.size()));
}

Field operator+(const Field& a, const Field& b) {
  require_same_layout(a, b);
  Field out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Field operator-(const Field& a, const Field& b) {
  require_same_layout(a, b);
  Field out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Field operator*(cplx scale, const Field& f) {
  Field out = f;
  for (auto& v : out.values()) v *= scale;
  return out;
}

}  // namespace nlslab
