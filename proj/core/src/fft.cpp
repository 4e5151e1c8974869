#include "nlslab/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "nlslab/error.hpp"

namespace nlslab::fft {

namespace {

// fftw planning is not thread safe; execution with the new-array interface is.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int dim, int n, int sign) {
    std::lock_guard lock(mutex_);
    const auto key = std::make_tuple(dim, n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    const std::size_t count = dim == 1 ? static_cast<std::size_t>(n) : static_cast<std::size_t>(n) * n;
    auto* scratch = fftw_alloc_complex(count);
    // ESTIMATE keeps the chosen algorithm, and therefore the output bits,
    // independent of timing noise.
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan plan = dim == 1 ? fftw_plan_dft_1d(n, scratch, scratch, sign, flags)
                              : fftw_plan_dft_2d(n, n, scratch, scratch, sign, flags);
    fftw_free(scratch);
    if (plan == nullptr) throw Error(ErrorCode::invalid_argument, "fftw failed to build a plan");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

int signed_of(int k, int n) { return k < n / 2 ? k : k - n; }

int index_of(int signed_k, int n) { return signed_k < 0 ? signed_k + n : signed_k; }

struct Target {
  int index;
  double weight;
};

// Where one axis coefficient lands on the other lattice.
int axis_targets(int k, int n_from, int n_to, Target out[2]) {
  const int sk = signed_of(k, n_from);
  if (n_to >= n_from) {
    if (sk == -n_from / 2 && n_to > n_from) {
      out[0] = {index_of(-n_from / 2, n_to), 0.5};
      out[1] = {index_of(n_from / 2, n_to), 0.5};
      return 2;
    }
    out[0] = {index_of(sk, n_to), 1.0};
    return 1;
  }
  if (std::abs(sk) < n_to / 2) {
    out[0] = {index_of(sk, n_to), 1.0};
    return 1;
  }
  if (std::abs(sk) == n_to / 2) {
    out[0] = {index_of(-n_to / 2, n_to), 1.0};
    return 1;
  }
  return 0;
}

}  // namespace

void execute(int dim, int n, std::span<cplx> data, Direction direction) {
  const std::size_t count = dim == 1 ? static_cast<std::size_t>(n) : static_cast<std::size_t>(n) * n;
  if (data.size() != count) throw Error(ErrorCode::invalid_argument, "fft buffer size mismatch");
  const int sign = direction == Direction::forward ? FFTW_FORWARD : FFTW_BACKWARD;
  fftw_plan plan = cache().get(dim, n, sign);
  auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, buffer, buffer);
}

std::vector<cplx> resample_spectrum(std::span<const cplx> coeffs, int dim, int n_from, int n_to) {
  const std::size_t to_count = dim == 1 ? static_cast<std::size_t>(n_to) : static_cast<std::size_t>(n_to) * n_to;
  std::vector<cplx> out(to_count);
  const double from_count = dim == 1 ? double(n_from) : double(n_from) * n_from;
  const double scale = std::sqrt(double(to_count) / from_count);
  Target ta[2];
  Target tb[2];
  if (dim == 1) {
    for (int k = 0; k < n_from; ++k) {
      const int na = axis_targets(k, n_from, n_to, ta);
      for (int i = 0; i < na; ++i) out[ta[i].index] += ta[i].weight * scale * coeffs[k];
    }
    return out;
  }
  for (int a = 0; a < n_from; ++a) {
    const int na = axis_targets(a, n_from, n_to, ta);
    if (na == 0) continue;
    for (int b = 0; b < n_from; ++b) {
      const int nb = axis_targets(b, n_from, n_to, tb);
      const cplx c = scale * coeffs[static_cast<std::size_t>(a) * n_from + b];
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
          out[static_cast<std::size_t>(ta[i].index) * n_to + tb[j].index] += ta[i].weight * tb[j].weight * c;
    }
  }
  return out;
}

}  // namespace nlslab::fft
