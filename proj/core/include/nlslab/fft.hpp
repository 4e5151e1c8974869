#pragma once

#include <span>
#include <vector>

#include "nlslab/grid.hpp"

// Thin FFTW wrapper. Lengths here are arbitrary (the oversampled grids used
// for nonlinear products are 3n/2 per axis), so this layer works on raw
// buffers rather than GridSpec.
namespace nlslab::fft {

enum class Direction { forward, inverse };

/// Unnormalized in-place DFT of a row-major cube with `n` points per axis.
/// forward uses exp(-2 pi i jk/n), inverse exp(+2 pi i jk/n).
void execute(int dim, int n, std::span<cplx> data, Direction direction);

/// Maps unitary spectral coefficients from n_from to n_to points per axis,
/// zero padding or truncating. A Nyquist coefficient is split evenly between
/// +-n/2 when padding and the two halves are folded back when truncating, so
/// pad-then-truncate is the identity. Coefficients are rescaled so that the
/// physical samples of the trigonometric interpolant are unchanged.
std::vector<cplx> resample_spectrum(std::span<const cplx> coeffs, int dim, int n_from, int n_to);

}  // namespace nlslab::fft
