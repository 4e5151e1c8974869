#pragma once

#include <string>

#include "nlslab/grid.hpp"

// NLSF checkpoint layout, all little endian:
//   "NLSF" | u32 version (1) | u32 d | u32 n | f64 L | f64 t | n^d x (f64 re, f64 im)
// with the physical samples in row-major order.
namespace nlslab {

inline constexpr unsigned kCheckpointVersion = 1;

struct Checkpoint {
  Field field;
  double t = 0.0;
};

std::string encode_checkpoint(const Field& field, double t);
/// Throws checkpoint-format on bad magic, unknown version, invalid grid or a
/// payload of the wrong length.
Checkpoint decode_checkpoint(const std::string& bytes);

void write_checkpoint(const Field& field, double t, const std::string& path);
Checkpoint read_checkpoint(const std::string& path);

}  // namespace nlslab
