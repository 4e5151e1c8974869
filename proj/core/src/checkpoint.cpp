#include "nlslab/checkpoint.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>

#include "nlslab/error.hpp"
#include "nlslab/spectral.hpp"

namespace nlslab {

namespace {

constexpr char kMagic[4] = {'N', 'L', 'S', 'F'};
constexpr std::size_t kHeaderSize = 4 + 4 * 3 + 8 * 2;

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xffu));
}

void put_f64(std::string& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xffu));
}

std::uint64_t get_bytes(const std::string& in, std::size_t offset, int count) {
  std::uint64_t v = 0;
  for (int i = 0; i < count; ++i) v |= std::uint64_t(static_cast<unsigned char>(in[offset + i])) << (8 * i);
  return v;
}

double get_f64(const std::string& in, std::size_t offset) { return std::bit_cast<double>(get_bytes(in, offset, 8)); }

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCode::checkpoint_format, message); }

}  // namespace

std::string encode_checkpoint(const Field& field, double t) {
  const Field u = to_physical(field);
  const auto& g = u.grid();
  std::string out(kMagic, 4);
  out.reserve(kHeaderSize + 16 * u.size());
  put_u32(out, kCheckpointVersion);
  put_u32(out, static_cast<std::uint32_t>(g.dim()));
  put_u32(out, static_cast<std::uint32_t>(g.n()));
  put_f64(out, g.length());
  put_f64(out, t);
  for (const cplx& z : u.values()) {
    put_f64(out, z.real());
    put_f64(out, z.imag());
  }
  return out;
}

Checkpoint decode_checkpoint(const std::string& bytes) {
  if (bytes.size() < kHeaderSize || std::memcmp(bytes.data(), kMagic, 4) != 0) bad("missing NLSF magic");
  const auto version = get_bytes(bytes, 4, 4);
  if (version != kCheckpointVersion) bad("unsupported checkpoint version " + std::to_string(version));
  const auto dim = static_cast<int>(get_bytes(bytes, 8, 4));
  const auto n = static_cast<int>(get_bytes(bytes, 12, 4));
  const double length = get_f64(bytes, 16);
  const double t = get_f64(bytes, 24);
  std::optional<GridSpec> grid;
  try {
    grid.emplace(dim, n, length);
  } catch (const Error& e) {
    bad(std::string("invalid grid: ") + e.what());
  }
  if (bytes.size() != kHeaderSize + 16 * grid->size()) bad("payload length does not match the grid");
  std::vector<cplx> values(grid->size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::size_t at = kHeaderSize + 16 * i;
    values[i] = {get_f64(bytes, at), get_f64(bytes, at + 8)};
  }
  return {Field(*grid, std::move(values), Side::physical), t};
}

void write_checkpoint(const Field& field, double t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot write checkpoint '" + path + "'");
  const std::string bytes = encode_checkpoint(field, t);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::io, "short write to '" + path + "'");
}

Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open checkpoint '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return decode_checkpoint(buffer.str());
}

}  // namespace nlslab
