#include "nlslab/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "nlslab/error.hpp"

namespace nlslab {

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw Error(ErrorCode::config_parse, "line " + std::to_string(line) + ": " + message);
}

double parse_real(const std::string& v, int line) {
  if (v == "inf") return std::numeric_limits<double>::infinity();
  double out = 0.0;
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) fail(line, "expected a number, got '" + v + "'");
  return out;
}

template <typename Int>
Int parse_int(const std::string& v, int line) {
  Int out = 0;
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) fail(line, "expected an integer, got '" + v + "'");
  return out;
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  if (trim(v).empty()) return out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

std::vector<double> parse_real_list(const std::string& v, int line) {
  std::vector<double> out;
  for (const auto& item : split_list(v)) out.push_back(parse_real(item, line));
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out;
}

std::string join_reals(const std::vector<double>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + format_real(items[i]);
  return out;
}

void assign(RunConfig& c, const std::string& key, const std::string& v, int line) {
  if (key == "dim") c.dim = parse_int<int>(v, line);
  else if (key == "n") c.n = parse_int<int>(v, line);
  else if (key == "L") c.length = parse_real(v, line);
  else if (key == "p1") c.p1 = parse_real(v, line);
  else if (key == "lambda1") c.lambda1 = parse_real(v, line);
  else if (key == "p2") c.p2 = v == "none" ? std::nullopt : std::optional<double>(parse_real(v, line));
  else if (key == "lambda2") c.lambda2 = parse_real(v, line);
  else if (key == "k") c.k = v == "none" ? std::nullopt : std::optional<int>(parse_int<int>(v, line));
  else if (key == "dt") c.dt = parse_real(v, line);
  else if (key == "T") c.horizon = parse_real(v, line);
  else if (key == "record_every") c.record_every = parse_int<int>(v, line);
  else if (key == "data") c.data = v;
  else if (key == "amplitude") c.amplitude = parse_real(v, line);
  else if (key == "width") c.width = parse_real(v, line);
  else if (key == "init") c.init_path = v;
  else if (key == "N") c.cutoff = parse_real(v, line);
  else if (key == "s") c.s = parse_real(v, line);
  else if (key == "N_list") c.cutoff_list = parse_real_list(v, line);
  else if (key == "eta") c.eta = parse_real(v, line);
  else if (key == "r") c.lebesgue_r = parse_real(v, line);
  else if (key == "checks") c.checks = split_list(v);
  else if (key == "t_list") c.t_list = parse_real_list(v, line);
  else if (key == "amplitudes") c.amplitudes = parse_real_list(v, line);
  else if (key == "samples") c.samples = parse_int<int>(v, line);
  else if (key == "windows") c.windows = parse_int<int>(v, line);
  else if (key == "revival_tol") c.revival_tol = parse_real(v, line);
  else if (key == "seed") c.seed = parse_int<std::uint64_t>(v, line);
  else if (key == "out") c.out = v;
  else if (key == "checkpoint_out") c.checkpoint_out = v;
  else if (key == "jobs") c.jobs = parse_int<int>(v, line);
  else throw Error(ErrorCode::unknown_key, "line " + std::to_string(line) + ": unknown key '" + key + "'");
}

}  // namespace

std::string format_real(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

NlsModel RunConfig::model() const {
  NlsModel m;
  m.dim = dim;
  m.p1 = p1;
  m.lambda1 = lambda1;
  m.p2 = p2;
  m.lambda2 = p2 ? lambda2 : 0.0;
  return m;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "dim", "n", "L", "p1", "lambda1", "p2", "lambda2", "k", "dt", "T", "record_every", "data",
      "amplitude", "width", "init", "N", "s", "N_list", "eta", "r", "checks", "t_list", "amplitudes",
      "samples", "windows", "revival_tol", "seed", "out", "checkpoint_out", "jobs"};
  return keys;
}

void RunConfig::validate() const {
  auto bad = [](const std::string& m) { throw Error(ErrorCode::config_parse, m); };
  try {
    (void)grid();
    model().validate();
  } catch (const Error& e) {
    bad(e.what());
  }
  if (!(dt > 0.0)) bad("dt must be positive");
  if (!(horizon > 0.0)) bad("T must be positive");
  if (record_every < 0) bad("record_every must be nonnegative");
  if (data != "gaussian" && data != "rough" && data != "checkpoint") bad("data must be gaussian, rough or checkpoint");
  if (data == "checkpoint" && init_path.empty()) bad("data = checkpoint needs init");
  if (!(amplitude > 0.0)) bad("amplitude must be positive");
  if (!(width > 0.0)) bad("width must be positive");
  if (!(cutoff > 1.0)) bad("N must exceed 1");
  if (!(s > 0.0 && s < 1.0)) bad("s must lie in (0, 1)");
  for (double c : cutoff_list)
    if (!(c > 1.0)) bad("N_list entries must exceed 1");
  if (!(eta > 0.0)) bad("eta must be positive");
  if (!(lebesgue_r >= 1.0)) bad("r must be >= 1");
  if (samples < 1) bad("samples must be positive");
  if (windows < 1) bad("windows must be positive");
  if (!(revival_tol > 0.0)) bad("revival_tol must be positive");
  if (jobs < 1) bad("jobs must be positive");
  if (k && *k < 1) bad("k must be a positive integer");
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string content = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value'");
    const std::string key = trim(content.substr(0, eq));
    const std::string value = trim(content.substr(eq + 1));
    if (key.empty()) fail(line, "missing key");
    assign(c, key, value, line);
  }
  return c;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open config '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& c) {
  return {
      {"dim", std::to_string(c.dim)},
      {"n", std::to_string(c.n)},
      {"L", format_real(c.length)},
      {"p1", format_real(c.p1)},
      {"lambda1", format_real(c.lambda1)},
      {"p2", c.p2 ? format_real(*c.p2) : "none"},
      {"lambda2", format_real(c.lambda2)},
      {"k", c.k ? std::to_string(*c.k) : "none"},
      {"dt", format_real(c.dt)},
      {"T", format_real(c.horizon)},
      {"record_every", std::to_string(c.record_every)},
      {"data", c.data},
      {"amplitude", format_real(c.amplitude)},
      {"width", format_real(c.width)},
      {"init", c.init_path},
      {"N", format_real(c.cutoff)},
      {"s", format_real(c.s)},
      {"N_list", join_reals(c.cutoff_list)},
      {"eta", format_real(c.eta)},
      {"r", format_real(c.lebesgue_r)},
      {"checks", join(c.checks)},
      {"t_list", join_reals(c.t_list)},
      {"amplitudes", join_reals(c.amplitudes)},
      {"samples", std::to_string(c.samples)},
      {"windows", std::to_string(c.windows)},
      {"revival_tol", format_real(c.revival_tol)},
      {"seed", std::to_string(c.seed)},
      {"out", c.out},
      {"checkpoint_out", c.checkpoint_out},
      {"jobs", std::to_string(c.jobs)},
  };
}

std::string write_config_text(const RunConfig& config) {
  std::string out;
  for (const auto& [key, value] : config_entries(config)) out += key + " = " + value + "\n";
  return out;
}

void write_config(const RunConfig& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot write config '" + path + "'");
  out << write_config_text(config);
}

}  // namespace nlslab
