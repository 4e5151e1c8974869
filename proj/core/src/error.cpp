#include "nlslab/error.hpp"

namespace nlslab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_dimension: return "invalid-dimension";
    case ErrorCode::non_power_of_two: return "non-power-of-two";
    case ErrorCode::nonpositive_length: return "nonpositive-length";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::side_mismatch: return "side-tag-mismatch";
    case ErrorCode::degenerate_input: return "degenerate-input";
    case ErrorCode::boundary_mass: return "boundary-mass-violation";
    case ErrorCode::support_overflow: return "support-overflow";
    case ErrorCode::revival_contamination: return "revival-contamination";
    case ErrorCode::numerical_abort: return "numerical-abort";
    case ErrorCode::indivisible_sample: return "indivisible-sample";
    case ErrorCode::empty_series: return "empty-series";
    case ErrorCode::insufficient_data: return "insufficient-data";
    case ErrorCode::config_parse: return "config-parse";
    case ErrorCode::unknown_key: return "unknown-key";
    case ErrorCode::checkpoint_format: return "checkpoint-format";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

NumericalAbort::NumericalAbort(double last_good_time, const std::string& what)
    : Error(ErrorCode::numerical_abort, what), last_good_time_(last_good_time) {}

}  // namespace nlslab
