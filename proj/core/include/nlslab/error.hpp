#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nlslab {

enum class ErrorCode {
  invalid_dimension,
  non_power_of_two,
  nonpositive_length,
  invalid_argument,
  side_mismatch,
  degenerate_input,
  boundary_mass,
  support_overflow,
  revival_contamination,
  numerical_abort,
  indivisible_sample,
  empty_series,
  insufficient_data,
  config_parse,
  unknown_key,
  checkpoint_format,
  io,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every contract violation raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the time integrator when the field stops being finite or the
/// blow-up guard trips. Carries the last time at which the state was sane.
class NumericalAbort : public Error {
 public:
  NumericalAbort(double last_good_time, const std::string& what);
  double last_good_time() const noexcept { return last_good_time_; }

 private:
  double last_good_time_;
};

}  // namespace nlslab
