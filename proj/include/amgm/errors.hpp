#pragma once

#include <stdexcept>
#include <string>

namespace amgm {

// Validation failures map to CLI exit code 2, internal faults to exit code 3.
enum class errc {
  all_zero_values,
  negative_value,
  non_positive_weight,
  weight_sum_out_of_range,
  length_mismatch,
  invalid_exponents,
  invalid_dimension,
  non_positive_argument,
  insufficient_trials,
  invalid_config,
  invalid_argument,
};

const char* errc_name(errc code);

class validation_error : public std::runtime_error {
 public:
  validation_error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// Unrecoverable internal condition (e.g. the sphere sampler exhausting its
// redraw budget). Distinct from validation so the CLI can exit 3, not 2.
class internal_fault : public std::runtime_error {
 public:
  explicit internal_fault(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace amgm
