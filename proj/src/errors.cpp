#include "amgm/errors.hpp"

namespace amgm {

const char* errc_name(errc code) {
  switch (code) {
    case errc::all_zero_values: return "AllZeroValues";
    case errc::negative_value: return "NegativeValue";
    case errc::non_positive_weight: return "NonPositiveWeight";
    case errc::weight_sum_out_of_range: return "WeightSumOutOfRange";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::invalid_exponents: return "InvalidExponents";
    case errc::invalid_dimension: return "InvalidDimension";
    case errc::non_positive_argument: return "NonPositiveArgument";
    case errc::insufficient_trials: return "InsufficientTrials";
    case errc::invalid_config: return "InvalidConfig";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace amgm
