#include "amgm/weighted_sample.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "amgm/errors.hpp"
#include "amgm/summation.hpp"

namespace amgm::bounds {

WeightedSample::WeightedSample(std::vector<double> values,
                               std::vector<double> weights)
    : values_(std::move(values)), weights_(std::move(weights)) {
  if (values_.empty()) {
    throw validation_error(errc::length_mismatch, "values must be nonempty");
  }
  if (values_.size() != weights_.size()) {
    throw validation_error(
        errc::length_mismatch,
        "values has length " + std::to_string(values_.size()) +
            " but weights has length " + std::to_string(weights_.size()));
  }

  bool any_positive = false;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double x = values_[i];
    if (!std::isfinite(x) || x < 0.0) {
      throw validation_error(errc::negative_value,
                             "value at index " + std::to_string(i) +
                                 " must be a finite nonnegative real");
    }
    if (x > 0.0) any_positive = true;
    const double w = weights_[i];
    if (!std::isfinite(w) || w <= 0.0) {
      throw validation_error(errc::non_positive_weight,
                             "weight at index " + std::to_string(i) +
                                 " must be a finite positive real");
    }
  }
  if (!any_positive) {
    throw validation_error(errc::all_zero_values,
                           "at least one value must be positive");
  }

  const double total = compensated_total(weights_);
  if (std::fabs(total - 1.0) > 1e-6) {
    throw validation_error(
        errc::weight_sum_out_of_range,
        "weights sum to " + std::to_string(total) +
            "; must be within 1e-6 of 1 (normalize before constructing)");
  }
  for (double& w : weights_) w /= total;
}

WeightedSample make_sample(std::vector<double> values) {
  const double w = values.empty() ? 1.0 : 1.0 / static_cast<double>(values.size());
  std::vector<double> weights(values.size(), w);
  return WeightedSample(std::move(values), std::move(weights));
}

WeightedSample make_sample(std::vector<double> values,
                           std::vector<double> weights) {
  return WeightedSample(std::move(values), std::move(weights));
}

}  // namespace amgm::bounds
