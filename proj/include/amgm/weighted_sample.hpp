#pragma once

#include <cstddef>
#include <vector>

namespace amgm::bounds {

// Nonnegative values x_i with strictly positive weights summing to one.
// The constructor validates and renormalizes; see make_sample for the
// convenience entry points.
class WeightedSample {
 public:
  WeightedSample(std::vector<double> values, std::vector<double> weights);

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<double>& values() const noexcept { return values_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  std::vector<double> values_;
  std::vector<double> weights_;
};

// Equal weights 1/n.
WeightedSample make_sample(std::vector<double> values);

// Explicit weights; they must already sum to 1 within 1e-6 and are then
// renormalized exactly.
WeightedSample make_sample(std::vector<double> values,
                           std::vector<double> weights);

}  // namespace amgm::bounds
