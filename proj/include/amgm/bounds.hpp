#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "amgm/weighted_sample.hpp"

namespace amgm::bounds {

// Weighted arithmetic and geometric means together with the sharpening
// exponent c = 1 - sum(a_i sqrt(x_i)) / sqrt(sum(a_i x_i)) and the weighted
// variance of sqrt(x) after normalizing the sample to unit arithmetic mean.
// Invariants: 0 <= c <= 1, exp(2c) * gm <= am, variance/2 <= c <= variance.
struct AmGmReport {
  double am = 0.0;
  double gm = 0.0;
  double c = 0.0;
  double refined_bound = 0.0;    // exp(2c) * gm
  double variance = 0.0;         // 1 - (sum a_i sqrt(x_i))^2 / sum(a_i x_i)
  double variance_bound = 0.0;   // exp(variance) * gm
};

AmGmReport refined_am_gm_report(const WeightedSample& sample);

// Refined power-mean comparison for exponents 0 < r < s/2: the r-mean is
// bounded by the s-mean scaled by (1 - (2r/s) c_s)^(1/r), where c_s is the
// sharpening exponent of the sample raised to the power s.
struct HolderCheck {
  double lhs = 0.0;   // r-th power mean
  double rhs = 0.0;   // scaled s-th power mean
  bool holds = false;
};

HolderCheck holder_refinement_check(const WeightedSample& sample, double r,
                                    double s);

// One row per exponent r of the refined bound am * (1 - 2rc)^(1/r) and its
// distance to the r -> 0 limit am * exp(-2c).
struct PowerMeanRow {
  double r = 0.0;
  double lhs = 0.0;            // r-th power mean
  double rhs = 0.0;            // am * (1 - 2rc)^(1/r)
  double gap_to_limit = 0.0;   // |rhs - am * exp(-2c)|
};

// r_sequence must be strictly decreasing within (0, 1/2).
std::vector<PowerMeanRow> power_mean_limit_check(
    const WeightedSample& sample, std::span<const double> r_sequence);

struct VarianceSandwich {
  double half_var = 0.0;
  double c = 0.0;
  double var = 0.0;
  bool holds = false;
};

VarianceSandwich variance_sandwich(const WeightedSample& sample);

// Equal-weight sample (epsilon, 1, ..., 1) scaled to unit quadratic mean.
// Shows the multiplicative gap exp(2c) growing without bound as epsilon
// shrinks: ratio = gm_side / am_side tends to zero.
struct DegenerateGap {
  double lhs = 0.0;    // gm of the normalized sample
  double rhs = 0.0;    // exp(am - 1) of the normalized sample
  double ratio = 0.0;  // lhs / rhs
};

DegenerateGap degenerate_gap_demo(std::int64_t n, double epsilon);

}  // namespace amgm::bounds
