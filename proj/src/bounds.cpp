#include "amgm/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "amgm/errors.hpp"
#include "amgm/summation.hpp"

namespace amgm::bounds {
namespace {

struct MeanParts {
  double am = 0.0;         // sum a_i x_i
  double sqrt_mean = 0.0;  // sum a_i sqrt(x_i)
  double gm = 0.0;         // exp(sum a_i ln x_i), 0 when any x_i = 0
};

MeanParts mean_parts(const WeightedSample& sample) {
  const auto& xs = sample.values();
  const auto& ws = sample.weights();
  NeumaierSum am, sq, lg;
  bool has_zero = false;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    am.add(ws[i] * xs[i]);
    sq.add(ws[i] * std::sqrt(xs[i]));
    if (xs[i] == 0.0) {
      has_zero = true;
    } else {
      lg.add(ws[i] * std::log(xs[i]));
    }
  }
  MeanParts parts;
  parts.am = am.value();
  parts.sqrt_mean = sq.value();
  parts.gm = has_zero ? 0.0 : std::exp(lg.value());
  return parts;
}

// c = 1 - sum(a_i sqrt(x_i)) / sqrt(am). Cauchy-Schwarz puts the quotient in
// (0, 1]; rounding can push it a hair past 1, so clamp at zero.
double correction_term(const MeanParts& p) {
  return std::max(0.0, 1.0 - p.sqrt_mean / std::sqrt(p.am));
}

double sqrt_variance(const MeanParts& p) {
  const double v = 1.0 - (p.sqrt_mean * p.sqrt_mean) / p.am;
  return std::clamp(v, 0.0, 1.0);
}

// sum a_i x_i^p with compensated accumulation; pow(0, p) = 0 for p > 0.
double power_sum(const WeightedSample& sample, double p) {
  const auto& xs = sample.values();
  const auto& ws = sample.weights();
  NeumaierSum acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    acc.add(ws[i] * std::pow(xs[i], p));
  }
  return acc.value();
}

}  // namespace

AmGmReport refined_am_gm_report(const WeightedSample& sample) {
  const MeanParts p = mean_parts(sample);
  AmGmReport report;
  report.am = p.am;
  report.gm = p.gm;
  report.c = correction_term(p);
  report.refined_bound = std::exp(2.0 * report.c) * p.gm;
  report.variance = sqrt_variance(p);
  report.variance_bound = std::exp(report.variance) * p.gm;
  return report;
}

HolderCheck holder_refinement_check(const WeightedSample& sample, double r,
                                    double s) {
  if (!std::isfinite(r) || !std::isfinite(s) || r <= 0.0 || s <= 2.0 * r) {
    throw validation_error(errc::invalid_exponents,
                           "need 0 < r < s/2; got r=" + std::to_string(r) +
                               ", s=" + std::to_string(s));
  }
  const double sum_r = power_sum(sample, r);
  const double sum_s = power_sum(sample, s);
  const double sum_half_s = power_sum(sample, s / 2.0);

  // Sharpening exponent of the sample taken to the power s.
  const double cs =
      std::max(0.0, 1.0 - sum_half_s / std::sqrt(sum_s));

  HolderCheck check;
  check.lhs = std::exp(std::log(sum_r) / r);
  // (1 - (2r/s) c_s)^(1/r) loses all precision as r drops; log1p keeps it.
  // 2rc_s/s < 1 always since c_s < 1 and 2r < s, so log1p stays in domain.
  const double bracket = std::exp(std::log1p(-(2.0 * r / s) * cs) / r);
  check.rhs = std::exp(std::log(sum_s) / s) * bracket;
  check.holds = check.lhs <= check.rhs * (1.0 + 1e-10);
  return check;
}

std::vector<PowerMeanRow> power_mean_limit_check(
    const WeightedSample& sample, std::span<const double> r_sequence) {
  for (std::size_t i = 0; i < r_sequence.size(); ++i) {
    const double r = r_sequence[i];
    if (!std::isfinite(r) || r <= 0.0 || r >= 0.5) {
      throw validation_error(errc::invalid_exponents,
                             "every r must lie in (0, 1/2); got " +
                                 std::to_string(r));
    }
    if (i > 0 && r >= r_sequence[i - 1]) {
      throw validation_error(errc::invalid_exponents,
                             "r_sequence must be strictly decreasing");
    }
  }

  const MeanParts p = mean_parts(sample);
  const double c = correction_term(p);
  const double limit = p.am * std::exp(-2.0 * c);

  std::vector<PowerMeanRow> rows;
  rows.reserve(r_sequence.size());
  for (double r : r_sequence) {
    PowerMeanRow row;
    row.r = r;
    row.lhs = std::exp(std::log(power_sum(sample, r)) / r);
    row.rhs = p.am * std::exp(std::log1p(-2.0 * r * c) / r);
    row.gap_to_limit = std::fabs(row.rhs - limit);
    rows.push_back(row);
  }
  return rows;
}

VarianceSandwich variance_sandwich(const WeightedSample& sample) {
  const MeanParts p = mean_parts(sample);
  VarianceSandwich sandwich;
  sandwich.c = correction_term(p);
  sandwich.var = sqrt_variance(p);
  sandwich.half_var = 0.5 * sandwich.var;
  sandwich.holds = sandwich.half_var <= sandwich.c + 1e-12 &&
                   sandwich.c <= sandwich.var + 1e-12;
  return sandwich;
}

DegenerateGap degenerate_gap_demo(std::int64_t n, double epsilon) {
  if (n < 2) {
    throw validation_error(errc::invalid_dimension,
                           "need n >= 2; got " + std::to_string(n));
  }
  if (!std::isfinite(epsilon) || epsilon <= 0.0) {
    throw validation_error(errc::invalid_argument,
                           "epsilon must be a finite positive real");
  }
  // Equal-weight sample (epsilon, 1, ..., 1), both sides scaled by the
  // quadratic mean q so the comparison happens on the unit sphere.
  const double dn = static_cast<double>(n);
  const double rest = dn - 1.0;
  const double q = std::sqrt((epsilon * epsilon + rest) / dn);

  DegenerateGap gap;
  gap.lhs = std::exp(std::log(epsilon) / dn) / q;
  gap.rhs = std::exp((epsilon + rest) / dn / q - 1.0);
  gap.ratio = gap.lhs / gap.rhs;
  return gap;
}

}  // namespace amgm::bounds
