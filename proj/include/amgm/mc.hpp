#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "amgm/sphere.hpp"

namespace amgm::mc {

struct McConfig {
  std::int64_t n = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  double threshold = 0.82;
  std::vector<double> tail_ts = {1.0, 2.0, 3.0};
};

// Throws on n < 2, trials < 1, threshold outside (0,1), bad tail levels.
void validate_config(const McConfig& config);

struct StatSummary {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for a single trial
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct McSummary {
  std::int64_t n = 0;
  std::int64_t trials = 0;
  StatSummary s1;
  StatSummary bound;
  StatSummary gm_side;
  double below_threshold_fraction = 0.0;
  std::int64_t pointwise_violations = 0;
  // t -> empirical P(| ||y||_1 - median ||y||_1 | > t)
  std::map<double, double> tail_fractions;
  double analytic_expected_s1 = 0.0;
  // |mean - median| of ||y||_1 (that is, of s1 * sqrt(n))
  double median_gap = 0.0;
};

// One record per trial, trial k drawn from substream(seed, k). threads = 0
// picks the hardware concurrency; the partition never affects the values,
// only who computes them.
std::vector<SampleStats> run_trials(const McConfig& config, int threads = 0);

// Reduce buffered per-trial records in trial order (bit-reproducible).
McSummary summarize(const McConfig& config,
                    std::span<const SampleStats> records);

McSummary run_experiment(const McConfig& config, int threads = 0);

// Checks of the median facts: |mean - median| of ||y||_1 against pi/2 and
// each tail fraction against sqrt(pi/2) e^{-t^2/2}, both widened by 3 Monte
// Carlo standard errors. Requires trials >= 10^4.
struct MedianTailCheck {
  bool median_gap_ok = false;
  std::map<double, bool> tail_ok;
};

MedianTailCheck median_and_tail_stats(const McSummary& summary,
                                      std::int64_t n);

// Concentration of gm_side = sqrt(n) prod |y_i|^{1/n} around the analytic
// constant. Requires n >= 100 so the asymptotic regime is meaningful.
struct GmConcentrationStats {
  double mean_gm_side = 0.0;
  double above_0394_fraction = 0.0;
  double abs_gap_to_constant = 0.0;
};

GmConcentrationStats gm_concentration_stats(const McConfig& config,
                                            int threads = 0);

// Same reduction over records already produced by run_trials, so callers
// holding the records do not pay for a second experiment.
GmConcentrationStats gm_concentration_stats(
    const McConfig& config, std::span<const SampleStats> records);

}  // namespace amgm::mc
