#include "amgm/mc.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "amgm/errors.hpp"
#include "amgm/gamma.hpp"
#include "amgm/summation.hpp"

namespace amgm::mc {
namespace {

constexpr double kGmFloor = 0.394;

StatSummary summarize_metric(std::vector<double>& xs) {
  const std::size_t t = xs.size();
  StatSummary s;
  NeumaierSum mean_acc;
  for (double x : xs) mean_acc.add(x);
  s.mean = mean_acc.value() / static_cast<double>(t);

  NeumaierSum ss;
  for (double x : xs) ss.add((x - s.mean) * (x - s.mean));
  s.stddev = t > 1 ? std::sqrt(ss.value() / static_cast<double>(t - 1)) : 0.0;

  std::sort(xs.begin(), xs.end());
  s.min = xs.front();
  s.max = xs.back();
  s.median = (t % 2 == 1) ? xs[t / 2] : 0.5 * (xs[t / 2 - 1] + xs[t / 2]);
  return s;
}

void run_block(const McConfig& config, std::int64_t begin, std::int64_t end,
               std::vector<SampleStats>& records) {
  std::vector<double> buf;
  for (std::int64_t k = begin; k < end; ++k) {
    NormalStream stream(substream(config.seed, static_cast<std::uint64_t>(k)));
    sample_unit_sphere_into(static_cast<std::size_t>(config.n), stream, buf);
    records[static_cast<std::size_t>(k)] = per_sample_stats(buf);
  }
}

}  // namespace

void validate_config(const McConfig& config) {
  if (config.n < 2) {
    throw validation_error(errc::invalid_dimension,
                           "need n >= 2; got " + std::to_string(config.n));
  }
  if (config.trials < 1) {
    throw validation_error(errc::invalid_config, "need trials >= 1; got " +
                                                     std::to_string(config.trials));
  }
  if (!std::isfinite(config.threshold) || config.threshold <= 0.0 ||
      config.threshold >= 1.0) {
    throw validation_error(errc::invalid_config,
                           "threshold must lie in (0, 1)");
  }
  for (double t : config.tail_ts) {
    if (!std::isfinite(t) || t < 0.0) {
      throw validation_error(errc::invalid_config,
                             "tail levels must be finite and nonnegative");
    }
  }
}

std::vector<SampleStats> run_trials(const McConfig& config, int threads) {
  validate_config(config);
  const std::int64_t trials = config.trials;
  std::vector<SampleStats> records(static_cast<std::size_t>(trials));

  int nthreads = threads > 0
                     ? threads
                     : static_cast<int>(std::thread::hardware_concurrency());
  nthreads = std::clamp<int>(nthreads, 1,
                             static_cast<int>(std::min<std::int64_t>(
                                 trials, 1024)));

  if (nthreads == 1) {
    run_block(config, 0, trials, records);
    return records;
  }

  // Static contiguous partition. Every trial's values depend only on
  // (seed, trial index), so the partition affects scheduling, never output.
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nthreads));
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const std::int64_t chunk = (trials + nthreads - 1) / nthreads;
  for (int w = 0; w < nthreads; ++w) {
    const std::int64_t begin = std::min<std::int64_t>(trials, w * chunk);
    const std::int64_t end = std::min<std::int64_t>(trials, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      try {
        run_block(config, begin, end, records);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return records;
}

McSummary summarize(const McConfig& config,
                    std::span<const SampleStats> records) {
  validate_config(config);
  if (records.empty()) {
    throw validation_error(errc::invalid_argument,
                           "cannot summarize zero trial records");
  }
  const std::size_t t = records.size();
  std::vector<double> s1(t), bound(t), gm(t);
  std::int64_t violations = 0;
  std::int64_t below = 0;
  for (std::size_t k = 0; k < t; ++k) {
    s1[k] = records[k].s1;
    bound[k] = records[k].bound;
    gm[k] = records[k].gm_side;
    if (!records[k].holds) ++violations;
    if (records[k].bound < config.threshold) ++below;
  }

  McSummary summary;
  summary.n = config.n;
  summary.trials = static_cast<std::int64_t>(t);
  summary.bound = summarize_metric(bound);
  summary.gm_side = summarize_metric(gm);
  summary.s1 = summarize_metric(s1);  // sorts s1 last; reused below
  summary.pointwise_violations = violations;
  summary.below_threshold_fraction =
      static_cast<double>(below) / static_cast<double>(t);

  const double sqrt_n = std::sqrt(static_cast<double>(config.n));
  const double median_l1 = summary.s1.median * sqrt_n;
  for (double level : config.tail_ts) {
    std::int64_t outside = 0;
    for (double v : s1) {
      if (std::fabs(v * sqrt_n - median_l1) > level) ++outside;
    }
    summary.tail_fractions[level] =
        static_cast<double>(outside) / static_cast<double>(t);
  }

  summary.analytic_expected_s1 = gamma::expected_l1_norm(config.n) / sqrt_n;
  summary.median_gap = std::fabs(summary.s1.mean - summary.s1.median) * sqrt_n;
  return summary;
}

McSummary run_experiment(const McConfig& config, int threads) {
  const std::vector<SampleStats> records = run_trials(config, threads);
  return summarize(config, records);
}

MedianTailCheck median_and_tail_stats(const McSummary& summary,
                                      std::int64_t n) {
  if (summary.trials < 10000) {
    throw validation_error(errc::insufficient_trials,
                           "median and tail checks need >= 10000 trials; got " +
                               std::to_string(summary.trials));
  }
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const double trials = static_cast<double>(summary.trials);
  const double l1_std = summary.s1.stddev * sqrt_n;
  const double mc_error = l1_std / std::sqrt(trials);

  MedianTailCheck check;
  check.median_gap_ok =
      summary.median_gap <= std::numbers::pi / 2.0 + 3.0 * mc_error;
  for (const auto& [level, fraction] : summary.tail_fractions) {
    const double analytic =
        std::sqrt(std::numbers::pi / 2.0) * std::exp(-0.5 * level * level);
    const double binom_se =
        std::sqrt(std::max(fraction * (1.0 - fraction), 0.0) / trials);
    check.tail_ok[level] = fraction <= analytic + 3.0 * binom_se;
  }
  return check;
}

GmConcentrationStats gm_concentration_stats(
    const McConfig& config, std::span<const SampleStats> records) {
  validate_config(config);
  if (config.n < 100) {
    throw validation_error(
        errc::invalid_dimension,
        "gm concentration is an asymptotic statement; need n >= 100");
  }
  if (records.empty()) {
    throw validation_error(errc::invalid_argument,
                           "cannot summarize zero trial records");
  }
  NeumaierSum mean_acc;
  std::int64_t above = 0;
  for (const SampleStats& r : records) {
    mean_acc.add(r.gm_side);
    if (r.gm_side > kGmFloor) ++above;
  }
  const double t = static_cast<double>(records.size());
  GmConcentrationStats stats;
  stats.mean_gm_side = mean_acc.value() / t;
  stats.above_0394_fraction = static_cast<double>(above) / t;
  stats.abs_gap_to_constant =
      std::fabs(stats.mean_gm_side - gamma::gm_concentration_constant());
  return stats;
}

GmConcentrationStats gm_concentration_stats(const McConfig& config,
                                            int threads) {
  validate_config(config);
  if (config.n < 100) {
    throw validation_error(
        errc::invalid_dimension,
        "gm concentration is an asymptotic statement; need n >= 100");
  }
  const std::vector<SampleStats> records = run_trials(config, threads);
  return gm_concentration_stats(config, records);
}

}  // namespace amgm::mc
