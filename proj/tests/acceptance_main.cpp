// Shipping gate: runs every release criterion and prints one PASS/FAIL line
// per criterion. Exits with the number of failures. argv[1] must be the
// path to the amgm CLI binary; the end-to-end criteria drive it as a child
// process and parse its JSON envelope.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "amgm/bounds.hpp"
#include "amgm/gamma.hpp"
#include "amgm/rng.hpp"
#include "amgm/weighted_sample.hpp"
#include "json.hpp"
#include "support/generators.hpp"
#include "support/process.hpp"

namespace {

using nlohmann::json;

std::string strf(const char* format, ...) {
  char buffer[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof buffer, format, args);
  va_end(args);
  return buffer;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

struct CliRun {
  json envelope;
  int exit_code = -1;
  double seconds = 0.0;
  std::string raw;

  bool ok() const { return exit_code == 0 && !envelope.is_discarded(); }
};

CliRun run_cli(const std::string& cli, const std::string& args) {
  const auto start = std::chrono::steady_clock::now();
  testproc::ProcessResult res = testproc::run_command(cli + " " + args);
  CliRun run;
  run.seconds = seconds_since(start);
  run.exit_code = res.exit_code;
  run.raw = std::move(res.output);
  run.envelope = json::parse(run.raw, nullptr, /*allow_exceptions=*/false);
  return run;
}

using Verdict = std::pair<bool, std::string>;

int g_failures = 0;

void check(int index, const std::function<Verdict()>& body) {
  Verdict verdict{false, "unset"};
  try {
    verdict = body();
  } catch (const std::exception& e) {
    verdict = {false, strf("exception: %s", e.what())};
  }
  std::printf("criterion %2d: %s  %s\n", index,
              verdict.first ? "PASS" : "FAIL", verdict.second.c_str());
  std::fflush(stdout);
  if (!verdict.first) ++g_failures;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-amgm-cli>\n", argv[0]);
    return 64;
  }
  const std::string cli = testproc::quoted(argv[1]);

  // Criteria 1 and 2 share one pass over the random sample library.
  constexpr std::int64_t kLibrarySamples = 100000;
  std::int64_t refined_violations = 0;
  std::int64_t sandwich_violations = 0;
  const auto library_start = std::chrono::steady_clock::now();
  for (std::int64_t i = 0; i < kLibrarySamples; ++i) {
    const testgen::RandomSample raw =
        testgen::lognormal_sample(static_cast<std::uint64_t>(i), 1, 50, 0.05);
    const amgm::bounds::WeightedSample sample =
        amgm::bounds::make_sample(raw.values, raw.weights);
    const amgm::bounds::AmGmReport report =
        amgm::bounds::refined_am_gm_report(sample);
    if (!(report.refined_bound <= report.am * (1.0 + 1e-12))) {
      ++refined_violations;
    }
    const amgm::bounds::VarianceSandwich sandwich =
        amgm::bounds::variance_sandwich(sample);
    if (!(sandwich.c >= sandwich.half_var - 1e-12 &&
          sandwich.c <= sandwich.var + 1e-12)) {
      ++sandwich_violations;
    }
  }
  const double library_seconds = seconds_since(library_start);

  check(1, [&]() -> Verdict {
    const bool ok = refined_violations == 0 && library_seconds < 30.0;
    return {ok, strf("exp(2c)*gm <= am on %lld random samples: %lld "
                     "violations (%.1f s)",
                     static_cast<long long>(kLibrarySamples),
                     static_cast<long long>(refined_violations),
                     library_seconds)};
  });

  check(2, [&]() -> Verdict {
    const bool ok = sandwich_violations == 0;
    return {ok, strf("var/2 <= c <= var within 1e-12 on the same samples: "
                     "%lld violations",
                     static_cast<long long>(sandwich_violations))};
  });

  check(3, [&]() -> Verdict {
    amgm::SplitMix64 exponent_rng = amgm::substream(20260816ull, 987654321ull);
    std::int64_t violations = 0;
    constexpr std::int64_t kPairs = 10000;
    for (std::int64_t i = 0; i < kPairs; ++i) {
      const testgen::RandomSample raw = testgen::lognormal_sample(
          static_cast<std::uint64_t>(200000 + i), 1, 50, 0.05);
      const amgm::bounds::WeightedSample sample =
          amgm::bounds::make_sample(raw.values, raw.weights);
      const testgen::ExponentPair p = testgen::random_exponents(exponent_rng);
      const amgm::bounds::HolderCheck hc =
          amgm::bounds::holder_refinement_check(sample, p.r, p.s);
      if (!(hc.lhs <= hc.rhs * (1.0 + 1e-10))) ++violations;
    }
    return {violations == 0,
            strf("power-mean refinement with slack 1e-10 on %lld random "
                 "(sample, r, s) draws: %lld violations",
                 static_cast<long long>(kPairs),
                 static_cast<long long>(violations))};
  });

  check(4, [&]() -> Verdict {
    const amgm::bounds::WeightedSample sample =
        amgm::bounds::make_sample({1.0, 4.0});
    const amgm::bounds::AmGmReport report =
        amgm::bounds::refined_am_gm_report(sample);
    const double limit = report.am * std::exp(-2.0 * report.c);
    const std::vector<double> rs = {0.25, 0.1, 0.01, 1e-4};
    const auto rows = amgm::bounds::power_mean_limit_check(sample, rs);
    const double rel_gap = std::abs(rows.back().rhs - limit) / limit;
    return {rel_gap <= 1e-6,
            strf("values [1,4]: bound at r=1e-4 within %.3g relative of the "
                 "r->0 limit (need <= 1e-6)",
                 rel_gap)};
  });

  check(5, [&]() -> Verdict {
    const double e1 = amgm::gamma::expected_l1_norm(1);
    const double e2 = amgm::gamma::expected_l1_norm(2);
    const double e3 = amgm::gamma::expected_l1_norm(3);
    const double four_over_pi = 4.0 / std::numbers::pi;
    const bool exact = std::abs(e1 - 1.0) <= 1e-14 &&
                       std::abs(e2 - four_over_pi) <= 1e-12 * four_over_pi &&
                       std::abs(e3 - 1.5) <= 1e-12 * 1.5;
    bool bounds_hold = true;
    for (std::int64_t n = 2; n <= (std::int64_t{1} << 20); n *= 2) {
      bounds_hold =
          bounds_hold && amgm::gamma::normalized_expectation_bounds(n).holds;
    }
    return {exact && bounds_hold,
            strf("expected L1 norm exact at n=1,2,3 (%s) and bounds hold for "
                 "n = 2..2^20 by doubling (%s)",
                 exact ? "yes" : "no", bounds_hold ? "yes" : "no")};
  });

  check(6, [&]() -> Verdict {
    std::int64_t violations = 0;
    for (std::int64_t n = 2; n <= 1000; ++n) {
      if (!amgm::gamma::gamma_ratio_bounds(n).holds) ++violations;
    }
    for (std::int64_t n : {10000, 100000, 1000000}) {
      if (!amgm::gamma::gamma_ratio_bounds(n).holds) ++violations;
    }
    return {violations == 0,
            strf("gamma ratio bounds for n = 2..1000 and n = 1e4, 1e5, 1e6: "
                 "%lld violations",
                 static_cast<long long>(violations))};
  });

  // The flagship Monte Carlo run; its envelope also feeds criteria 8-10.
  const CliRun big = run_cli(cli, "mc --n 100000 --trials 10000 --seed 42");

  check(7, [&]() -> Verdict {
    if (!big.ok()) {
      return {false, strf("mc n=100000 trials=10000 failed: exit %d",
                          big.exit_code)};
    }
    const json& summary = big.envelope.at("results").at("summary");
    const double fraction =
        summary.at("below_threshold_fraction").get<double>();
    const std::int64_t violations =
        summary.at("pointwise_violations").get<std::int64_t>();
    const double mean_bound = summary.at("bound").at("mean").get<double>();
    const bool ok = fraction >= 0.999 && violations == 0 &&
                    mean_bound >= 0.810 && mean_bound <= 0.824 &&
                    big.seconds < 300.0;
    return {ok, strf("mc n=100000 trials=10000 seed=42: fraction below 0.82 "
                     "= %.4f, pointwise violations = %lld, mean bound = "
                     "%.4f (%.0f s)",
                     fraction, static_cast<long long>(violations), mean_bound,
                     big.seconds)};
  });

  check(8, [&]() -> Verdict {
    const CliRun flat = run_cli(cli, "mc --n 2 --trials 100000 --seed 1");
    if (!flat.ok() || !big.ok()) {
      return {false, "an mc run needed for the cross-check failed"};
    }
    const json& fs1 = flat.envelope.at("results").at("summary").at("s1");
    const double mean_l1 = fs1.at("mean").get<double>() * std::sqrt(2.0);
    const double se_l1 =
        fs1.at("stddev").get<double>() * std::sqrt(2.0) / std::sqrt(1e5);
    const double target = 4.0 / std::numbers::pi;
    const double dev_small = std::abs(mean_l1 - target) / se_l1;

    const json& bsummary = big.envelope.at("results").at("summary");
    const double s1_mean = bsummary.at("s1").at("mean").get<double>();
    const double s1_se =
        bsummary.at("s1").at("stddev").get<double>() / std::sqrt(1e4);
    const double analytic =
        bsummary.at("analytic_expected_s1").get<double>();
    const double dev_big = std::abs(s1_mean - analytic) / s1_se;

    return {dev_small <= 4.0 && dev_big <= 4.0,
            strf("empirical L1 means vs analytic: n=2 off by %.2f se, "
                 "n=100000 off by %.2f se (need <= 4)",
                 dev_small, dev_big)};
  });

  check(9, [&]() -> Verdict {
    if (!big.ok()) return {false, "mc envelope unavailable"};
    const json& summary = big.envelope.at("results").at("summary");
    const double median_gap = summary.at("median_gap").get<double>();
    const bool gap_ok = median_gap <= std::numbers::pi / 2.0;
    bool tails_ok = true;
    double worst_margin = -1e300;
    for (const char* key : {"1", "2", "3"}) {
      const double t = std::stod(key);
      const double fraction =
          summary.at("tail_fractions").at(key).get<double>();
      const double envelope_bound =
          std::sqrt(std::numbers::pi / 2.0) * std::exp(-0.5 * t * t);
      const double se = std::sqrt(fraction * (1.0 - fraction) / 1e4);
      const double margin = fraction - (envelope_bound + 3.0 * se);
      worst_margin = std::max(worst_margin, margin);
      if (margin > 0.0) tails_ok = false;
    }
    return {gap_ok && tails_ok,
            strf("|mean-median| of L1 = %.4f (<= pi/2) and tail fractions "
                 "under their envelope by >= %.4f",
                 median_gap, -worst_margin)};
  });

  check(10, [&]() -> Verdict {
    if (!big.ok()) return {false, "mc envelope unavailable"};
    const json& gm = big.envelope.at("results").at("gm_concentration");
    const double mean_gm = gm.at("mean_gm_side").get<double>();
    const double above = gm.at("above_0394_fraction").get<double>();
    const bool ok =
        mean_gm >= 0.52 && mean_gm <= 0.54 && above >= 0.999;
    return {ok, strf("gm statistic: mean = %.4f (need [0.52, 0.54]), "
                     "fraction above 0.394 = %.4f (need >= 0.999)",
                     mean_gm, above)};
  });

  check(11, [&]() -> Verdict {
    const double r1 = amgm::bounds::degenerate_gap_demo(10, 1e-5).ratio;
    const double r2 = amgm::bounds::degenerate_gap_demo(10, 1e-10).ratio;
    const double r3 = amgm::bounds::degenerate_gap_demo(10, 1e-20).ratio;
    const bool ok = r1 > r2 && r2 > r3 && r3 < 0.05;
    return {ok, strf("degenerate ratio at n=10 decreases %.3g > %.3g > %.3g "
                     "and ends below 0.05",
                     r1, r2, r3)};
  });

  check(12, [&]() -> Verdict {
    std::vector<std::string> outputs;
    for (int threads : {1, 2, 8}) {
      const testproc::ProcessResult res = testproc::run_command(
          cli + " mc --n 4096 --trials 400 --seed 7 --threads " +
          std::to_string(threads));
      if (res.exit_code != 0) {
        return {false, strf("mc with --threads %d exited %d", threads,
                            res.exit_code)};
      }
      outputs.push_back(res.output);
    }
    const bool identical = !outputs[0].empty() &&
                           outputs[0] == outputs[1] &&
                           outputs[0] == outputs[2];
    return {identical, strf("mc stdout byte-identical across --threads "
                            "1/2/8 (%zu bytes)",
                            outputs[0].size())};
  });

  if (g_failures == 0) {
    std::printf("all 12 criteria passed\n");
  } else {
    std::printf("%d criteria failed\n", g_failures);
  }
  return g_failures;
}
