#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "amgm/commands.hpp"
#include "amgm/errors.hpp"
#include "amgm/json.hpp"

namespace {

// Exit codes: 0 success, 2 validation/argument error, 3 internal fault.
constexpr int kOk = 0;
constexpr int kValidationError = 2;
constexpr int kInternalFault = 3;

int emit(const amgm::cli::Json& envelope) {
  std::cout << envelope.dump() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"refined AM-GM bounds with sphere analytics and Monte Carlo"};
  app.require_subcommand(1);

  amgm::cli::CheckArgs check_args;
  std::vector<double> check_weights;
  std::string check_input;
  CLI::App* check = app.add_subcommand(
      "check", "evaluate the refined AM-GM report for one weighted sample");
  check->add_option("--values", check_args.values,
                    "comma-separated nonnegative values")
      ->delimiter(',');
  auto* weights_opt =
      check->add_option("--weights", check_weights,
                        "comma-separated positive weights summing to 1")
          ->delimiter(',');
  auto* input_opt = check->add_option(
      "--input", check_input, "CSV file with columns value[,weight]");
  input_opt->excludes("--values")->excludes("--weights");
  auto* r_opt = check->add_option("--r", "power-mean exponent r (0 < r < s/2)");
  auto* s_opt = check->add_option("--s", "power-mean exponent s (s > 2r)");
  r_opt->needs(s_opt);
  s_opt->needs(r_opt);

  amgm::cli::McArgs mc_args;
  CLI::App* mcc = app.add_subcommand(
      "mc", "seeded Monte Carlo over uniform points on the unit sphere");
  mcc->add_option("--n", mc_args.config.n, "sphere dimension (>= 2)")
      ->required();
  mcc->add_option("--trials", mc_args.config.trials, "number of trials (>= 1)")
      ->required();
  mcc->add_option("--seed", mc_args.config.seed,
                  "64-bit seed; trials derive independent substreams")
      ->required();
  mcc->add_option("--threshold", mc_args.config.threshold,
                  "correction-factor cutoff in (0,1), default 0.82");
  mcc->add_option("--tail-ts", mc_args.config.tail_ts,
                  "deviation levels for the tail checks, default 1,2,3")
      ->delimiter(',');
  std::string hist_out;
  auto* hist_opt = mcc->add_option(
      "--hist-out", hist_out,
      "file prefix; writes <prefix>_{s1,bound,gm_side}.csv histograms");
  mcc->add_option("--threads", mc_args.threads,
                  "worker threads, 0 = auto; never changes the results");

  amgm::cli::AnalyticArgs analytic_args;
  CLI::App* analytic = app.add_subcommand(
      "analytic", "closed-form expectation table over a range of dimensions");
  analytic->add_option("--n-min", analytic_args.n_min, "first dimension (>= 2)");
  analytic->add_option("--n-max", analytic_args.n_max,
                       "last dimension (>= n-min)");
  analytic->add_option("--step-kind", analytic_args.step_kind,
                       "linear:k or geometric:k, default linear:1");
  analytic->add_flag("--find-certified", analytic_args.find_certified,
                     "also report the first dimension the guarantee certifies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidationError;
  }

  try {
    if (check->parsed()) {
      if (*weights_opt) check_args.weights = check_weights;
      if (*input_opt) check_args.input = check_input;
      if (*r_opt) check_args.r = r_opt->as<double>();
      if (*s_opt) check_args.s = s_opt->as<double>();
      return emit(amgm::cli::cmd_check(check_args));
    }
    if (mcc->parsed()) {
      if (*hist_opt) mc_args.hist_out = hist_out;
      return emit(amgm::cli::cmd_mc(mc_args));
    }
    return emit(amgm::cli::cmd_analytic(analytic_args));
  } catch (const amgm::validation_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const amgm::internal_fault& e) {
    std::cerr << "internal fault: " << e.what() << '\n';
    return kInternalFault;
  } catch (const std::exception& e) {
    std::cerr << "internal fault: " << e.what() << '\n';
    return kInternalFault;
  }
}
