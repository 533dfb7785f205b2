#include "amgm/commands.hpp"

#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "amgm/bounds.hpp"
#include "amgm/csv.hpp"
#include "amgm/envelope.hpp"
#include "amgm/errors.hpp"
#include "amgm/gamma.hpp"

namespace amgm::cli {
namespace {

Json real_array(const std::vector<double>& xs) {
  Json a = Json::array();
  for (double x : xs) a.push(Json::real(x));
  return a;
}

struct StepKind {
  bool geometric = false;
  std::int64_t k = 1;
};

StepKind parse_step_kind(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw validation_error(errc::invalid_config,
                           "step-kind must be linear:k or geometric:k");
  }
  const std::string name = text.substr(0, colon);
  StepKind step;
  if (name == "geometric") {
    step.geometric = true;
  } else if (name != "linear") {
    throw validation_error(errc::invalid_config,
                           "unknown step kind '" + name + "'");
  }
  const char* begin = text.data() + colon + 1;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(begin, end, step.k);
  if (res.ec != std::errc() || res.ptr != end) {
    throw validation_error(errc::invalid_config,
                           "cannot parse step size in '" + text + "'");
  }
  if (step.k < (step.geometric ? 2 : 1)) {
    throw validation_error(errc::invalid_config,
                           step.geometric ? "geometric step needs k >= 2"
                                          : "linear step needs k >= 1");
  }
  return step;
}

}  // namespace

Json cmd_check(const CheckArgs& args) {
  if (args.input.has_value() == !args.values.empty()) {
    throw validation_error(errc::invalid_argument,
                           "provide exactly one of --values or --input");
  }
  if (args.r.has_value() != args.s.has_value()) {
    throw validation_error(errc::invalid_exponents,
                           "--r and --s must be given together");
  }

  std::vector<double> values = args.values;
  std::optional<std::vector<double>> weights = args.weights;
  if (args.input) {
    if (weights) {
      throw validation_error(errc::invalid_argument,
                             "--weights cannot be combined with --input; put "
                             "weights in the file's second column");
    }
    ValueWeightData data = read_value_weight_csv(*args.input);
    values = std::move(data.values);
    weights = std::move(data.weights);
  }

  const bounds::WeightedSample sample =
      weights ? bounds::make_sample(values, *weights)
              : bounds::make_sample(values);

  Json results = Json::object();
  results.set("report", to_json(bounds::refined_am_gm_report(sample)));
  results.set("sandwich", to_json(bounds::variance_sandwich(sample)));
  if (args.r) {
    results.set("holder",
                to_json(bounds::holder_refinement_check(sample, *args.r,
                                                        *args.s)));
  } else {
    results.set("holder", Json::null());
  }

  Json parameters = Json::object();
  parameters.set("values",
                 args.input ? Json::null() : real_array(args.values));
  parameters.set("weights",
                 args.weights ? real_array(*args.weights) : Json::null());
  parameters.set("input",
                 args.input ? Json::string(*args.input) : Json::null());
  parameters.set("r", args.r ? Json::real(*args.r) : Json::null());
  parameters.set("s", args.s ? Json::real(*args.s) : Json::null());

  return make_envelope("check", std::move(parameters), std::move(results));
}

Json cmd_mc(const McArgs& args) {
  const mc::McConfig& config = args.config;
  const std::vector<mc::SampleStats> records =
      mc::run_trials(config, args.threads);
  const mc::McSummary summary = mc::summarize(config, records);

  Json results = Json::object();
  results.set("summary", to_json(summary));
  // The median/tail and concentration checks have hard preconditions
  // (enough trials, high enough dimension); below them the sections are
  // null rather than an error so small runs still produce an envelope.
  if (summary.trials >= 10000) {
    results.set("median_tail",
                to_json(mc::median_and_tail_stats(summary, config.n)));
  } else {
    results.set("median_tail", Json::null());
  }
  if (config.n >= 100) {
    results.set("gm_concentration",
                to_json(mc::gm_concentration_stats(config, records)));
  } else {
    results.set("gm_concentration", Json::null());
  }

  if (args.hist_out) {
    std::vector<double> metric(records.size());
    const auto write = [&](const char* name, auto getter) {
      for (std::size_t i = 0; i < records.size(); ++i) {
        metric[i] = getter(records[i]);
      }
      write_histogram_csv(*args.hist_out + "_" + name + ".csv", metric);
    };
    write("s1", [](const mc::SampleStats& r) { return r.s1; });
    write("bound", [](const mc::SampleStats& r) { return r.bound; });
    write("gm_side", [](const mc::SampleStats& r) { return r.gm_side; });
  }

  Json parameters = Json::object();
  parameters.set("n", Json::integer(config.n));
  parameters.set("trials", Json::integer(config.trials));
  parameters.set("seed", Json::unsigned_integer(config.seed));
  parameters.set("threshold", Json::real(config.threshold));
  parameters.set("tail_ts", real_array(config.tail_ts));

  return make_envelope("mc", std::move(parameters), std::move(results));
}

Json cmd_analytic(const AnalyticArgs& args) {
  if (args.n_min < 2) {
    throw validation_error(errc::invalid_dimension,
                           "need n-min >= 2; got " +
                               std::to_string(args.n_min));
  }
  if (args.n_max < args.n_min) {
    throw validation_error(errc::invalid_config,
                           "need n-min <= n-max");
  }
  const StepKind step = parse_step_kind(args.step_kind);

  Json rows = Json::array();
  for (std::int64_t n = args.n_min; n <= args.n_max;) {
    rows.push(to_json(gamma::analytic_row(n)));
    if (step.geometric) {
      if (n > args.n_max / step.k) break;  // would overflow past the range
      n *= step.k;
    } else {
      n += step.k;
    }
  }

  Json results = Json::object();
  results.set("rows", std::move(rows));
  if (args.find_certified) {
    const std::int64_t first = gamma::first_certified_dimension();
    Json certified = Json::object();
    certified.set("n", Json::integer(first));
    certified.set(
        "guarantee_value",
        Json::real(gamma::certification_threshold(first).guarantee_value));
    results.set("first_certified", std::move(certified));
  } else {
    results.set("first_certified", Json::null());
  }

  Json parameters = Json::object();
  parameters.set("n_min", Json::integer(args.n_min));
  parameters.set("n_max", Json::integer(args.n_max));
  parameters.set("step_kind", Json::string(args.step_kind));
  parameters.set("find_certified", Json::boolean(args.find_certified));

  return make_envelope("analytic", std::move(parameters), std::move(results));
}

}  // namespace amgm::cli
