#include "amgm/envelope.hpp"

#include <cmath>
#include <utility>

namespace amgm::cli {

Json make_envelope(const std::string& command, Json parameters,
                   Json results) {
  Json envelope = Json::object();
  envelope.set("artifact_version", Json::string(kArtifactVersion));
  envelope.set("command", Json::string(command));
  envelope.set("parameters", std::move(parameters));
  envelope.set("results", std::move(results));
  return envelope;
}

Json to_json(const bounds::AmGmReport& report) {
  Json j = Json::object();
  j.set("am", Json::real(report.am));
  j.set("gm", Json::real(report.gm));
  j.set("c", Json::real(report.c));
  j.set("refined_bound", Json::real(report.refined_bound));
  j.set("variance", Json::real(report.variance));
  j.set("variance_bound", Json::real(report.variance_bound));
  return j;
}

Json to_json(const bounds::VarianceSandwich& sandwich) {
  Json j = Json::object();
  j.set("half_var", Json::real(sandwich.half_var));
  j.set("c", Json::real(sandwich.c));
  j.set("var", Json::real(sandwich.var));
  j.set("holds", Json::boolean(sandwich.holds));
  return j;
}

Json to_json(const bounds::HolderCheck& check) {
  Json j = Json::object();
  j.set("lhs", Json::real(check.lhs));
  j.set("rhs", Json::real(check.rhs));
  j.set("holds", Json::boolean(check.holds));
  return j;
}

Json to_json(const mc::StatSummary& stats) {
  Json j = Json::object();
  j.set("mean", Json::real(stats.mean));
  j.set("stddev", Json::real(stats.stddev));
  j.set("median", Json::real(stats.median));
  j.set("min", Json::real(stats.min));
  j.set("max", Json::real(stats.max));
  return j;
}

Json to_json(const mc::McSummary& summary) {
  Json j = Json::object();
  j.set("n", Json::integer(summary.n));
  j.set("trials", Json::integer(summary.trials));
  j.set("s1", to_json(summary.s1));
  j.set("bound", to_json(summary.bound));
  j.set("gm_side", to_json(summary.gm_side));
  j.set("below_threshold_fraction",
        Json::real(summary.below_threshold_fraction));
  j.set("pointwise_violations", Json::integer(summary.pointwise_violations));
  Json tails = Json::object();
  for (const auto& [level, fraction] : summary.tail_fractions) {
    tails.set(Json::format_double(level), Json::real(fraction));
  }
  j.set("tail_fractions", std::move(tails));
  j.set("analytic_expected_s1", Json::real(summary.analytic_expected_s1));
  j.set("median_gap", Json::real(summary.median_gap));
  return j;
}

Json to_json(const mc::MedianTailCheck& check) {
  Json j = Json::object();
  j.set("median_gap_ok", Json::boolean(check.median_gap_ok));
  Json tails = Json::object();
  for (const auto& [level, ok] : check.tail_ok) {
    tails.set(Json::format_double(level), Json::boolean(ok));
  }
  j.set("tail_ok", std::move(tails));
  return j;
}

Json to_json(const mc::GmConcentrationStats& stats) {
  Json j = Json::object();
  j.set("mean_gm_side", Json::real(stats.mean_gm_side));
  j.set("above_0394_fraction", Json::real(stats.above_0394_fraction));
  j.set("abs_gap_to_constant", Json::real(stats.abs_gap_to_constant));
  return j;
}

Json to_json(const gamma::AnalyticRow& row) {
  Json j = Json::object();
  j.set("n", Json::integer(row.n));
  j.set("expected_l1", Json::real(row.expected_l1));
  j.set("normalized", Json::real(row.normalized));
  j.set("lower", Json::real(row.lower));
  j.set("upper", Json::real(row.upper));
  j.set("stirling_approx", std::isnan(row.stirling_approx)
                               ? Json::null()
                               : Json::real(row.stirling_approx));
  j.set("threshold_t", Json::real(row.threshold_t));
  j.set("guarantee_value", Json::real(row.guarantee_value));
  return j;
}

}  // namespace amgm::cli
