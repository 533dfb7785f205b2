#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amgm/json.hpp"
#include "amgm/mc.hpp"

namespace amgm::cli {

// The command layer returns finished envelopes so both the binary and the
// tests can drive it directly. Parameters echo only result-affecting
// inputs; execution knobs (thread count, histogram paths) stay out so the
// envelope is byte-identical whenever the results are.

struct CheckArgs {
  std::vector<double> values;
  std::optional<std::vector<double>> weights;
  std::optional<std::string> input;
  std::optional<double> r;
  std::optional<double> s;
};

Json cmd_check(const CheckArgs& args);

struct McArgs {
  mc::McConfig config;
  int threads = 0;
  std::optional<std::string> hist_out;  // file prefix for three histograms
};

Json cmd_mc(const McArgs& args);

struct AnalyticArgs {
  std::int64_t n_min = 2;
  std::int64_t n_max = 2;
  std::string step_kind = "linear:1";
  bool find_certified = false;
};

Json cmd_analytic(const AnalyticArgs& args);

}  // namespace amgm::cli
