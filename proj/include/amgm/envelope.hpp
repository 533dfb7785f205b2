#pragma once

#include <string>

#include "amgm/bounds.hpp"
#include "amgm/gamma.hpp"
#include "amgm/json.hpp"
#include "amgm/mc.hpp"

namespace amgm::cli {

inline constexpr const char* kArtifactVersion = "1.0.0";

// Wrap a command's echoed parameters and results in the common envelope.
Json make_envelope(const std::string& command, Json parameters, Json results);

Json to_json(const bounds::AmGmReport& report);
Json to_json(const bounds::VarianceSandwich& sandwich);
Json to_json(const bounds::HolderCheck& check);
Json to_json(const mc::StatSummary& stats);
Json to_json(const mc::McSummary& summary);
Json to_json(const mc::MedianTailCheck& check);
Json to_json(const mc::GmConcentrationStats& stats);
Json to_json(const gamma::AnalyticRow& row);

}  // namespace amgm::cli
