#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace amgm::cli {

struct ValueWeightData {
  std::vector<double> values;
  std::optional<std::vector<double>> weights;
};

// Reads a CSV with columns value[,weight]. A non-numeric first row is taken
// as a header and skipped. Either every data row carries a weight or none
// does. Numbers are parsed locale-independently.
ValueWeightData read_value_weight_csv(const std::string& path);

// Writes an equal-width histogram with header bin_left,bin_right,count.
void write_histogram_csv(const std::string& path, std::span<const double> xs,
                         int bins = 100);

}  // namespace amgm::cli
