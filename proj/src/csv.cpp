#include "amgm/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "amgm/errors.hpp"
#include "amgm/json.hpp"

namespace amgm::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

bool parse_number(std::string_view token, double& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc() && res.ptr == end && !token.empty();
}

}  // namespace

ValueWeightData read_value_weight_csv(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw validation_error(errc::invalid_argument,
                           "cannot open input file: " + path);
  }

  ValueWeightData data;
  std::string line;
  std::size_t line_no = 0;
  bool first_data_row = true;
  bool has_weights = false;
  while (std::getline(file, line)) {
    ++line_no;
    const std::string_view stripped = trim(line);
    if (stripped.empty()) continue;
    const auto fields = split_fields(stripped);
    if (fields.size() > 2) {
      throw validation_error(errc::invalid_argument,
                             "line " + std::to_string(line_no) +
                                 ": expected value[,weight], got " +
                                 std::to_string(fields.size()) + " columns");
    }

    double value = 0.0;
    if (!parse_number(fields[0], value)) {
      if (first_data_row) continue;  // header row
      throw validation_error(errc::invalid_argument,
                             "line " + std::to_string(line_no) +
                                 ": cannot parse value '" +
                                 std::string(fields[0]) + "'");
    }

    const bool row_has_weight = fields.size() == 2 && !fields[1].empty();
    if (first_data_row) {
      has_weights = row_has_weight;
      if (has_weights) data.weights.emplace();
      first_data_row = false;
    } else if (row_has_weight != has_weights) {
      throw validation_error(
          errc::length_mismatch,
          "line " + std::to_string(line_no) +
              ": either every row has a weight column or none does");
    }

    data.values.push_back(value);
    if (row_has_weight) {
      double weight = 0.0;
      if (!parse_number(fields[1], weight)) {
        throw validation_error(errc::invalid_argument,
                               "line " + std::to_string(line_no) +
                                   ": cannot parse weight '" +
                                   std::string(fields[1]) + "'");
      }
      data.weights->push_back(weight);
    }
  }

  if (data.values.empty()) {
    throw validation_error(errc::invalid_argument,
                           "input file has no data rows: " + path);
  }
  return data;
}

void write_histogram_csv(const std::string& path, std::span<const double> xs,
                         int bins) {
  if (bins < 1 || xs.empty()) {
    throw validation_error(errc::invalid_argument,
                           "histogram needs data and at least one bin");
  }
  std::ofstream file(path);
  if (!file) {
    throw validation_error(errc::invalid_argument,
                           "cannot open output file: " + path);
  }

  const auto [min_it, max_it] = std::minmax_element(xs.begin(), xs.end());
  const double lo = *min_it;
  const double hi = *max_it;
  const double width = (hi - lo) / static_cast<double>(bins);

  std::vector<std::int64_t> counts(static_cast<std::size_t>(bins), 0);
  for (double x : xs) {
    std::size_t idx = 0;
    if (width > 0.0) {
      idx = static_cast<std::size_t>((x - lo) / width);
      idx = std::min(idx, static_cast<std::size_t>(bins - 1));
    }
    ++counts[idx];
  }

  file << "bin_left,bin_right,count\n";
  for (int b = 0; b < bins; ++b) {
    const double left = lo + width * static_cast<double>(b);
    const double right =
        b + 1 == bins ? hi : lo + width * static_cast<double>(b + 1);
    file << Json::format_double(left) << ',' << Json::format_double(right)
         << ',' << counts[static_cast<std::size_t>(b)] << '\n';
  }
  if (!file) {
    throw validation_error(errc::invalid_argument,
                           "failed while writing: " + path);
  }
}

}  // namespace amgm::cli
