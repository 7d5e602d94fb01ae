#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sphd/dataset.hpp"

namespace sphd::io {

class parse_error : public error {
 public:
  using error::error;
};

// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);

// Locale-independent decimal parsing; accepts scientific notation.
double parse_double(std::string_view text);

// One point per line, coordinates comma-separated; '#' comments and blank
// lines skipped. All rows must share one dimension. Errors carry the
// 1-based line number.
DataSet read_points(std::istream& in, std::string_view source_name = "<input>");
DataSet read_points_file(const std::string& path);

// Inline point literal, e.g. "0.5,-2".
Point parse_point(std::string_view text);

// One decimal value per line, same comment/blank rules.
std::vector<double> read_values(std::istream& in, std::string_view source_name = "<input>");
std::vector<double> read_values_file(const std::string& path);

void write_points(std::ostream& out, const DataSet& points);

}  // namespace sphd::io
