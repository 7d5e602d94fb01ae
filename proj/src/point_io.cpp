#include "sphd/point_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sphd::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool skippable(std::string_view line) {
  const std::string_view t = trim(line);
  return t.empty() || t.front() == '#';
}

[[noreturn]] void fail_at(std::string_view source, std::size_t line_no, const std::string& what) {
  std::ostringstream msg;
  msg << source << ": line " << line_no << ": " << what;
  throw parse_error(msg.str());
}

std::vector<double> parse_row(std::string_view line) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    const std::string_view field =
        comma == std::string_view::npos ? line.substr(start) : line.substr(start, comma - start);
    out.push_back(parse_double(field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.empty()) throw parse_error("empty numeric field");
  double value = 0.0;
  const char* end = t.data() + t.size();
  const auto res = std::from_chars(t.data(), end, value);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw parse_error("malformed number '" + std::string(t) + "'");
  }
  if (!std::isfinite(value)) throw parse_error("non-finite value '" + std::string(t) + "'");
  return value;
}

DataSet read_points(std::istream& in, std::string_view source_name) {
  std::vector<double> flat;
  std::size_t dim = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::vector<double> row;
    try {
      row = parse_row(trim(line));
    } catch (const parse_error& e) {
      fail_at(source_name, line_no, e.what());
    }
    if (dim == 0) {
      dim = row.size();
    } else if (row.size() != dim) {
      std::ostringstream msg;
      msg << "expected " << dim << " coordinates, got " << row.size();
      fail_at(source_name, line_no, msg.str());
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  if (dim == 0) throw parse_error(std::string(source_name) + ": no data rows");
  return DataSet::from_flat(dim, std::move(flat));
}

DataSet read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  return read_points(in, path);
}

Point parse_point(std::string_view text) {
  return Point(parse_row(trim(text)));
}

std::vector<double> read_values(std::istream& in, std::string_view source_name) {
  std::vector<double> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    try {
      out.push_back(parse_double(line));
    } catch (const parse_error& e) {
      fail_at(source_name, line_no, e.what());
    }
  }
  return out;
}

std::vector<double> read_values_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  return read_values(in, path);
}

void write_points(std::ostream& out, const DataSet& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points.point(i);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k > 0) out << ',';
      out << format_double(p[k]);
    }
    out << '\n';
  }
}

}  // namespace sphd::io
