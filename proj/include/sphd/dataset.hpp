#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sphd/geometry.hpp"

namespace sphd {

// Immutable set of points of common dimension; duplicates allowed.
// Coordinates live in one flat array so pair scans stay cache-friendly.
class DataSet {
 public:
  DataSet() = default;
  explicit DataSet(const std::vector<Point>& points);
  static DataSet from_flat(std::size_t dim, std::vector<double> coords);

  std::size_t size() const { return count_; }
  std::size_t dim() const { return dim_; }
  bool empty() const { return count_ == 0; }

  std::span<const double> point(std::size_t i) const {
    return {flat_.data() + i * dim_, dim_};
  }
  Point point_at(std::size_t i) const;
  double x(std::size_t i) const { return flat_[i * dim_]; }
  double y(std::size_t i) const { return flat_[i * dim_ + 1]; }
  std::span<const double> flat() const { return flat_; }

 private:
  std::vector<double> flat_;
  std::size_t dim_ = 0;
  std::size_t count_ = 0;
};

// Raw containment count over the region family, the family size, and their
// quotient. total is C(n,2) for sphere areas and C(n,3) for triangles.
struct DepthResult {
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  double depth = 0.0;
};

inline DepthResult make_depth_result(std::uint64_t count, std::uint64_t total) {
  return {count, total, total == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(total)};
}

std::uint64_t choose2(std::uint64_t n);
std::uint64_t choose3(std::uint64_t n);

}  // namespace sphd
