#include "sphd/dataset.hpp"

#include <cmath>

namespace sphd {

DataSet::DataSet(const std::vector<Point>& points) {
  if (points.empty()) return;
  dim_ = points.front().dim();
  count_ = points.size();
  flat_.reserve(count_ * dim_);
  for (const Point& p : points) {
    if (p.dim() != dim_) throw invalid_input("points of mixed dimension in one data set");
    flat_.insert(flat_.end(), p.coords().begin(), p.coords().end());
  }
}

DataSet DataSet::from_flat(std::size_t dim, std::vector<double> coords) {
  if (dim == 0) throw invalid_input("dimension must be at least 1");
  if (coords.size() % dim != 0) throw invalid_input("flat coordinate array not a multiple of dimension");
  for (double c : coords) {
    if (!std::isfinite(c)) throw invalid_input("non-finite coordinate");
  }
  DataSet s;
  s.dim_ = dim;
  s.count_ = coords.size() / dim;
  s.flat_ = std::move(coords);
  return s;
}

Point DataSet::point_at(std::size_t i) const {
  auto p = point(i);
  return Point(std::vector<double>(p.begin(), p.end()));
}

std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::uint64_t choose3(std::uint64_t n) {
  return n < 3 ? 0 : n * (n - 1) / 2 * (n - 2) / 3;
}

}  // namespace sphd
