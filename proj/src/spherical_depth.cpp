#include "sphd/spherical_depth.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace sphd {

namespace {

void require_pairs(const Point& q, const DataSet& points) {
  if (points.size() < 2) throw insufficient_data("spherical depth needs at least 2 data points");
  if (q.dim() != points.dim()) throw invalid_input("query and data dimension mismatch");
}

// Members of the sorted array lying in the closed angle range [lo, hi].
std::size_t count_in_range(const std::vector<double>& thetas, double lo, double hi) {
  auto first = std::lower_bound(thetas.begin(), thetas.end(), lo);
  auto last = std::upper_bound(thetas.begin(), thetas.end(), hi);
  return static_cast<std::size_t>(last - first);
}

}  // namespace

DepthResult spherical_depth_naive(const Point& q, const DataSet& points) {
  require_pairs(q, points);
  const std::size_t n = points.size();
  const std::size_t d = points.dim();
  const double* flat = points.flat().data();
  const double* qp = q.coords().data();

  std::uint64_t count = 0;
  if (d == 2) {
    const double qx = qp[0];
    const double qy = qp[1];
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double ax = flat[2 * i];
      const double ay = flat[2 * i + 1];
      const bool a_on_q = ax == qx && ay == qy;
      for (std::size_t j = i + 1; j < n; ++j) {
        const double bx = flat[2 * j];
        const double by = flat[2 * j + 1];
        const double abx = ax - bx;
        const double aby = ay - by;
        const double cx = qx - 0.5 * (ax + bx);
        const double cy = qy - 0.5 * (ay + by);
        const bool coincident = a_on_q || (bx == qx && by == qy);
        count += (coincident || abx * abx + aby * aby >= 4.0 * (cx * cx + cy * cy)) ? 1 : 0;
      }
    }
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        count += detail::contains_in_sphere_flat(qp, flat + i * d, flat + j * d, d) ? 1 : 0;
      }
    }
  }
  return make_depth_result(count, choose2(n));
}

SortedAngles build_sorted_angles(const Point& q, const DataSet& points) {
  if (q.dim() != 2 || (!points.empty() && points.dim() != 2)) {
    throw invalid_input("sorted angles are defined for planar data");
  }
  SortedAngles out;
  out.thetas.reserve(points.size());
  const double qx = q.x();
  const double qy = q.y();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double dx = points.x(i) - qx;
    const double dy = points.y(i) - qy;
    if (dx == 0.0 && dy == 0.0) {
      ++out.zero_count;
    } else {
      out.thetas.push_back(normalize_angle(std::atan2(dy, dx)));
    }
  }
  std::sort(out.thetas.begin(), out.thetas.end());
  return out;
}

std::size_t count_opposite_arc(const SortedAngles& angles, double theta) {
  const std::vector<double>& thetas = angles.thetas;
  double lo = theta + (half_pi - angular_tolerance);
  double hi = theta + (3.0 * half_pi + angular_tolerance);
  if (lo >= two_pi) lo -= two_pi;
  if (hi >= two_pi) hi -= two_pi;
  if (lo <= hi) return count_in_range(thetas, lo, hi);
  // Arc wraps past 2*pi: [lo, 2*pi) plus [0, hi].
  auto first = std::lower_bound(thetas.begin(), thetas.end(), lo);
  return static_cast<std::size_t>(thetas.end() - first) + count_in_range(thetas, 0.0, hi);
}

std::uint64_t count_containing_pairs(const SortedAngles& angles) {
  const std::uint64_t n = angles.thetas.size() + angles.zero_count;
  const std::uint64_t zeros = angles.zero_count;

  std::uint64_t arc_sum = 0;
  for (double theta : angles.thetas) {
    arc_sum += count_opposite_arc(angles, theta);
  }
  assert(arc_sum % 2 == 0);

  // A point equal to the query puts the query on (or at) every ball it
  // generates, so all its pairs contain the query.
  return arc_sum / 2 + zeros * (n - zeros) + choose2(zeros);
}

DepthResult spherical_depth_fast2d(const Point& q, const DataSet& points) {
  require_pairs(q, points);
  if (points.dim() != 2) throw invalid_input("fast planar algorithm needs dimension 2");
  const SortedAngles angles = build_sorted_angles(q, points);
  return make_depth_result(count_containing_pairs(angles), choose2(points.size()));
}

DepthResult spherical_depth(const Point& q, const DataSet& points) {
  require_pairs(q, points);
  return points.dim() == 2 ? spherical_depth_fast2d(q, points)
                           : spherical_depth_naive(q, points);
}

}  // namespace sphd
