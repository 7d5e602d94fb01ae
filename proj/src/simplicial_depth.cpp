#include "sphd/simplicial_depth.hpp"

#include <algorithm>
#include <cmath>

#include "sphd/spherical_depth.hpp"

namespace sphd {

namespace {

void require_triples(const Point& q, const DataSet& points) {
  if (points.size() < 3) throw insufficient_data("simplicial depth needs at least 3 data points");
  if (q.dim() != 2 || points.dim() != 2) throw invalid_input("simplicial depth is planar");
}

// Equal or antipodal angle pairs collapse modulo pi; one sorted sweep over
// the folded angles finds any gap below the margin.
bool is_generic(const SortedAngles& angles) {
  if (angles.zero_count > 0) return false;
  const std::size_t m = angles.thetas.size();
  if (m < 2) return true;
  std::vector<double> folded(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double t = angles.thetas[i];
    folded[i] = t < pi ? t : t - pi;
  }
  std::sort(folded.begin(), folded.end());
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (folded[i + 1] - folded[i] < genericity_margin) return false;
  }
  if (folded.front() + pi - folded.back() < genericity_margin) return false;
  return true;
}

}  // namespace

DepthResult simplicial_depth_naive(const Point& q, const DataSet& points) {
  require_triples(q, points);
  const std::size_t n = points.size();
  const double* flat = points.flat().data();
  const double qx = q.x();
  const double qy = q.y();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        count += detail::point_in_triangle_flat(qx, qy, flat[2 * i], flat[2 * i + 1],
                                                flat[2 * j], flat[2 * j + 1],
                                                flat[2 * k], flat[2 * k + 1])
                     ? 1
                     : 0;
      }
    }
  }
  return make_depth_result(count, choose3(n));
}

std::optional<DepthResult> simplicial_depth_fast2d(const Point& q, const DataSet& points) {
  require_triples(q, points);
  const SortedAngles angles = build_sorted_angles(q, points);
  if (!is_generic(angles)) return std::nullopt;

  const std::vector<double>& thetas = angles.thetas;
  const std::size_t n = thetas.size();
  std::uint64_t missing = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double cut = thetas[i] + pi;
    std::uint64_t in_half;
    if (cut < two_pi) {
      auto last = std::lower_bound(thetas.begin() + static_cast<std::ptrdiff_t>(i) + 1, thetas.end(), cut);
      in_half = static_cast<std::uint64_t>(last - thetas.begin()) - i - 1;
    } else {
      cut -= two_pi;
      auto last = std::lower_bound(thetas.begin(), thetas.begin() + static_cast<std::ptrdiff_t>(i), cut);
      in_half = (n - i - 1) + static_cast<std::uint64_t>(last - thetas.begin());
    }
    missing += choose2(in_half);
  }
  return make_depth_result(choose3(n) - missing, choose3(n));
}

DepthResult simplicial_depth(const Point& q, const DataSet& points) {
  if (auto fast = simplicial_depth_fast2d(q, points)) return *fast;
  return simplicial_depth_naive(q, points);
}

ContainmentCounts containment_counts(const Point& q, const DataSet& points) {
  require_triples(q, points);
  return {spherical_depth_fast2d(q, points).count, simplicial_depth(q, points).count};
}

}  // namespace sphd
