#pragma once

#include <cstdint>
#include <vector>

#include "sphd/dataset.hpp"

namespace sphd {

// Data set translated so the query sits at the origin, reduced to sorted
// polar angles. Points coincident with the query have no angle and are
// tallied separately.
struct SortedAngles {
  std::vector<double> thetas;  // ascending, each in [0, 2*pi)
  std::size_t zero_count = 0;  // points equal to the query
};

// Pair scan over all C(n,2) closed balls, any dimension. O(d n^2).
DepthResult spherical_depth_naive(const Point& q, const DataSet& points);

// Translate by -q, convert to polar, drop zero-radius points into
// zero_count, sort the remaining angles.
SortedAngles build_sorted_angles(const Point& q, const DataSet& points);

// Number of stored angles whose circular difference from theta lies in
// [pi/2 - tol, 3*pi/2 + tol]; tol is the shared angular_tolerance. The arc
// wraps into at most two contiguous index ranges, each found by binary
// search.
std::size_t count_opposite_arc(const SortedAngles& angles, double theta);

// Containing-pair count for the origin against a reduced data set: half-sum
// of the opposite-arc counts plus closed-form corrections for points that
// coincide with the query.
std::uint64_t count_containing_pairs(const SortedAngles& angles);

// Planar spherical depth in O(n log n): sort by angle, then one arc count
// per point. Agrees with the pair scan exactly except on inputs with a pair
// within angular_tolerance of the pi/2 decision boundary.
DepthResult spherical_depth_fast2d(const Point& q, const DataSet& points);

// fast2d for planar data, pair scan otherwise.
DepthResult spherical_depth(const Point& q, const DataSet& points);

}  // namespace sphd
