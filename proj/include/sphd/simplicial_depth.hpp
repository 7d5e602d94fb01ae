#pragma once

#include <cstdint>
#include <optional>

#include "sphd/dataset.hpp"

namespace sphd {

// Angle separation below which the fast planar counting path refuses an
// input: any data point coincident with the query, or two data-point angles
// about the query equal or exactly antipodal within this margin. The
// counting identity only miscounts when comparisons flip inside rounding
// noise (~1e-16 rad), so the margin sits a few orders above that; widening
// it further makes random large inputs fall back to the cubic scan.
inline constexpr double genericity_margin = 1e-13;

// Closed-triangle scan over all C(n,3) simplices. Planar only. O(n^3).
DepthResult simplicial_depth_naive(const Point& q, const DataSet& points);

// O(n log n) counting path: a triple misses the query exactly when all
// three points fit in an open halfplane through it, so
// count = C(n,3) - sum_i C(h_i, 2) with h_i the number of points strictly
// within the open halfturn counterclockwise of point i. Valid only in
// generic position; returns nullopt when the input is non-generic and the
// caller should fall back to the scan.
std::optional<DepthResult> simplicial_depth_fast2d(const Point& q, const DataSet& points);

// Fast path with automatic fallback; always equals the closed-simplex scan.
DepthResult simplicial_depth(const Point& q, const DataSet& points);

// Containing sphere-area pairs and containing closed triangles for one
// query, for testing the ratio bound between the two counts.
struct ContainmentCounts {
  std::uint64_t sphere_pairs = 0;
  std::uint64_t triangles = 0;
};

ContainmentCounts containment_counts(const Point& q, const DataSet& points);

}  // namespace sphd
