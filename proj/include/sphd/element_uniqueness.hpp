#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sphd/geometry.hpp"

namespace sphd {

// The 4m-point polar construction for one same-sign value partition: each
// value a contributes a quadruple of radius sqrt(1 + a^2) at angles
// theta, theta + pi/2, theta + pi, theta + 3*pi/2 with theta = atan(1/a).
struct ReductionSet {
  std::vector<PolarPoint> points;
  std::size_t value_count() const { return points.size() / 4; }
};

// Builds the quadruple set from strictly-positive or strictly-negative
// values (at least one). Mixed signs, zeros, or non-finite values are
// rejected; callers partition by sign first.
ReductionSet build_reduction_set(std::span<const double> values);

// Unordered pairs of construction points whose closed ball contains the
// origin, computed by the planar arc counter straight from the stored
// angles. Distinct values yield exactly 4m^2 + 2m; each duplicated value
// adds 4.
std::uint64_t reduction_count(const ReductionSet& set);

std::uint64_t expected_unique_count(std::uint64_t m);

// Per-partition record of the uniqueness decision.
struct PartitionReport {
  char sign = '+';
  std::size_t m = 0;
  std::uint64_t count = 0;
  std::uint64_t expected = 0;
};

struct UniquenessReport {
  bool unique = true;
  std::vector<PartitionReport> partitions;  // partitions of size >= 2 only
};

// Element-uniqueness decision: two zeros fail immediately; positive and
// negative values are partitioned and each partition's reduction count is
// compared against 4m^2 + 2m. Values closer together than the arc
// tolerance can resolve are re-checked by exact comparison, so the verdict
// is exact float equality for all finite inputs.
UniquenessReport analyze_uniqueness(std::span<const double> values);

bool decide_uniqueness(std::span<const double> values);

}  // namespace sphd
