#include "sphd/element_uniqueness.hpp"

#include <algorithm>
#include <cmath>

#include "sphd/spherical_depth.hpp"

namespace sphd {

ReductionSet build_reduction_set(std::span<const double> values) {
  if (values.empty()) throw invalid_input("reduction set needs at least one value");
  bool positive = values.front() > 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) throw invalid_input("non-finite value");
    if (v == 0.0) throw invalid_input("zero values have no reduction point");
    if ((v > 0.0) != positive) throw invalid_input("mixed-sign values; partition by sign first");
  }
  ReductionSet set;
  set.points.reserve(values.size() * 4);
  for (double v : values) {
    const double r = std::hypot(1.0, v);  // sqrt(1 + v^2) without overflow
    const double base = normalize_angle(std::atan(1.0 / v));
    set.points.push_back({r, base});
    set.points.push_back({r, normalize_angle(base + half_pi)});
    set.points.push_back({r, normalize_angle(base + pi)});
    set.points.push_back({r, normalize_angle(base + 3.0 * half_pi)});
  }
  return set;
}

std::uint64_t reduction_count(const ReductionSet& set) {
  SortedAngles angles;
  angles.thetas.reserve(set.points.size());
  for (const PolarPoint& p : set.points) angles.thetas.push_back(p.theta);
  std::sort(angles.thetas.begin(), angles.thetas.end());
  return count_containing_pairs(angles);
}

std::uint64_t expected_unique_count(std::uint64_t m) { return 4 * m * m + 2 * m; }

namespace {

bool has_exact_duplicate(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) != values.end();
}

// True iff the partition holds a repeated value. The reduction count equals
// the closed form exactly when all pairwise angle gaps clear the arc
// tolerance; an elevated count can therefore mean either a true duplicate
// or a sub-tolerance gap, and only the elevated case needs the exact
// re-check.
bool partition_has_duplicate(std::span<const double> values, PartitionReport& report) {
  const ReductionSet set = build_reduction_set(values);
  report.m = values.size();
  report.count = reduction_count(set);
  report.expected = expected_unique_count(values.size());
  if (report.count == report.expected) return false;
  return has_exact_duplicate({values.begin(), values.end()});
}

}  // namespace

UniquenessReport analyze_uniqueness(std::span<const double> values) {
  std::vector<double> positives;
  std::vector<double> negatives;
  std::size_t zeros = 0;
  for (double v : values) {
    if (!std::isfinite(v)) throw invalid_input("non-finite value");
    if (v == 0.0) {
      ++zeros;
    } else if (v > 0.0) {
      positives.push_back(v);
    } else {
      negatives.push_back(v);
    }
  }

  UniquenessReport report;
  if (zeros >= 2) report.unique = false;
  for (const auto* part : {&positives, &negatives}) {
    if (part->size() < 2) continue;  // trivially duplicate-free
    PartitionReport row;
    row.sign = part == &positives ? '+' : '-';
    if (partition_has_duplicate(*part, row)) report.unique = false;
    report.partitions.push_back(row);
  }
  return report;
}

bool decide_uniqueness(std::span<const double> values) {
  return analyze_uniqueness(values).unique;
}

}  // namespace sphd
