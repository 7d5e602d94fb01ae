#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "sphd/errors.hpp"

namespace sphd {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr double half_pi = 0.5 * pi;

// Inclusive slack on the pi/2 and 3*pi/2 arc boundaries. Constructed inputs
// place point pairs exactly at right angles; polar conversion perturbs those
// separations by a few ulps, so the arc test widens both boundaries by this
// amount to keep such pairs deterministic. Random continuous inputs land
// inside the band with probability ~1e-9 per pair.
inline constexpr double angular_tolerance = 1e-9;

// A point in R^d with finite coordinates, d >= 1.
class Point {
 public:
  Point(std::initializer_list<double> coords);
  explicit Point(std::vector<double> coords);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  // 2-d accessors; valid only when dim() == 2.
  double x() const { return coords_[0]; }
  double y() const { return coords_[1]; }

  bool operator==(const Point&) const = default;

 private:
  std::vector<double> coords_;
};

// Planar point in polar form. r == 0 marks coincidence with the pole; theta
// is fixed to 0 there and carries no geometric meaning.
struct PolarPoint {
  double r = 0.0;
  double theta = 0.0;  // in [0, 2*pi)
};

// Closed ball whose diameter is the segment between two generating points.
struct SphereArea {
  Point center;
  double radius = 0.0;
};

// Maps any finite angle into [0, 2*pi).
double normalize_angle(double a);

// Polar form of a planar point; theta normalized into [0, 2*pi), and
// (0, 0) maps to (r=0, theta=0).
PolarPoint to_polar(const Point& p);

SphereArea sphere_area(const Point& a, const Point& b);

// Closed-ball test: q lies in the ball with diameter ab iff
// |a-b|^2 >= 4 |q-(a+b)/2|^2. Squared quantities only; boundary inclusive.
bool contains_in_sphere(const Point& q, const Point& a, const Point& b);

// True iff the angle at vertex q in the triangle a-q-b is >= pi/2,
// evaluated as the sign of the dot product (a-q).(b-q). Throws
// degenerate_angle when a or b coincides with q.
bool is_wide_angle(const Point& q, const Point& a, const Point& b);

// Sign of the cross product (b-a) x (c-a): +1 counterclockwise,
// -1 clockwise, 0 collinear. Plain floating-point evaluation.
int orientation(const Point& a, const Point& b, const Point& c);

// q on the closed segment uv (collinearity plus bounding-box check).
bool on_segment(const Point& q, const Point& u, const Point& v);

// Closed-triangle membership, boundary and vertices included. A collinear
// triple degenerates to the closed segment it spans.
bool point_in_triangle(const Point& q, const Point& a, const Point& b,
                       const Point& c);

namespace detail {

// Flat kernels shared by the public predicates and the pair/triple scan hot
// loops, so the scans decide exactly as the predicates do.

inline bool contains_in_sphere_flat(const double* q, const double* a,
                                    const double* b, std::size_t d) {
  // q equal to a generator sits exactly on the ball boundary; the rounded
  // midpoint must not be allowed to drop it.
  bool on_a = true;
  bool on_b = true;
  for (std::size_t k = 0; k < d; ++k) {
    on_a = on_a && q[k] == a[k];
    on_b = on_b && q[k] == b[k];
  }
  if (on_a || on_b) return true;
  double diam_sq = 0.0;
  double center_gap_sq = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    const double ab = a[k] - b[k];
    diam_sq += ab * ab;
    const double qc = q[k] - 0.5 * (a[k] + b[k]);
    center_gap_sq += qc * qc;
  }
  return diam_sq >= 4.0 * center_gap_sq;
}

inline int orientation_flat(double ax, double ay, double bx, double by,
                            double cx, double cy) {
  const double cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  if (cross > 0.0) return 1;
  if (cross < 0.0) return -1;
  return 0;
}

inline bool on_segment_flat(double qx, double qy, double ux, double uy,
                            double vx, double vy) {
  if (orientation_flat(ux, uy, vx, vy, qx, qy) != 0) return false;
  return (ux < vx ? ux : vx) <= qx && qx <= (ux > vx ? ux : vx) &&
         (uy < vy ? uy : vy) <= qy && qy <= (uy > vy ? uy : vy);
}

inline bool point_in_triangle_flat(double qx, double qy, double ax, double ay,
                                   double bx, double by, double cx,
                                   double cy) {
  const int o = orientation_flat(ax, ay, bx, by, cx, cy);
  if (o == 0) {
    // Collinear triple: the closed simplex is the segment spanned by the
    // three points, which the three pairwise segments cover.
    return on_segment_flat(qx, qy, ax, ay, bx, by) ||
           on_segment_flat(qx, qy, bx, by, cx, cy) ||
           on_segment_flat(qx, qy, ax, ay, cx, cy);
  }
  const int o1 = orientation_flat(ax, ay, bx, by, qx, qy);
  const int o2 = orientation_flat(bx, by, cx, cy, qx, qy);
  const int o3 = orientation_flat(cx, cy, ax, ay, qx, qy);
  if (o > 0) return o1 >= 0 && o2 >= 0 && o3 >= 0;
  return o1 <= 0 && o2 <= 0 && o3 <= 0;
}

}  // namespace detail

}  // namespace sphd
