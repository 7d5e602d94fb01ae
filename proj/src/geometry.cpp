#include "sphd/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace sphd {

namespace {

void check_finite(std::span<const double> coords) {
  for (double c : coords) {
    if (!std::isfinite(c)) throw invalid_input("non-finite coordinate");
  }
}

void check_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw invalid_input("dimension mismatch");
}

}  // namespace

Point::Point(std::initializer_list<double> coords)
    : Point(std::vector<double>(coords)) {}

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw invalid_input("point needs at least 1 coordinate");
  check_finite(coords_);
}

double normalize_angle(double a) {
  a = std::fmod(a, two_pi);
  if (a < 0.0) a += two_pi;
  if (a >= two_pi) a = 0.0;  // fmod/rounding can land exactly on 2*pi
  return a;
}

PolarPoint to_polar(const Point& p) {
  if (p.dim() != 2) throw invalid_input("to_polar expects a planar point");
  const double x = p.x();
  const double y = p.y();
  if (x == 0.0 && y == 0.0) return {0.0, 0.0};
  return {std::hypot(x, y), normalize_angle(std::atan2(y, x))};
}

SphereArea sphere_area(const Point& a, const Point& b) {
  check_same_dim(a, b);
  std::vector<double> mid(a.dim());
  double diam_sq = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    mid[k] = 0.5 * (a[k] + b[k]);
    const double d = a[k] - b[k];
    diam_sq += d * d;
  }
  return {Point(std::move(mid)), 0.5 * std::sqrt(diam_sq)};
}

bool contains_in_sphere(const Point& q, const Point& a, const Point& b) {
  check_same_dim(q, a);
  check_same_dim(q, b);
  return detail::contains_in_sphere_flat(q.coords().data(), a.coords().data(),
                                         b.coords().data(), q.dim());
}

bool is_wide_angle(const Point& q, const Point& a, const Point& b) {
  check_same_dim(q, a);
  check_same_dim(q, b);
  if (a == q || b == q) throw degenerate_angle("angle vertex coincides with a ray endpoint");
  double dot = 0.0;
  for (std::size_t k = 0; k < q.dim(); ++k) {
    dot += (a[k] - q[k]) * (b[k] - q[k]);
  }
  return dot <= 0.0;
}

int orientation(const Point& a, const Point& b, const Point& c) {
  return detail::orientation_flat(a.x(), a.y(), b.x(), b.y(), c.x(), c.y());
}

bool on_segment(const Point& q, const Point& u, const Point& v) {
  return detail::on_segment_flat(q.x(), q.y(), u.x(), u.y(), v.x(), v.y());
}

bool point_in_triangle(const Point& q, const Point& a, const Point& b,
                       const Point& c) {
  return detail::point_in_triangle_flat(q.x(), q.y(), a.x(), a.y(), b.x(),
                                        b.y(), c.x(), c.y());
}

}  // namespace sphd
