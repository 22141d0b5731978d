#include "latticecurv/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace latticecurv::geom {

double cross(Point a, Point b, Point c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

int orientation(Point a, Point b, Point c, double eps) {
  const double v = cross(a, b, c);
  if (v > eps) return 1;
  if (v < -eps) return -1;
  return 0;
}

double direction(Point a, Point b) { return std::atan2(b.y - a.y, b.x - a.x); }

double positive_sweep(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double s = std::fmod(angle, two_pi);
  if (s <= 0.0) s += two_pi;
  return s;
}

bool on_segment(Point p, Point a, Point b, double eps) {
  if (orientation(a, b, p, eps) != 0) return false;
  return p.x >= std::min(a.x, b.x) - eps && p.x <= std::max(a.x, b.x) + eps && p.y >= std::min(a.y, b.y) - eps &&
         p.y <= std::max(a.y, b.y) + eps;
}

bool segments_intersect(Point a, Point b, Point c, Point d, double eps) {
  const int o1 = orientation(a, b, c, eps);
  const int o2 = orientation(a, b, d, eps);
  const int o3 = orientation(c, d, a, eps);
  const int o4 = orientation(c, d, b, eps);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && on_segment(c, a, b, eps)) || (o2 == 0 && on_segment(d, a, b, eps)) ||
         (o3 == 0 && on_segment(a, c, d, eps)) || (o4 == 0 && on_segment(b, c, d, eps));
}

double signed_area(std::span<const Point> polygon) {
  double twice = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& p = polygon[i];
    const Point& q = polygon[(i + 1) % polygon.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return 0.5 * twice;
}

int winding_number(std::span<const Point> polygon, Point p) {
  int wn = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % polygon.size()];
    if (a.y <= p.y) {
      if (b.y > p.y && cross(a, b, p) > 0.0) ++wn;
    } else if (b.y <= p.y && cross(a, b, p) < 0.0) {
      --wn;
    }
  }
  return wn;
}

}  // namespace latticecurv::geom
