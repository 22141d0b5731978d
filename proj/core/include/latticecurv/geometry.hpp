#pragma once

#include <span>

#include "latticecurv/config.hpp"

namespace latticecurv::geom {

/// Twice the signed area of triangle (a, b, c); positive when counterclockwise.
double cross(Point a, Point b, Point c);

/// Sign of `cross` with |cross| <= eps treated as collinear.
int orientation(Point a, Point b, Point c, double eps);

/// Angle of b - a in (-pi, pi].
double direction(Point a, Point b);

/// Normalises an angle difference into (0, 2*pi]; zero maps to 2*pi.
double positive_sweep(double angle);

/// True if p lies on the closed segment [a, b] (within eps).
bool on_segment(Point p, Point a, Point b, double eps);

/// Closed-segment intersection test, collinear overlaps included.
bool segments_intersect(Point a, Point b, Point c, Point d, double eps);

/// Signed shoelace area of a closed polygon.
double signed_area(std::span<const Point> polygon);

/// Winding number of the closed polygon around p. Undefined for p on the
/// polygon; callers rule that case out.
int winding_number(std::span<const Point> polygon, Point p);

}  // namespace latticecurv::geom
