#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "latticecurv/config.hpp"

namespace latticecurv::fixtures {

// Pairs at distance 1 within tol, by scanning every pair.
inline int unit_pairs(const Configuration& x, double tol = 1e-9) {
  int count = 0;
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = a + 1; b < x.size(); ++b) {
      if (std::abs(distance(x[a], x[b]) - 1.0) <= tol) ++count;
    }
  }
  return count;
}

inline double brute_min_distance(const Configuration& x) {
  double best = INFINITY;
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = a + 1; b < x.size(); ++b) best = std::min(best, distance(x[a], x[b]));
  }
  return best;
}

inline Configuration rigid_motion(const Configuration& x, double angle, Point shift) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  std::vector<Point> out;
  for (const auto& p : x.points()) out.push_back({c * p.x - s * p.y + shift.x, s * p.x + c * p.y + shift.y});
  return Configuration(std::move(out), x.tol());
}

// H_1 with the centre first.
inline Configuration centred_h1() {
  std::vector<Point> pts{{0, 0}};
  for (int k = 0; k < 6; ++k) pts.push_back({std::cos(k * std::numbers::pi / 3), std::sin(k * std::numbers::pi / 3)});
  return Configuration(std::move(pts));
}

inline Configuration unit_square() { return Configuration({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

inline Configuration unit_triangle() { return Configuration({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}}); }

// Regular unit pentagon with a unit square glued on its bottom side.
inline Configuration pentagon_and_square() {
  const double R = 1.0 / (2.0 * std::sin(std::numbers::pi / 5.0));
  std::vector<Point> pts;
  for (int k = 0; k < 5; ++k) {
    const double a = -std::numbers::pi / 2.0 - std::numbers::pi / 5.0 + 2.0 * std::numbers::pi * k / 5.0;
    pts.push_back({R * std::cos(a), R * std::sin(a)});
  }
  pts.push_back({pts[0].x, pts[0].y - 1.0});
  pts.push_back({pts[1].x, pts[1].y - 1.0});
  return Configuration(std::move(pts));
}

}  // namespace latticecurv::fixtures
