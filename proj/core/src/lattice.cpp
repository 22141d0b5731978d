#include "latticecurv/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "latticecurv/error.hpp"

namespace latticecurv {

namespace {
constexpr double kHalfSqrt3 = std::numbers::sqrt3 / 2.0;
}

Point to_point(LatticeCoord c) { return {c.i + 0.5 * c.j, kHalfSqrt3 * c.j}; }

int hex_distance(LatticeCoord a, LatticeCoord b) {
  const int di = a.i - b.i;
  const int dj = a.j - b.j;
  return std::max({std::abs(di), std::abs(dj), std::abs(di + dj)});
}

LatticeCoord to_lattice(Point p, double tol) {
  const double jf = p.y / kHalfSqrt3;
  const LatticeCoord c{static_cast<int>(std::lround(p.x - 0.5 * jf)), static_cast<int>(std::lround(jf))};
  if (distance(to_point(c), p) > tol) {
    throw NotOnLatticeError("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                            ") is not on the triangular lattice");
  }
  return c;
}

std::vector<LatticeCoord> to_lattice(const Configuration& config, double tol) {
  std::vector<LatticeCoord> out;
  out.reserve(config.size());
  for (const auto& p : config.points()) out.push_back(to_lattice(p, tol));
  return out;
}

Configuration to_configuration(std::span<const LatticeCoord> coords) {
  std::vector<Point> pts;
  pts.reserve(coords.size());
  for (const auto& c : coords) pts.push_back(to_point(c));
  return Configuration(std::move(pts));
}

Configuration to_configuration(const LatticeSet& coords) {
  std::vector<LatticeCoord> sorted(coords.begin(), coords.end());
  std::sort(sorted.begin(), sorted.end(),
            [](LatticeCoord a, LatticeCoord b) { return a.j < b.j || (a.j == b.j && a.i < b.i); });
  return to_configuration(sorted);
}

std::vector<LatticeCoord> hexagon(int shells) {
  std::vector<LatticeCoord> out;
  for (int j = -shells; j <= shells; ++j) {
    for (int i = -shells; i <= shells; ++i) {
      if (hex_distance({i, j}, {0, 0}) <= shells) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<LatticeCoord> random_lattice_subset(int radius, double density, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<LatticeCoord> out;
  for (const auto& c : hexagon(radius)) {
    if (rng.uniform() < density) out.push_back(c);
  }
  return out;
}

std::vector<LatticeCoord> random_lattice_cluster(int n, std::uint64_t seed, double compactness) {
  if (n < 1) throw DomainError("cluster size must be positive");
  Rng rng(seed);
  LatticeSet occupied{{0, 0}};
  std::vector<LatticeCoord> order{{0, 0}};
  // Ordered map keeps the frontier iteration deterministic.
  std::map<LatticeCoord, int> frontier;
  auto touch = [&](LatticeCoord c) {
    for (const auto& d : kLatticeDirections) {
      const auto nb = c + d;
      if (!occupied.contains(nb)) ++frontier[nb];
    }
  };
  touch({0, 0});
  while (static_cast<int>(order.size()) < n) {
    double total = 0.0;
    for (const auto& [c, k] : frontier) total += std::pow(static_cast<double>(k), compactness);
    double pick = rng.uniform() * total;
    LatticeCoord chosen = frontier.begin()->first;
    for (const auto& [c, k] : frontier) {
      pick -= std::pow(static_cast<double>(k), compactness);
      if (pick < 0.0) {
        chosen = c;
        break;
      }
    }
    frontier.erase(chosen);
    occupied.insert(chosen);
    order.push_back(chosen);
    touch(chosen);
  }
  return order;
}

Configuration square_lattice_patch(int n) {
  std::vector<Point> pts;
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) pts.push_back({static_cast<double>(x), static_cast<double>(y)});
  }
  return Configuration(std::move(pts));
}

Configuration honeycomb_patch(int rings) {
  // Hexagon centres sit on a triangular lattice of spacing sqrt(3); vertices
  // at unit distance from a centre, at angles 30 + 60k degrees.
  std::map<std::pair<long long, long long>, Point> unique;
  for (const auto& c : hexagon(rings)) {
    const Point centre = std::numbers::sqrt3 * to_point(c);
    for (int k = 0; k < 6; ++k) {
      const double a = std::numbers::pi / 6.0 + k * std::numbers::pi / 3.0;
      const Point v{centre.x + std::cos(a), centre.y + std::sin(a)};
      const std::pair<long long, long long> key{std::llround(v.x * 1e6), std::llround(v.y * 1e6)};
      unique.emplace(key, v);
    }
  }
  std::vector<Point> pts;
  for (const auto& [key, p] : unique) pts.push_back(p);
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.y < b.y - 1e-9 || (std::abs(a.y - b.y) <= 1e-9 && a.x < b.x); });
  return Configuration(std::move(pts));
}

}  // namespace latticecurv
