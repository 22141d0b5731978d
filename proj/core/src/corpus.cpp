#include "latticecurv/corpus.hpp"

#include <cmath>
#include <numbers>

#include "latticecurv/lattice.hpp"

namespace latticecurv {

namespace {

Configuration lattice(std::vector<LatticeCoord> coords) { return to_configuration(coords); }

std::uint64_t mix(std::uint64_t seed, std::uint64_t k) {
  std::mt19937_64 g(seed ^ (0x632be59bd9b4e019ULL * (k + 1)));
  return g();
}

}  // namespace

Configuration pentagon_with_inner_wire() {
  // Regular pentagon with unit sides, circumradius 1 / (2 sin 36deg).
  const double R = 1.0 / (2.0 * std::sin(std::numbers::pi / 5.0));
  std::vector<Point> pts;
  for (int k = 0; k < 5; ++k) {
    const double a = std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * k / 5.0;
    pts.push_back({R * std::cos(a), R * std::sin(a)});
  }
  // Towards the centre from the top corner; the centre is R > 1 away.
  pts.push_back({pts[0].x, pts[0].y - 1.0});
  return Configuration(std::move(pts));
}

Configuration hole_with_spur() {
  LatticeSet keep;
  for (const auto& c : hexagon(3)) keep.insert(c);
  for (std::size_t k = 1; k < 6; ++k) keep.erase(kLatticeDirections[k]);
  return to_configuration(keep);
}

Configuration removal_counterexample() {
  // A 4 x 3 block of unit squares capped by two triangular rows above and
  // below and by two triangles on each side.
  const double h = std::sqrt(3.0) / 2.0;
  std::vector<Point> pts;
  for (int r = 0; r < 3; ++r) {
    for (int k = 0; k < 4; ++k) pts.push_back({static_cast<double>(k), -static_cast<double>(r)});
  }
  for (int k = 0; k < 3; ++k) pts.push_back({0.5 + k, h});
  for (int k = 0; k < 2; ++k) pts.push_back({1.0 + k, 2 * h});
  for (int k = 0; k < 3; ++k) pts.push_back({0.5 + k, -2.0 - h});
  for (int k = 0; k < 2; ++k) pts.push_back({1.0 + k, -2.0 - 2 * h});
  for (int r = 0; r < 2; ++r) {
    pts.push_back({-h, -0.5 - r});
    pts.push_back({3.0 + h, -0.5 - r});
  }
  return Configuration(std::move(pts));
}

std::vector<NamedConfig> hand_built_examples() {
  std::vector<NamedConfig> out;
  out.push_back({"triangle", lattice({{0, 0}, {1, 0}, {0, 1}})});
  out.push_back({"square", Configuration({{0, 0}, {1, 0}, {1, 1}, {0, 1}})});
  out.push_back({"path", lattice({{0, 0}, {1, 0}, {2, 0}})});
  out.push_back({"triangle-with-tail", lattice({{0, 0}, {1, 0}, {0, 1}, {-1, 0}})});
  out.push_back({"bow-tie", lattice({{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}})});
  out.push_back({"two-components", lattice({{0, 0}, {1, 0}, {0, 1}, {5, 0}, {6, 0}})});
  out.push_back({"isolated-points", lattice({{0, 0}, {3, 0}, {0, 3}})});
  for (int m = 1; m <= 3; ++m) out.push_back({"H_" + std::to_string(m), generate_lattice_patch(m)});
  {
    auto ring = hexagon(2);
    std::erase(ring, LatticeCoord{0, 0});
    out.push_back({"hexagonal-hole", lattice(ring)});
  }
  out.push_back({"hole-with-spur", hole_with_spur()});
  out.push_back({"square-patch", square_lattice_patch(3)});
  out.push_back({"honeycomb", honeycomb_patch(1)});
  return out;
}

std::vector<NamedConfig> lattice_corpus(int count, std::uint64_t seed) {
  std::vector<NamedConfig> out;
  for (int k = 0; k < count; ++k) {
    const std::uint64_t s = mix(seed, static_cast<std::uint64_t>(k));
    Rng g(s);
    if (k % 2 == 0) {
      const int radius = 2 + static_cast<int>(g.below(4));
      const double density = 0.35 + 0.6 * g.uniform();
      auto pts = random_lattice_subset(radius, density, s);
      if (pts.empty()) pts.push_back({0, 0});
      out.push_back({"subset-" + std::to_string(k), lattice(std::move(pts))});
    } else {
      const int n = 3 + static_cast<int>(g.below(70));
      const double compactness = 0.5 + 3.0 * g.uniform();
      out.push_back({"cluster-" + std::to_string(k), lattice(random_lattice_cluster(n, s, compactness))});
    }
  }
  return out;
}

std::vector<NamedConfig> soft_corpus(int count, std::uint64_t seed) {
  std::vector<NamedConfig> out;
  for (int k = 0; k < count; ++k) {
    const std::uint64_t s = mix(seed, static_cast<std::uint64_t>(k));
    Rng g(s);
    if (k % 2 == 0) {
      const int n = 5 + static_cast<int>(g.below(60));
      out.push_back({"uniform-" + std::to_string(k), generate_random_config(n, s, 0.8)});
    } else {
      const int n = 4 + static_cast<int>(g.below(60));
      const auto coords = random_lattice_cluster(n, s, 2.0);
      std::vector<Point> pts;
      for (const auto& c : coords) {
        const double r = 0.07 * std::sqrt(g.uniform());
        const double a = 2.0 * std::numbers::pi * g.uniform();
        pts.push_back(to_point(c) + Point{r * std::cos(a), r * std::sin(a)});
      }
      out.push_back({"jittered-" + std::to_string(k), Configuration(std::move(pts))});
    }
  }
  return out;
}

std::vector<NamedConfig> sparse_corpus(int count, std::uint64_t seed) {
  std::vector<NamedConfig> out;
  for (int k = 0; k < count; ++k) {
    const std::uint64_t s = mix(seed, static_cast<std::uint64_t>(k));
    const int n = 2 + static_cast<int>(Rng(s).below(50));
    out.push_back({"sparse-" + std::to_string(k), generate_random_config(n, s, 1.0)});
  }
  return out;
}

}  // namespace latticecurv
