#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_set>
#include <vector>

#include "latticecurv/config.hpp"

namespace latticecurv {

/// Point i*e + j*f of the triangular lattice, e = (1, 0), f = (1/2, sqrt(3)/2).
struct LatticeCoord {
  int i = 0;
  int j = 0;

  friend bool operator==(const LatticeCoord&, const LatticeCoord&) = default;
  friend auto operator<=>(const LatticeCoord&, const LatticeCoord&) = default;
};

inline LatticeCoord operator+(LatticeCoord a, LatticeCoord b) { return {a.i + b.i, a.j + b.j}; }
inline LatticeCoord operator-(LatticeCoord a, LatticeCoord b) { return {a.i - b.i, a.j - b.j}; }

/// Unit steps in counterclockwise order starting at angle 0.
inline constexpr std::array<LatticeCoord, 6> kLatticeDirections{
    {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

struct LatticeCoordHash {
  std::size_t operator()(const LatticeCoord& c) const noexcept {
    const auto key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.i)) << 32) |
                     static_cast<std::uint32_t>(c.j);
    return std::hash<std::uint64_t>{}(key);
  }
};

using LatticeSet = std::unordered_set<LatticeCoord, LatticeCoordHash>;

Point to_point(LatticeCoord c);

/// Graph distance on the lattice.
int hex_distance(LatticeCoord a, LatticeCoord b);

/// Lattice coordinate of `p`, or throws NotOnLatticeError if `p` is farther
/// than `tol` from every lattice point.
LatticeCoord to_lattice(Point p, double tol = 1e-6);
std::vector<LatticeCoord> to_lattice(const Configuration& config, double tol = 1e-6);

/// Points in the given order.
Configuration to_configuration(std::span<const LatticeCoord> coords);

/// Sorts by (j, i) before conversion so equal sets give equal configurations.
Configuration to_configuration(const LatticeSet& coords);

/// H_m: lattice points within graph distance m of the origin, ordered by
/// (j, i).
std::vector<LatticeCoord> hexagon(int shells);

/// Each point of the lattice ball of the given radius is kept with probability
/// `density`. Produces holes, wires and several components.
std::vector<LatticeCoord> random_lattice_subset(int radius, double density, std::uint64_t seed);

/// Eden-type growth from the origin biased towards sites with many occupied
/// neighbours; yields compact clusters, mostly with simply closed boundary.
std::vector<LatticeCoord> random_lattice_cluster(int n, std::uint64_t seed, double compactness = 2.0);

/// n x n patch of the unit square lattice.
Configuration square_lattice_patch(int n);

/// Honeycomb with unit bonds: all vertices of the hexagons whose centres lie
/// within graph distance `rings` of the origin on the centre lattice.
Configuration honeycomb_patch(int rings);

}  // namespace latticecurv
