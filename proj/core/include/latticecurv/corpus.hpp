#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latticecurv/config.hpp"

namespace latticecurv {

struct NamedConfig {
  std::string name;
  Configuration config;
};

/// Unit-bond examples with finite Heitmann-Radin energy: triangle, square,
/// wires, bow tie, two components, hexagons H_1..H_3, a hexagonal hole, a
/// hole with an inner wire, square and honeycomb patches.
std::vector<NamedConfig> hand_built_examples();

/// Regular unit pentagon with one extra particle at distance 1 inside,
/// attached to a corner; the attaching edge is an inner wire. Not a
/// hard-sphere configuration (d_min is about 0.735).
Configuration pentagon_with_inner_wire();

/// H_3 with five of the six neighbours of the centre removed: one face of
/// inner perimeter 14 containing an inner wire to the centre.
Configuration hole_with_spur();

/// Hard-sphere configuration with unit bonds and simply closed boundary for
/// which removing the boundary lowers P from 16 to 12 only.
Configuration removal_counterexample();

/// Lattice subsets: alternately random subsets of a ball (wires, holes,
/// several components) and compact Eden clusters. Entry k depends only on
/// (seed, k).
std::vector<NamedConfig> lattice_corpus(int count, std::uint64_t seed);

/// Off-lattice configurations with d_min > 1/sqrt(2): alternately uniform
/// random points and jittered lattice clusters.
std::vector<NamedConfig> soft_corpus(int count, std::uint64_t seed);

/// Uniform random points with d_min >= 1 (no unit bonds in general).
std::vector<NamedConfig> sparse_corpus(int count, std::uint64_t seed);

}  // namespace latticecurv
