#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "latticecurv/bond_graph.hpp"

namespace latticecurv {

enum class TriangulationStrategy { EarClip, Fan };

std::string_view to_string(TriangulationStrategy s);

/// Bond graph plus non-crossing chords that split every face into triangles.
class TriGraph {
 public:
  const BondGraph& base() const { return base_; }
  TriangulationStrategy strategy() const { return strategy_; }

  /// Added edges (u < v), in the order they were created.
  std::span<const Edge> chords() const { return chords_; }

  /// All faces of the chorded graph; every walk has length 3.
  std::span<const FaceWalk> tri_faces() const { return tri_faces_; }

  /// Adjacency in the chorded graph.
  bool adjacent(int u, int v) const;

  int edge_count() const { return static_cast<int>(base_.edges().size() + chords_.size()); }

 private:
  friend TriGraph triangulate(const BondGraph&, TriangulationStrategy);

  BondGraph base_;
  TriangulationStrategy strategy_ = TriangulationStrategy::EarClip;
  std::vector<Edge> chords_;
  std::vector<FaceWalk> tri_faces_;
  std::unordered_set<std::uint64_t> adjacency_;
};

/// EarClip clips the first valid ear in walk order, repeatedly. Fan picks the
/// lowest-index walk vertex with a valid diagonal, adds every valid diagonal
/// from it and recurses into the pieces. Faces with repeated vertices are
/// handled as weakly simple polygons. Throws TriangulationError when no valid
/// chord exists.
TriGraph triangulate(const BondGraph& graph, TriangulationStrategy strategy = TriangulationStrategy::EarClip);

/// Number of chords.
int defect_measure(const TriGraph& tri);

/// Sum over faces of (inner perimeter - 3); needs no triangulation.
int defect_measure_direct(const BondGraph& graph);

/// Euler characteristic of the chorded graph.
int euler_characteristic(const TriGraph& tri);

}  // namespace latticecurv
