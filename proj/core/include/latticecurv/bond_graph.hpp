#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "latticecurv/config.hpp"

namespace latticecurv {

enum class EdgeClass { RegularInterior, RegularBoundary, OuterWire, InnerWire };

std::string_view to_string(EdgeClass c);
std::optional<EdgeClass> edge_class_from_string(std::string_view name);

/// Interior edges are regular interior and inner wire edges.
inline bool is_interior(EdgeClass c) { return c == EdgeClass::RegularInterior || c == EdgeClass::InnerWire; }

/// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Closed directed walk x_0 -> x_1 -> ... -> x_{k-1} -> x_0. Vertices may
/// repeat when the walk runs along a wire edge in both directions.
struct FaceWalk {
  std::vector<int> vertices;
  double signed_area = 0.0;

  std::size_t length() const { return vertices.size(); }
};

/// Result of tracing the rotation system of a bond graph.
struct FaceTracing {
  /// Bounded walks that qualify as faces (counterclockwise, positive area).
  std::vector<FaceWalk> faces;
  /// One clockwise outer walk per connected component with at least one edge.
  std::vector<FaceWalk> outer_walks;
  /// Bounded walks dropped because they enclose another component.
  std::vector<FaceWalk> enclosing_walks;
  /// Face index per half-edge, -1 when the half-edge bounds no face.
  std::vector<int> half_edge_face;
};

class BondGraph;

/// Edges are all pairs with distance in [alpha - tol, beta + tol]. Throws
/// PlanarityError unless beta + tol < sqrt(2) * d_min.
BondGraph build_bond_graph(const Configuration& config, BondRange range);

/// Walk tracing over the counterclockwise rotation system: the successor of
/// u -> v is v -> w with w the neighbour of v immediately clockwise of u.
/// Per component the walk with negative total turning is the outer walk;
/// bounded walks whose polygon contains a vertex of another component are
/// not faces.
FaceTracing enumerate_faces(const BondGraph& graph);

/// Classes from the face incidence of the two half-edges of every edge.
std::vector<EdgeClass> classify_edges(const BondGraph& graph);

class BondGraph {
 public:
  const Configuration& config() const { return config_; }
  BondRange range() const { return range_; }
  int vertex_count() const { return static_cast<int>(config_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const FaceWalk> faces() const { return tracing_.faces; }
  std::span<const FaceWalk> outer_walks() const { return tracing_.outer_walks; }
  std::span<const FaceWalk> enclosing_walks() const { return tracing_.enclosing_walks; }
  std::span<const EdgeClass> edge_classes() const { return classes_; }
  EdgeClass edge_class(int edge) const { return classes_.at(static_cast<std::size_t>(edge)); }
  std::optional<int> edge_index(int u, int v) const;

  /// Neighbours of v in counterclockwise angular order.
  std::span<const int> neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  /// Sorted boundary particles: isolated, or incident to a regular boundary
  /// or outer wire edge.
  std::span<const int> boundary_vertices() const { return boundary_; }
  bool is_boundary(int v) const { return is_boundary_.at(static_cast<std::size_t>(v)) != 0; }

  int component(int v) const { return component_.at(static_cast<std::size_t>(v)); }
  int component_count() const { return component_count_; }

  /// Half-edge u -> neighbors(u)[k] has id half_edge_offset(u) + k.
  int half_edge_offset(int u) const { return offsets_.at(static_cast<std::size_t>(u)); }
  int half_edge_count() const { return static_cast<int>(targets_.size()); }
  int half_edge_source(int h) const { return sources_.at(static_cast<std::size_t>(h)); }
  int half_edge_target(int h) const { return targets_.at(static_cast<std::size_t>(h)); }
  int half_edge_twin(int h) const { return twins_.at(static_cast<std::size_t>(h)); }
  /// Successor in the face walk.
  int half_edge_next(int h) const;
  double half_edge_angle(int h) const { return angles_.at(static_cast<std::size_t>(h)); }
  int half_edge_face(int h) const { return tracing_.half_edge_face.at(static_cast<std::size_t>(h)); }

 private:
  friend BondGraph build_bond_graph(const Configuration&, BondRange);

  Configuration config_;
  BondRange range_;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<int> sources_;
  std::vector<int> targets_;
  std::vector<int> twins_;
  std::vector<double> angles_;
  std::vector<int> component_;
  int component_count_ = 0;
  FaceTracing tracing_;
  std::vector<EdgeClass> classes_;
  std::vector<int> boundary_;
  std::vector<char> is_boundary_;
};

/// Regular boundary edges plus twice the outer wire edges.
int perimeter(const BondGraph& graph);

/// Walk length: interior edges once, inner wire edges twice.
int inner_perimeter(const FaceWalk& face);

/// v0 - v1 + v2 with v2 the number of faces.
int euler_characteristic(const BondGraph& graph);

/// Number of interior edges of the bond graph at x.
int interior_degree(const BondGraph& graph, int x);

/// Connected, at least three particles, no outer wire edges, and the outer
/// walk visits every boundary particle exactly once.
bool has_simple_closed_boundary(const BondGraph& graph);

/// Boundary particles in counterclockwise order, starting at the smallest
/// index. Throws BoundaryNotSimpleError unless has_simple_closed_boundary.
std::vector<int> boundary_cycle(const BondGraph& graph);

}  // namespace latticecurv
