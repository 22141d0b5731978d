#include "latticecurv/bond_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <unordered_map>

#include "latticecurv/error.hpp"
#include "latticecurv/geometry.hpp"

namespace latticecurv {

std::string_view to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::RegularInterior:
      return "regular-interior";
    case EdgeClass::RegularBoundary:
      return "regular-boundary";
    case EdgeClass::OuterWire:
      return "outer-wire";
    case EdgeClass::InnerWire:
      return "inner-wire";
  }
  return "unknown";
}

std::optional<EdgeClass> edge_class_from_string(std::string_view name) {
  for (auto c : {EdgeClass::RegularInterior, EdgeClass::RegularBoundary, EdgeClass::OuterWire, EdgeClass::InnerWire}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

namespace {

std::vector<Edge> find_edges(const Configuration& config, BondRange range) {
  const auto pts = config.points();
  const double cell = range.beta + config.tol();
  auto key = [](long long cx, long long cy) { return (cx << 32) ^ (cy & 0xffffffffLL); };
  std::unordered_map<long long, std::vector<int>> grid;
  std::vector<std::pair<long long, long long>> cells(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto cx = static_cast<long long>(std::floor(pts[i].x / cell));
    const auto cy = static_cast<long long>(std::floor(pts[i].y / cell));
    cells[i] = {cx, cy};
    grid[key(cx, cy)].push_back(static_cast<int>(i));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto [cx, cy] = cells[i];
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = grid.find(key(cx + dx, cy + dy));
        if (it == grid.end()) continue;
        for (int j : it->second) {
          if (j <= static_cast<int>(i)) continue;
          if (range.contains(distance(pts[i], pts[static_cast<std::size_t>(j)]), config.tol())) {
            edges.push_back({static_cast<int>(i), j});
          }
        }
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

double walk_turning(const BondGraph& g, const std::vector<int>& halfedges) {
  double turning = 0.0;
  const std::size_t k = halfedges.size();
  for (std::size_t i = 0; i < k; ++i) {
    const int in = halfedges[(i + k - 1) % k];
    const int out = halfedges[i];
    const double back = g.half_edge_angle(g.half_edge_twin(in));
    const double sweep = geom::positive_sweep(back - g.half_edge_angle(out));
    turning += std::numbers::pi - sweep;
  }
  return turning;
}

FaceWalk make_walk(const BondGraph& g, const std::vector<int>& halfedges) {
  FaceWalk w;
  w.vertices.reserve(halfedges.size());
  std::vector<Point> poly;
  poly.reserve(halfedges.size());
  for (int h : halfedges) {
    const int v = g.half_edge_source(h);
    w.vertices.push_back(v);
    poly.push_back(g.config()[static_cast<std::size_t>(v)]);
  }
  w.signed_area = geom::signed_area(poly);
  return w;
}

struct Box {
  double xmin, xmax, ymin, ymax;
  bool contains(Point p) const { return p.x > xmin && p.x < xmax && p.y > ymin && p.y < ymax; }
};

}  // namespace

std::optional<int> BondGraph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const Edge e{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

std::span<const int> BondGraph::neighbors(int v) const {
  const auto b = static_cast<std::size_t>(offsets_.at(static_cast<std::size_t>(v)));
  const auto e = static_cast<std::size_t>(offsets_.at(static_cast<std::size_t>(v) + 1));
  return std::span<const int>(targets_).subspan(b, e - b);
}

int BondGraph::half_edge_next(int h) const {
  const int twin = half_edge_twin(h);
  const int v = half_edge_target(h);
  const int base = offsets_[static_cast<std::size_t>(v)];
  const int deg = offsets_[static_cast<std::size_t>(v) + 1] - base;
  const int pos = twin - base;
  return base + (pos + deg - 1) % deg;
}

FaceTracing enumerate_faces(const BondGraph& g) {
  FaceTracing out;
  const int nh = g.half_edge_count();
  out.half_edge_face.assign(static_cast<std::size_t>(nh), -1);

  struct Traced {
    std::vector<int> halfedges;
    int component;
    double turning;
  };
  std::vector<Traced> bounded;
  std::vector<char> seen(static_cast<std::size_t>(nh), 0);
  for (int start = 0; start < nh; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> hs;
    int h = start;
    do {
      seen[static_cast<std::size_t>(h)] = 1;
      hs.push_back(h);
      h = g.half_edge_next(h);
    } while (h != start);
    const double turning = walk_turning(g, hs);
    const int comp = g.component(g.half_edge_source(start));
    if (turning < 0.0) {
      out.outer_walks.push_back(make_walk(g, hs));
    } else {
      bounded.push_back({std::move(hs), comp, turning});
    }
  }

  // One representative per component: its smallest vertex index.
  std::vector<int> rep(static_cast<std::size_t>(g.component_count()), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto& r = rep[static_cast<std::size_t>(g.component(v))];
    if (r < 0) r = v;
  }

  for (auto& walk : bounded) {
    FaceWalk fw = make_walk(g, walk.halfedges);
    std::vector<Point> poly;
    poly.reserve(fw.vertices.size());
    for (int v : fw.vertices) poly.push_back(g.config()[static_cast<std::size_t>(v)]);
    Box box{poly[0].x, poly[0].x, poly[0].y, poly[0].y};
    for (const auto& p : poly) {
      box.xmin = std::min(box.xmin, p.x);
      box.xmax = std::max(box.xmax, p.x);
      box.ymin = std::min(box.ymin, p.y);
      box.ymax = std::max(box.ymax, p.y);
    }
    bool encloses = false;
    for (std::size_t c = 0; c < rep.size() && !encloses; ++c) {
      if (static_cast<int>(c) == walk.component) continue;
      const Point p = g.config()[static_cast<std::size_t>(rep[c])];
      encloses = box.contains(p) && geom::winding_number(poly, p) != 0;
    }
    if (encloses) {
      out.enclosing_walks.push_back(std::move(fw));
      continue;
    }
    const int face = static_cast<int>(out.faces.size());
    for (int h : walk.halfedges) out.half_edge_face[static_cast<std::size_t>(h)] = face;
    out.faces.push_back(std::move(fw));
  }
  return out;
}

std::vector<EdgeClass> classify_edges(const BondGraph& g) {
  std::vector<EdgeClass> classes(g.edges().size(), EdgeClass::OuterWire);
  for (int h = 0; h < g.half_edge_count(); ++h) {
    const int u = g.half_edge_source(h);
    const int v = g.half_edge_target(h);
    if (u > v) continue;
    const int f1 = g.half_edge_face(h);
    const int f2 = g.half_edge_face(g.half_edge_twin(h));
    EdgeClass c;
    if (f1 >= 0 && f2 >= 0) {
      c = f1 == f2 ? EdgeClass::InnerWire : EdgeClass::RegularInterior;
    } else if (f1 >= 0 || f2 >= 0) {
      c = EdgeClass::RegularBoundary;
    } else {
      c = EdgeClass::OuterWire;
    }
    classes[static_cast<std::size_t>(*g.edge_index(u, v))] = c;
  }
  return classes;
}

BondGraph build_bond_graph(const Configuration& config, BondRange range) {
  range.validate();
  if (config.size() >= 2) {
    const double dmin = min_pairwise_distance(config);
    if (!(range.beta + config.tol() < std::sqrt(2.0) * dmin)) {
      throw PlanarityError(range.beta, dmin,
                           "planarity precondition violated: beta = " + std::to_string(range.beta) +
                               " is not below sqrt(2) * d_min = sqrt(2) * " + std::to_string(dmin));
    }
  }

  BondGraph g;
  g.config_ = config;
  g.range_ = range;
  g.edges_ = find_edges(config, range);

  const std::size_t n = config.size();
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges_) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adj[v];
    const Point pv = config[v];
    std::vector<std::pair<double, int>> keyed;
    keyed.reserve(list.size());
    for (int w : list) keyed.emplace_back(geom::direction(pv, config[static_cast<std::size_t>(w)]), w);
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t k = 0; k < keyed.size(); ++k) {
      list[k] = keyed[k].second;
      g.targets_.push_back(keyed[k].second);
      g.sources_.push_back(static_cast<int>(v));
      g.angles_.push_back(keyed[k].first);
    }
    g.offsets_[v + 1] = static_cast<int>(g.targets_.size());
  }
  g.twins_.assign(g.targets_.size(), -1);
  for (std::size_t v = 0; v < n; ++v) {
    for (int h = g.offsets_[v]; h < g.offsets_[v + 1]; ++h) {
      const int w = g.targets_[static_cast<std::size_t>(h)];
      const auto nb = g.neighbors(w);
      const auto pos = std::find(nb.begin(), nb.end(), static_cast<int>(v)) - nb.begin();
      g.twins_[static_cast<std::size_t>(h)] = g.offsets_[static_cast<std::size_t>(w)] + static_cast<int>(pos);
    }
  }

  // Connected components by iterative DFS in index order.
  g.component_.assign(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (g.component_[s] >= 0) continue;
    const int id = g.component_count_++;
    std::vector<int> stack{static_cast<int>(s)};
    g.component_[s] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (g.component_[static_cast<std::size_t>(w)] < 0) {
          g.component_[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
  }

  g.tracing_ = enumerate_faces(g);
  g.classes_ = classify_edges(g);

  g.is_boundary_.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (g.neighbors(static_cast<int>(v)).empty()) g.is_boundary_[v] = 1;
  }
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    if (!is_interior(g.classes_[e])) {
      g.is_boundary_[static_cast<std::size_t>(g.edges_[e].u)] = 1;
      g.is_boundary_[static_cast<std::size_t>(g.edges_[e].v)] = 1;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (g.is_boundary_[v]) g.boundary_.push_back(static_cast<int>(v));
  }
  return g;
}

int perimeter(const BondGraph& g) {
  int p = 0;
  for (auto c : g.edge_classes()) {
    if (c == EdgeClass::RegularBoundary) p += 1;
    if (c == EdgeClass::OuterWire) p += 2;
  }
  return p;
}

int inner_perimeter(const FaceWalk& face) { return static_cast<int>(face.length()); }

int euler_characteristic(const BondGraph& g) {
  return g.vertex_count() - static_cast<int>(g.edges().size()) + static_cast<int>(g.faces().size());
}

int interior_degree(const BondGraph& g, int x) {
  int count = 0;
  for (int w : g.neighbors(x)) {
    if (is_interior(g.edge_class(*g.edge_index(x, w)))) ++count;
  }
  return count;
}

bool has_simple_closed_boundary(const BondGraph& g) {
  if (g.vertex_count() < 3 || g.component_count() != 1 || g.outer_walks().size() != 1) return false;
  for (auto c : g.edge_classes()) {
    if (c == EdgeClass::OuterWire) return false;
  }
  const auto& walk = g.outer_walks().front().vertices;
  std::vector<int> sorted = walk;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  const auto boundary = g.boundary_vertices();
  return std::equal(sorted.begin(), sorted.end(), boundary.begin(), boundary.end());
}

std::vector<int> boundary_cycle(const BondGraph& g) {
  if (!has_simple_closed_boundary(g)) {
    throw BoundaryNotSimpleError("configuration does not have a simply closed polygonal boundary");
  }
  std::vector<int> cycle(g.outer_walks().front().vertices.rbegin(), g.outer_walks().front().vertices.rend());
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

}  // namespace latticecurv
