#include "latticecurv/triangulation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "latticecurv/error.hpp"
#include "latticecurv/geometry.hpp"

namespace latticecurv {

std::string_view to_string(TriangulationStrategy s) {
  return s == TriangulationStrategy::EarClip ? "ear-clip" : "fan";
}

namespace {

std::uint64_t pair_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
}

constexpr double kAngleEps = 1e-9;

/// Triangulates one face walk. The polygon is a list of vertex ids in
/// counterclockwise order, possibly with repeats.
class FaceTriangulator {
 public:
  FaceTriangulator(const Configuration& config, std::unordered_set<std::uint64_t>& adjacency,
                   std::vector<Edge>& chords, std::vector<FaceWalk>& triangles)
      : config_(config), adjacency_(adjacency), chords_(chords), triangles_(triangles), eps_(config.tol()) {}

  void ear_clip(std::vector<int> poly) {
    std::size_t cursor = 0;
    while (poly.size() > 3) {
      const std::size_t n = poly.size();
      bool clipped = false;
      for (std::size_t step = 0; step < n && !clipped; ++step) {
        const std::size_t i = (cursor + step) % n;
        const std::size_t prev = (i + n - 1) % n;
        const std::size_t next = (i + 1) % n;
        if (geom::orientation(pt(poly[prev]), pt(poly[i]), pt(poly[next]), eps_) <= 0) continue;
        if (!valid_diagonal(poly, prev, next)) continue;
        add_chord(poly[prev], poly[next]);
        emit(poly[prev], poly[i], poly[next]);
        poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
        cursor = prev < i ? prev : 0;
        clipped = true;
      }
      if (!clipped) throw TriangulationError(describe("no valid ear", poly));
    }
    finish(poly);
  }

  void fan(const std::vector<int>& poly) {
    if (poly.size() <= 3) {
      finish(poly);
      return;
    }
    const std::size_t n = poly.size();
    std::vector<std::size_t> candidates(n);
    std::iota(candidates.begin(), candidates.end(), std::size_t{0});
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::size_t a, std::size_t b) { return poly[a] < poly[b]; });
    for (std::size_t apex : candidates) {
      std::vector<std::size_t> targets;
      for (std::size_t step = 2; step + 1 < n; ++step) {
        const std::size_t j = (apex + step) % n;
        if (valid_diagonal(poly, apex, j)) {
          add_chord(poly[apex], poly[j]);
          targets.push_back(j);
        }
      }
      if (targets.empty()) continue;
      // Pieces between consecutive fan targets, each starting at the apex.
      std::size_t from = (apex + 1) % n;
      targets.push_back((apex + n - 1) % n);
      for (std::size_t to : targets) {
        std::vector<int> piece{poly[apex]};
        for (std::size_t k = from;; k = (k + 1) % n) {
          piece.push_back(poly[k]);
          if (k == to) break;
        }
        fan(piece);
        from = to;
      }
      return;
    }
    throw TriangulationError(describe("no valid fan apex", poly));
  }

 private:
  Point pt(int v) const { return config_[static_cast<std::size_t>(v)]; }

  bool adjacent(int u, int v) const { return adjacency_.contains(pair_key(u, v)); }

  void add_chord(int u, int v) {
    adjacency_.insert(pair_key(u, v));
    chords_.push_back({std::min(u, v), std::max(u, v)});
  }

  void emit(int a, int b, int c) {
    FaceWalk t;
    t.vertices = {a, b, c};
    const Point poly[3] = {pt(a), pt(b), pt(c)};
    t.signed_area = geom::signed_area(poly);
    triangles_.push_back(std::move(t));
  }

  void finish(const std::vector<int>& poly) {
    if (poly.size() != 3 || poly[0] == poly[1] || poly[1] == poly[2] || poly[0] == poly[2]) {
      throw TriangulationError(describe("degenerate final triangle", poly));
    }
    emit(poly[0], poly[1], poly[2]);
  }

  /// Direction to `target` strictly inside the interior angle at position i.
  bool in_cone(const std::vector<int>& poly, std::size_t i, Point target) const {
    const std::size_t n = poly.size();
    const Point cur = pt(poly[i]);
    const double back = geom::direction(cur, pt(poly[(i + n - 1) % n]));
    const double fwd = geom::direction(cur, pt(poly[(i + 1) % n]));
    const double total = geom::positive_sweep(back - fwd);
    const double s = geom::positive_sweep(back - geom::direction(cur, target));
    return s > kAngleEps && s < total - kAngleEps;
  }

  bool valid_diagonal(const std::vector<int>& poly, std::size_t a, std::size_t b) const {
    const int va = poly[a];
    const int vb = poly[b];
    if (va == vb || adjacent(va, vb)) return false;
    const Point pa = pt(va);
    const Point pb = pt(vb);
    if (!in_cone(poly, a, pb) || !in_cone(poly, b, pa)) return false;
    const std::size_t n = poly.size();
    for (std::size_t k = 0; k < n; ++k) {
      const int c = poly[k];
      const int d = poly[(k + 1) % n];
      const bool c_end = c == va || c == vb;
      const bool d_end = d == va || d == vb;
      if (c_end && d_end) continue;
      if (c_end || d_end) {
        const int other = c_end ? d : c;
        const int shared = c_end ? c : d;
        const int far = shared == va ? vb : va;
        if (geom::on_segment(pt(other), pa, pb, eps_)) return false;
        if (geom::on_segment(pt(far), pt(shared), pt(other), eps_)) return false;
        continue;
      }
      if (geom::segments_intersect(pa, pb, pt(c), pt(d), eps_)) return false;
    }
    return true;
  }

  std::string describe(const std::string& what, const std::vector<int>& poly) const {
    std::string s = what + " in face walk [";
    for (std::size_t i = 0; i < poly.size(); ++i) s += (i ? " " : "") + std::to_string(poly[i]);
    return s + "]";
  }

  const Configuration& config_;
  std::unordered_set<std::uint64_t>& adjacency_;
  std::vector<Edge>& chords_;
  std::vector<FaceWalk>& triangles_;
  double eps_;
};

}  // namespace

bool TriGraph::adjacent(int u, int v) const { return adjacency_.contains(pair_key(u, v)); }

TriGraph triangulate(const BondGraph& graph, TriangulationStrategy strategy) {
  TriGraph t;
  t.base_ = graph;
  t.strategy_ = strategy;
  for (const auto& e : graph.edges()) t.adjacency_.insert(pair_key(e.u, e.v));

  FaceTriangulator worker(graph.config(), t.adjacency_, t.chords_, t.tri_faces_);
  for (const auto& face : graph.faces()) {
    const std::size_t before = t.chords_.size();
    if (strategy == TriangulationStrategy::EarClip) {
      worker.ear_clip(face.vertices);
    } else {
      worker.fan(face.vertices);
    }
    const std::size_t added = t.chords_.size() - before;
    if (added + 3 != face.length()) {
      throw TriangulationError("face of length " + std::to_string(face.length()) + " received " +
                               std::to_string(added) + " chords");
    }
  }
  return t;
}

int defect_measure(const TriGraph& tri) { return static_cast<int>(tri.chords().size()); }

int defect_measure_direct(const BondGraph& graph) {
  int mu = 0;
  for (const auto& f : graph.faces()) mu += inner_perimeter(f) - 3;
  return mu;
}

int euler_characteristic(const TriGraph& tri) {
  return tri.base().vertex_count() - tri.edge_count() + static_cast<int>(tri.tri_faces().size());
}

}  // namespace latticecurv
