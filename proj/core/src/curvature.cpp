#include "latticecurv/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "latticecurv/error.hpp"
#include "latticecurv/geometry.hpp"

namespace latticecurv {

std::vector<SphereCounts> sphere_counts(const TriGraph& tri) {
  const auto n = static_cast<std::size_t>(tri.base().vertex_count());
  std::vector<std::vector<Edge>> link(n);
  std::vector<SphereCounts> out(n);
  for (const auto& t : tri.tri_faces()) {
    const auto& v = t.vertices;
    for (std::size_t k = 0; k < 3; ++k) {
      const int x = v[k];
      const int y = v[(k + 1) % 3];
      const int z = v[(k + 2) % 3];
      link[static_cast<std::size_t>(x)].push_back({std::min(y, z), std::max(y, z)});
      ++out[static_cast<std::size_t>(x)].v2;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    auto& edges = link[x];
    std::sort(edges.begin(), edges.end());
    out[x].v1 = static_cast<int>(std::unique(edges.begin(), edges.end()) - edges.begin());
  }
  return out;
}

int induced_sphere_edges(const TriGraph& tri, int x) {
  std::vector<int> nb(tri.base().neighbors(x).begin(), tri.base().neighbors(x).end());
  for (const auto& c : tri.chords()) {
    if (c.u == x) nb.push_back(c.v);
    if (c.v == x) nb.push_back(c.u);
  }
  int count = 0;
  for (std::size_t a = 0; a < nb.size(); ++a) {
    for (std::size_t b = a + 1; b < nb.size(); ++b) {
      if (tri.adjacent(nb[a], nb[b])) ++count;
    }
  }
  return count;
}

std::vector<int> puiseux_curvature(const TriGraph& tri) {
  const auto spheres = sphere_counts(tri);
  std::vector<int> k(spheres.size());
  for (std::size_t x = 0; x < spheres.size(); ++x) {
    k[x] = (tri.base().is_boundary(static_cast<int>(x)) ? 3 : 6) - spheres[x].v1;
  }
  return k;
}

std::vector<int> euler_like_curvature(const TriGraph& tri) {
  const auto spheres = sphere_counts(tri);
  std::vector<int> k(spheres.size());
  for (std::size_t x = 0; x < spheres.size(); ++x) {
    // 6 V0 - 3 V1 + 2 V2, which is 6 - V1 because V1 = V2 for a link.
    k[x] = 6 * spheres[x].v0 - 3 * spheres[x].v1 + 2 * spheres[x].v2;
  }
  return k;
}

std::vector<GromovEuler> gromov_euler_curvatures(const BondGraph& graph) {
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  std::vector<Rational> corner_sum(n, Rational(0));
  std::vector<long long> corners(n, 0);
  for (const auto& f : graph.faces()) {
    const Rational share(1, static_cast<long long>(f.length()));
    for (int v : f.vertices) {
      corner_sum[static_cast<std::size_t>(v)] += share;
      ++corners[static_cast<std::size_t>(v)];
    }
  }
  std::vector<GromovEuler> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Rational base = Rational(1) - Rational(graph.degree(static_cast<int>(x)), 2);
    out[x].gromov = base + corner_sum[x];
    out[x].euler = base + Rational(corners[x], 3);
  }
  return out;
}

GromovEuler gromov_euler_curvatures(const BondGraph& graph, int x) {
  if (x < 0 || x >= graph.vertex_count()) throw DomainError("vertex index out of range");
  return gromov_euler_curvatures(graph).at(static_cast<std::size_t>(x));
}

namespace {

void require_boundary_vertex(const BondGraph& graph, int x) {
  if (x < 0 || x >= graph.vertex_count()) throw DomainError("vertex index out of range");
  if (!has_simple_closed_boundary(graph)) {
    throw BoundaryNotSimpleError("configuration does not have a simply closed polygonal boundary");
  }
  if (!graph.is_boundary(x)) throw PreconditionError("vertex " + std::to_string(x) + " is not a boundary particle");
}

/// Inner angle at every position of the counterclockwise boundary cycle.
std::vector<std::pair<int, double>> boundary_angles(const BondGraph& graph) {
  const auto cycle = boundary_cycle(graph);
  const std::size_t n = cycle.size();
  std::vector<std::pair<int, double>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point prev = graph.config()[static_cast<std::size_t>(cycle[(i + n - 1) % n])];
    const Point cur = graph.config()[static_cast<std::size_t>(cycle[i])];
    const Point next = graph.config()[static_cast<std::size_t>(cycle[(i + 1) % n])];
    out.emplace_back(cycle[i], geom::positive_sweep(geom::direction(cur, prev) - geom::direction(cur, next)));
  }
  return out;
}

}  // namespace

int max_puiseux_curvature(const BondGraph& graph, int x) {
  require_boundary_vertex(graph, x);
  return 2 - interior_degree(graph, x);
}

double inner_angle(const BondGraph& graph, int x) {
  require_boundary_vertex(graph, x);
  for (const auto& [v, angle] : boundary_angles(graph)) {
    if (v == x) return angle;
  }
  throw PreconditionError("vertex " + std::to_string(x) + " is not on the boundary cycle");
}

double euclidean_puiseux(const BondGraph& graph, int x) { return std::numbers::pi - inner_angle(graph, x); }

CurvatureProfile gauss_bonnet_report(const TriGraph& tri) {
  const BondGraph& g = tri.base();
  const auto n = static_cast<std::size_t>(g.vertex_count());
  CurvatureProfile prof;
  prof.spheres = sphere_counts(tri);
  prof.puiseux = puiseux_curvature(tri);
  prof.euler_like = euler_like_curvature(tri);
  prof.max_puiseux.assign(n, std::nullopt);
  prof.euclidean_puiseux.assign(n, std::nullopt);

  const auto ge = gromov_euler_curvatures(g);
  prof.gromov.reserve(n);
  prof.euler.reserve(n);
  for (const auto& c : ge) {
    prof.gromov.push_back(c.gromov);
    prof.euler.push_back(c.euler);
  }

  prof.simple_boundary = has_simple_closed_boundary(g);
  if (prof.simple_boundary) {
    for (const auto& [v, angle] : boundary_angles(g)) {
      prof.max_puiseux[static_cast<std::size_t>(v)] = 2 - interior_degree(g, v);
      prof.euclidean_puiseux[static_cast<std::size_t>(v)] = std::numbers::pi - angle;
    }
  }

  prof.chi = euler_characteristic(g);
  prof.perimeter = perimeter(g);
  prof.boundary_count = static_cast<int>(g.boundary_vertices().size());
  prof.v0 = g.vertex_count();
  prof.v1 = tri.edge_count();
  prof.v2 = static_cast<int>(tri.tri_faces().size());
  for (std::size_t x = 0; x < n; ++x) {
    prof.sum_puiseux += prof.puiseux[x];
    prof.sum_v0 += prof.spheres[x].v0;
    prof.sum_v1 += prof.spheres[x].v1;
    prof.sum_v2 += prof.spheres[x].v2;
  }

  auto check = [](const char* name, long long lhs, long long rhs) {
    if (lhs != rhs) {
      throw IdentityViolation(name, static_cast<double>(lhs), static_cast<double>(rhs),
                              std::string(name) + " violated: " + std::to_string(lhs) + " != " + std::to_string(rhs));
    }
  };
  check("handshake-vertices", prof.sum_v0, prof.v0);
  check("handshake-edges", prof.sum_v1, 2LL * prof.v1 - prof.perimeter);
  check("handshake-faces", prof.sum_v2, 3LL * prof.v2);
  check("euler-characteristic-triangulation", euler_characteristic(tri), prof.chi);
  check("gauss-bonnet", prof.sum_puiseux, prof.six_chi() + prof.boundary_term());
  return prof;
}

void require_hard_sphere_simple(const BondGraph& graph) {
  std::vector<std::string> failed;
  if (!(graph.range() == BondRange::unit())) failed.emplace_back("bond range must be [1, 1]");
  if (graph.vertex_count() >= 2 && min_pairwise_distance(graph.config()) < 1.0 - graph.config().tol()) {
    failed.emplace_back("all interparticle distances must be >= 1");
  }
  if (!has_simple_closed_boundary(graph)) failed.emplace_back("boundary must be simply closed");
  if (failed.empty()) return;
  std::string msg = "hard-sphere precondition violated:";
  for (const auto& f : failed) msg += " " + f + ";";
  if (failed.size() == 1 && failed.front() == "boundary must be simply closed") throw BoundaryNotSimpleError(msg);
  throw PreconditionError(msg);
}

CurvatureBoundReport curvature_bound_check(const BondGraph& graph, double tolerance) {
  require_hard_sphere_simple(graph);
  CurvatureBoundReport report;
  report.all_hold = true;
  for (const auto& [v, angle] : boundary_angles(graph)) {
    CurvatureBoundEntry e;
    e.vertex = v;
    e.interior_edges = interior_degree(graph, v);
    e.max_puiseux = 2 - e.interior_edges;
    e.inner_angle = angle;
    e.euclidean_puiseux = std::numbers::pi - angle;
    e.slack = e.max_puiseux / 6.0 - e.euclidean_puiseux / (2.0 * std::numbers::pi);
    e.angle_slack = angle - (e.interior_edges + 1) * std::numbers::pi / 3.0;
    e.holds = e.slack >= -tolerance && e.angle_slack >= -tolerance;
    report.all_hold = report.all_hold && e.holds;
    report.euclidean_sum += e.euclidean_puiseux;
    report.entries.push_back(e);
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
  return report;
}

}  // namespace latticecurv
