#include "latticecurv/ground_state.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "latticecurv/curvature.hpp"
#include "latticecurv/error.hpp"
#include "latticecurv/triangulation.hpp"

namespace latticecurv {

long long shell_count(int core_perimeter, int m) {
  if (m < 0 || core_perimeter < 0) throw DomainError("shell_count needs m >= 0 and P' >= 0");
  return static_cast<long long>(m) * (core_perimeter + 3LL * (m + 1));
}

ShellDecomposition decompose_shells(long long d, int core_perimeter) {
  if (d < 0) throw DomainError("particle count must be non-negative");
  ShellDecomposition s;
  while (shell_count(core_perimeter, s.m + 1) <= d) ++s.m;
  s.d_m = shell_count(core_perimeter, s.m);
  s.delta = static_cast<int>(d - s.d_m);
  return s;
}

namespace {

int direction_index(LatticeCoord d) {
  for (int k = 0; k < 6; ++k) {
    if (kLatticeDirections[static_cast<std::size_t>(k)] == d) return k;
  }
  throw NotOnLatticeError("consecutive boundary particles are not lattice neighbours");
}

LatticeCoord step(int k) { return kLatticeDirections[static_cast<std::size_t>(((k % 6) + 6) % 6)]; }

/// The 6-particle triangle used as the first shell around the empty set,
/// listed so that every prefix is a ground state.
std::vector<LatticeCoord> empty_core_shell() { return {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}}; }

int perimeter_of(const Configuration& config) { return perimeter(build_bond_graph(config, BondRange::unit())); }

// At most two negative-curvature points, not bonded to each other. Two bonded
// ones can bound a notch one site wide, which the shell fills.
bool shell_equality_expected(const Configuration& core) {
  if (core.size() < 3) return false;
  const BondGraph g = build_bond_graph(core, BondRange::unit());
  const auto k = puiseux_curvature(triangulate(g));
  std::vector<int> negative;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (k[static_cast<std::size_t>(v)] < 0) negative.push_back(v);
  }
  if (negative.size() > 2) return false;
  return negative.size() < 2 || !g.edge_index(negative[0], negative[1]);
}

void check_shell_growth(const Configuration& core, const Configuration& grown) {
  const int before = core.empty() ? 0 : perimeter_of(core);
  const int after = perimeter_of(grown);
  if (after > before + 6) {
    throw IdentityViolation("closed-shell-upper-bound", after, before + 6,
                            "closed shell raised the perimeter from " + std::to_string(before) + " to " +
                                std::to_string(after));
  }
  if (after != before + 6 && shell_equality_expected(core)) {
    throw IdentityViolation("closed-shell-equality", after, before + 6,
                            "closed shell around a core with at most two non-adjacent negative-curvature points must "
                            "add 6 to the perimeter");
  }
}

void require_shell_core(const Configuration& core) {
  if (core.size() <= 1) return;
  const BondGraph g = build_bond_graph(core, BondRange::unit());
  if (!has_simple_closed_boundary(g)) {
    throw BoundaryNotSimpleError("closed shells need a core with simply closed polygonal boundary");
  }
}

std::vector<LatticeCoord> sorted_coords(const LatticeSet& set) {
  std::vector<LatticeCoord> v(set.begin(), set.end());
  std::sort(v.begin(), v.end(), [](LatticeCoord a, LatticeCoord b) { return a.j < b.j || (a.j == b.j && a.i < b.i); });
  return v;
}

}  // namespace

LatticeSet add_closed_shell(const LatticeSet& core) {
  const auto coords = sorted_coords(core);
  const Configuration grown = add_closed_shell(to_configuration(coords));
  const auto out = to_lattice(grown);
  return LatticeSet(out.begin(), out.end());
}

Configuration add_closed_shell(const Configuration& core) {
  if (core.empty()) return to_configuration(empty_core_shell());
  const auto coords = to_lattice(core);
  require_shell_core(core);
  LatticeSet present(coords.begin(), coords.end());
  LatticeSet added;
  for (const auto& c : coords) {
    for (const auto& d : kLatticeDirections) {
      if (!present.contains(c + d)) added.insert(c + d);
    }
  }
  std::vector<LatticeCoord> all = coords;
  const auto extra = sorted_coords(added);
  all.insert(all.end(), extra.begin(), extra.end());
  Configuration grown = to_configuration(all);
  check_shell_growth(core, grown);
  return grown;
}

Configuration remove_boundary(const BondGraph& graph) {
  std::vector<std::size_t> keep;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (!graph.is_boundary(v)) keep.push_back(static_cast<std::size_t>(v));
  }
  return graph.config().subset(keep);
}

Configuration remove_boundary(const Configuration& config) {
  return remove_boundary(build_bond_graph(config, BondRange::unit()));
}

std::vector<LatticeCoord> ordered_next_shell(const LatticeSet& core) {
  if (core.empty()) return empty_core_shell();
  if (core.size() == 1) {
    std::vector<LatticeCoord> ring;
    for (const auto& d : kLatticeDirections) ring.push_back(*core.begin() + d);
    return ring;
  }
  const auto coords = sorted_coords(core);
  const Configuration config = to_configuration(coords);
  const BondGraph g = build_bond_graph(config, BondRange::unit());
  const auto cycle_ids = boundary_cycle(g);
  const std::size_t n = cycle_ids.size();
  std::vector<LatticeCoord> cycle;
  cycle.reserve(n);
  for (int v : cycle_ids) cycle.push_back(coords[static_cast<std::size_t>(v)]);

  // Turning number at each boundary particle in units of 60 degrees; for a
  // crystallized core this is the Puiseux curvature.
  std::vector<int> out_dir(n);
  std::vector<int> turn(n);
  for (std::size_t t = 0; t < n; ++t) {
    const auto prev = cycle[(t + n - 1) % n];
    const auto cur = cycle[t];
    const auto next = cycle[(t + 1) % n];
    const int din = direction_index(cur - prev);
    out_dir[t] = direction_index(next - cur);
    int k = ((out_dir[t] - din) % 6 + 6) % 6;
    if (k > 3) k -= 6;
    turn[t] = k;
  }

  // Particle j = K + 1, ..., 1 of boundary particle x sits at x + step(out - j);
  // in that order they run counterclockwise, the last one being the joint
  // neighbour of x and its successor.
  std::vector<LatticeCoord> seq;
  LatticeSet seen;
  for (std::size_t t = 0; t < n; ++t) {
    for (int j = turn[t] + 1; j >= 1; --j) {
      const auto c = cycle[t] + step(out_dir[t] - j);
      if (core.contains(c) || !seen.insert(c).second) continue;
      seq.push_back(c);
    }
  }

  std::optional<LatticeCoord> start;
  std::optional<std::size_t> negative;
  for (std::size_t t = 0; t < n; ++t) {
    if (turn[t] < 0 && (!negative || cycle[t] < cycle[*negative])) negative = t;
  }
  if (negative) {
    // a reflex corner has a single outside neighbour, shared by both edges
    const std::size_t t = *negative;
    start = cycle[t] + step(out_dir[t] - 1);
  } else {
    // Sides run between consecutive corners (non-zero turn).
    std::size_t best_corner = n;
    std::size_t best_len = 0;
    for (std::size_t t = 0; t < n; ++t) {
      if (turn[t] == 0) continue;
      std::size_t len = 1;
      while (turn[(t + len) % n] == 0) ++len;
      if (best_corner == n || len > best_len || (len == best_len && cycle[t] < cycle[best_corner])) {
        best_corner = t;
        best_len = len;
      }
    }
    start = cycle[best_corner] + step(out_dir[best_corner] - 1);
  }
  auto it = std::find(seq.begin(), seq.end(), *start);
  if (it == seq.end()) throw IdentityViolation("shell-order", 0, 0, "partial-shell start is not in the next shell");
  std::rotate(seq.begin(), it, seq.end());
  return seq;
}

std::vector<LatticeCoord> build_minimizer_lattice(int n) {
  if (n < 1) throw DomainError("build_minimizer needs N >= 1");
  int k = 0;
  while (3 * (k + 1) * (k + 1) + 3 * (k + 1) + 1 <= n) ++k;
  auto points = hexagon(k);
  const int delta = n - static_cast<int>(points.size());
  if (delta > 0) {
    const auto shell = ordered_next_shell(LatticeSet(points.begin(), points.end()));
    points.insert(points.end(), shell.begin(), shell.begin() + delta);
  }
  return points;
}

Configuration build_minimizer(int n) { return to_configuration(build_minimizer_lattice(n)); }

int negative_curvature_count(const Configuration& config) {
  const TriGraph tri = triangulate(build_bond_graph(config, BondRange::unit()));
  const auto k = puiseux_curvature(tri);
  return static_cast<int>(std::count_if(k.begin(), k.end(), [](int v) { return v < 0; }));
}

bool is_topologically_crystallized(const Configuration& config) {
  const BondGraph g = build_bond_graph(config, BondRange::unit());
  return defect_measure_direct(g) == 0 && has_simple_closed_boundary(g);
}

RemovalReport removal_inequality_check(const Configuration& config) {
  const BondGraph g = build_bond_graph(config, BondRange::unit());
  require_hard_sphere_simple(g);
  const Configuration inner = remove_boundary(g);
  if (inner.empty()) throw PreconditionError("removal inequality needs a nonempty interior");
  const BondGraph gi = build_bond_graph(inner, BondRange::unit());

  RemovalReport r;
  r.perimeter = perimeter(g);
  r.defect = defect_measure(triangulate(g));
  r.inner_perimeter = perimeter(gi);
  r.inner_defect = defect_measure(triangulate(gi));
  r.removed = static_cast<int>(config.size() - inner.size());
  r.slack = (r.perimeter + r.defect) - (r.inner_perimeter + r.inner_defect) - 6;
  r.holds = r.slack >= 0;
  r.defects_equal = r.defect == r.inner_defect;
  if (r.slack == 0 && !r.defects_equal) {
    throw IdentityViolation("removal-equality", r.defect, r.inner_defect,
                            "equality in the removal inequality with mu(X) != mu(X')");
  }
  return r;
}

}  // namespace latticecurv
