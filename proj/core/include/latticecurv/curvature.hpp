#pragma once

#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "latticecurv/bond_graph.hpp"
#include "latticecurv/triangulation.hpp"

namespace latticecurv {

using Rational = boost::rational<long long>;

/// Local counts around a vertex of a triangulated bond graph: V0 = 1,
/// V1 = edges of the unit sphere, V2 = triangles containing the vertex.
struct SphereCounts {
  int v0 = 1;
  int v1 = 0;
  int v2 = 0;
};

/// The unit sphere of x is its link: an edge yz belongs to it when xyz is a
/// triangle of the chorded graph.
std::vector<SphereCounts> sphere_counts(const TriGraph& tri);

/// Edges of the chorded graph between neighbours of x, whether or not they
/// close a triangle with x. Equals the link count unless x lies on a
/// separating triangle.
int induced_sphere_edges(const TriGraph& tri, int x);

/// Combinatorial Puiseux curvature: 6 - |S1(x)| in the interior,
/// 3 - |S1(x)| on the boundary.
std::vector<int> puiseux_curvature(const TriGraph& tri);

/// 6 (V0 - V1/2 + V2/3).
std::vector<int> euler_like_curvature(const TriGraph& tri);

struct GromovEuler {
  Rational gromov;
  Rational euler;
};

/// Exact Gromov and Euler curvature on the untriangulated bond graph.
/// Gromov: 1 - deg/2 + sum over face corners at x of 1/|f|.
/// Euler: 1 - deg/2 + (face corners at x)/3.
GromovEuler gromov_euler_curvatures(const BondGraph& graph, int x);
std::vector<GromovEuler> gromov_euler_curvatures(const BondGraph& graph);

/// 2 - i(x). Throws BoundaryNotSimpleError or PreconditionError when x is not
/// on a simply closed boundary.
int max_puiseux_curvature(const BondGraph& graph, int x);

/// Inner angle between the incoming and outgoing boundary edge at x.
double inner_angle(const BondGraph& graph, int x);

/// pi minus the inner angle.
double euclidean_puiseux(const BondGraph& graph, int x);

struct CurvatureProfile {
  std::vector<int> puiseux;
  std::vector<int> euler_like;
  std::vector<SphereCounts> spheres;
  /// Set for boundary particles when the boundary is simply closed.
  std::vector<std::optional<int>> max_puiseux;
  std::vector<std::optional<double>> euclidean_puiseux;
  std::vector<Rational> gromov;
  std::vector<Rational> euler;

  long long sum_puiseux = 0;
  int chi = 0;
  int perimeter = 0;
  int boundary_count = 0;
  bool simple_boundary = false;

  long long sum_v0 = 0;
  long long sum_v1 = 0;
  long long sum_v2 = 0;
  int v0 = 0;
  int v1 = 0;
  int v2 = 0;

  long long six_chi() const { return 6LL * chi; }
  long long boundary_term() const { return 3LL * (perimeter - boundary_count); }
  bool gauss_bonnet_holds() const { return sum_puiseux == six_chi() + boundary_term(); }
};

/// Fills every curvature and checks sum K = 6 chi + 3 (P - #boundary) and the
/// three handshake identities. Throws IdentityViolation if any fails.
CurvatureProfile gauss_bonnet_report(const TriGraph& tri);

struct CurvatureBoundEntry {
  int vertex = 0;
  int interior_edges = 0;
  int max_puiseux = 0;
  double inner_angle = 0.0;
  double euclidean_puiseux = 0.0;
  /// K_max / 6 - K_eu / (2 pi).
  double slack = 0.0;
  /// inner angle - (i + 1) pi / 3.
  double angle_slack = 0.0;
  bool holds = false;
};

struct CurvatureBoundReport {
  std::vector<CurvatureBoundEntry> entries;
  double euclidean_sum = 0.0;
  bool all_hold = false;
};

/// Pointwise K_max / 6 >= K_eu / (2 pi) on a hard-sphere configuration with
/// simply closed boundary. `tolerance` absorbs rounding in the angles.
CurvatureBoundReport curvature_bound_check(const BondGraph& graph, double tolerance = 1e-9);

/// Throws PreconditionError naming each violated clause: range [1, 1], all
/// distances >= 1 - tol, simply closed boundary.
void require_hard_sphere_simple(const BondGraph& graph);

}  // namespace latticecurv
