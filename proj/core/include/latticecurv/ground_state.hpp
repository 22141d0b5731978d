#pragma once

#include <cstdint>
#include <vector>

#include "latticecurv/bond_graph.hpp"
#include "latticecurv/config.hpp"
#include "latticecurv/lattice.hpp"

namespace latticecurv {

/// d = d_m + delta with d_m <= d < d_{m+1}, where d_m = m (P' + 3 (m + 1)) is
/// the number of particles in m closed shells around a core of perimeter P'.
struct ShellDecomposition {
  int m = 0;
  int delta = 0;
  long long d_m = 0;
};

/// m (P' + 3 (m + 1)).
long long shell_count(int core_perimeter, int m);

/// Perimeter after m closed shells: P' + 6m.
inline int shell_perimeter(int core_perimeter, int m) { return core_perimeter + 6 * m; }

ShellDecomposition decompose_shells(long long d, int core_perimeter);

/// Adds every lattice point at distance 1 from the input. The input must be a
/// lattice subset with simply closed boundary; a single point and the empty
/// set are accepted as special cases (giving H_1 and the 6-particle
/// triangle). Throws IdentityViolation if P grows by more than 6, or by less
/// than 6 when the input has at most two negative-curvature points and they
/// are not bonded to each other. Two bonded ones may bound a notch one site
/// wide; filling it gives P + 5.
Configuration add_closed_shell(const Configuration& core);
LatticeSet add_closed_shell(const LatticeSet& core);

/// Interior particles of the unit-range bond graph, input order preserved.
Configuration remove_boundary(const Configuration& config);
Configuration remove_boundary(const BondGraph& graph);

/// Lattice points of the next closed shell ordered counterclockwise along
/// the boundary of `core`, starting where the partial-shell rule starts:
/// next to a negative-curvature point if there is one, otherwise at the
/// joint neighbour of the first two particles of the longest straight side.
std::vector<LatticeCoord> ordered_next_shell(const LatticeSet& core);

/// Heitmann-Radin ground state with N particles: the largest hexagon H_k
/// with 3k^2 + 3k + 1 <= N plus N - |H_k| particles placed contiguously
/// along the next shell.
Configuration build_minimizer(int n);
std::vector<LatticeCoord> build_minimizer_lattice(int n);

/// Number of particles with negative Puiseux curvature.
int negative_curvature_count(const Configuration& config);

/// mu = 0 with simply closed boundary, at unit bond range.
bool is_topologically_crystallized(const Configuration& config);

struct OracleResult {
  int energy = 0;
  /// Minimising sets, counted up to translation, rotation and reflection.
  long long classes = 0;
  /// Connected sets visited.
  long long visited = 0;
};

/// Exhaustive Heitmann-Radin minimum over connected N-subsets of the lattice
/// whose points lie within graph distance `radius` of their first point (in
/// (j, i) order). Requires 1 <= N <= 12. Throws BudgetExceededError when more
/// than `budget` sets would be visited.
OracleResult brute_force_min_lattice(int n, int radius, long long budget = 50'000'000);

struct RemovalReport {
  int perimeter = 0;
  int defect = 0;
  int inner_perimeter = 0;
  int inner_defect = 0;
  int removed = 0;
  /// (P + mu)(X) - (P + mu)(X') - 6
  int slack = 0;
  bool holds = false;
  /// Only meaningful when slack == 0.
  bool defects_equal = false;
};

/// Evaluates P(X) + mu(X) >= P(X') + mu(X') + 6 with X' = X minus its
/// boundary. Requires a hard-sphere configuration with simply closed boundary
/// and nonempty interior. Throws IdentityViolation if equality holds but
/// mu(X) != mu(X').
RemovalReport removal_inequality_check(const Configuration& config);

}  // namespace latticecurv
