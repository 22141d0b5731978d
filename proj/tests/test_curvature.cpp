#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "latticecurv/bond_graph.hpp"
#include "latticecurv/corpus.hpp"
#include "latticecurv/curvature.hpp"
#include "latticecurv/energy.hpp"
#include "latticecurv/error.hpp"
#include "latticecurv/lattice.hpp"
#include "latticecurv/triangulation.hpp"
#include "support.hpp"

using namespace latticecurv;

namespace {

constexpr double kPi = std::numbers::pi;

BondGraph unit_graph(const Configuration& x) { return build_bond_graph(x, BondRange::unit()); }

CurvatureProfile profile(const Configuration& x, TriangulationStrategy s = TriangulationStrategy::EarClip) {
  return gauss_bonnet_report(triangulate(unit_graph(x), s));
}

}  // namespace

TEST(Curvature, HexagonH1) {
  const auto p = profile(fixtures::centred_h1());
  EXPECT_EQ(p.puiseux[0], 0);
  for (int v = 1; v < 7; ++v) {
    EXPECT_EQ(p.puiseux[static_cast<std::size_t>(v)], 1);
    EXPECT_EQ(p.spheres[static_cast<std::size_t>(v)].v1, 2);
  }
  EXPECT_EQ(p.sum_puiseux, 6);
  EXPECT_EQ(p.chi, 1);
  EXPECT_EQ(p.perimeter, p.boundary_count);
  EXPECT_TRUE(p.gauss_bonnet_holds());
}

TEST(Curvature, SquareChordEndpoints) {
  const auto t = triangulate(unit_graph(fixtures::unit_square()));
  const auto p = gauss_bonnet_report(t);
  const Edge c = t.chords()[0];
  for (int v = 0; v < 4; ++v) {
    const bool on_chord = v == c.u || v == c.v;
    EXPECT_EQ(p.puiseux[static_cast<std::size_t>(v)], on_chord ? 1 : 2) << v;
  }
  EXPECT_EQ(p.sum_puiseux, 6);
}

TEST(Curvature, EulerLikeOffsets) {
  const auto p = profile(generate_lattice_patch(2));
  const auto g = unit_graph(generate_lattice_patch(2));
  for (std::size_t v = 0; v < p.puiseux.size(); ++v) {
    EXPECT_EQ(p.euler_like[v], p.puiseux[v] + (g.is_boundary(static_cast<int>(v)) ? 3 : 0));
  }
  const auto iso = profile(Configuration({{0, 0}}));
  EXPECT_EQ(iso.euler_like[0], 6);
  EXPECT_EQ(iso.puiseux[0], 3);
}

TEST(Curvature, WireEdgeBookkeeping) {
  const auto p = profile(Configuration({{0, 0}, {1, 0}}));
  EXPECT_EQ(p.sum_puiseux, 6);
  EXPECT_EQ(p.six_chi() + p.boundary_term(), 6);

  const auto q = profile(to_configuration(std::vector<LatticeCoord>{{0, 0}, {1, 0}, {0, 1}, {-1, 0}}));
  EXPECT_EQ(q.sum_puiseux - q.six_chi(), q.boundary_term());
  EXPECT_EQ(q.boundary_term(), 3);
}

TEST(Curvature, GromovAndEulerOnTriangularPatch) {
  const auto x = generate_lattice_patch(3);
  const auto g = unit_graph(x);
  const auto ge = gromov_euler_curvatures(g);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.is_boundary(v)) continue;
    EXPECT_EQ(ge[static_cast<std::size_t>(v)].gromov, Rational(0));
    EXPECT_EQ(ge[static_cast<std::size_t>(v)].euler, Rational(0));
  }
}

TEST(Curvature, GromovAndEulerOnSquarePatch) {
  const auto g = unit_graph(square_lattice_patch(5));
  int interior = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.is_boundary(v)) continue;
    ++interior;
    const auto ge = gromov_euler_curvatures(g, v);
    EXPECT_EQ(ge.gromov, Rational(0));
    EXPECT_EQ(ge.euler, Rational(1, 3));
  }
  EXPECT_EQ(interior, 9);
}

TEST(Curvature, GromovOnHoneycomb) {
  const auto g = unit_graph(honeycomb_patch(2));
  int interior = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.is_boundary(v)) continue;
    ++interior;
    EXPECT_EQ(gromov_euler_curvatures(g, v).gromov, Rational(0));
  }
  EXPECT_GT(interior, 0);
}

TEST(Curvature, MaxPuiseux) {
  const auto sq = unit_graph(fixtures::unit_square());
  for (int v = 0; v < 4; ++v) EXPECT_EQ(max_puiseux_curvature(sq, v), 2);
  const auto h1 = unit_graph(fixtures::centred_h1());
  for (int v = 1; v < 7; ++v) EXPECT_EQ(max_puiseux_curvature(h1, v), 1);
  // H_2 rim: corners have one interior edge, side midpoints two
  const auto h2 = unit_graph(generate_lattice_patch(2));
  int corners = 0;
  int sides = 0;
  for (int v : h2.boundary_vertices()) {
    if (h2.degree(v) == 3) {
      ++corners;
      EXPECT_EQ(max_puiseux_curvature(h2, v), 1);
    } else {
      ++sides;
      EXPECT_EQ(h2.degree(v), 4);
      EXPECT_EQ(max_puiseux_curvature(h2, v), 0);
    }
  }
  EXPECT_EQ(corners, 6);
  EXPECT_EQ(sides, 6);
  EXPECT_THROW(max_puiseux_curvature(unit_graph(Configuration({{0, 0}, {1, 0}})), 0), PreconditionError);
}

TEST(Curvature, EuclideanPuiseux) {
  const auto sq = unit_graph(fixtures::unit_square());
  for (int v = 0; v < 4; ++v) EXPECT_NEAR(euclidean_puiseux(sq, v), kPi / 2, 1e-12);
  const auto h1 = unit_graph(fixtures::centred_h1());
  for (int v = 1; v < 7; ++v) EXPECT_NEAR(euclidean_puiseux(h1, v), kPi / 3, 1e-12);
  const auto h2 = unit_graph(generate_lattice_patch(2));
  for (int v : h2.boundary_vertices()) {
    if (h2.degree(v) == 4) {
      EXPECT_NEAR(euclidean_puiseux(h2, v), 0.0, 1e-12);
    }
  }
}

TEST(Curvature, BoundOnHexagonsAndSquare) {
  const auto h1 = curvature_bound_check(unit_graph(generate_lattice_patch(1)));
  EXPECT_TRUE(h1.all_hold);
  for (const auto& e : h1.entries) {
    EXPECT_NEAR(e.max_puiseux / 6.0, 1.0 / 6.0, 1e-15);
    EXPECT_NEAR(e.euclidean_puiseux / (2 * kPi), 1.0 / 6.0, 1e-12);
    EXPECT_NEAR(e.slack, 0.0, 1e-12);
  }
  const auto h2 = curvature_bound_check(unit_graph(generate_lattice_patch(2)));
  EXPECT_TRUE(h2.all_hold);
  EXPECT_EQ(h2.entries.size(), 12u);
  const auto sq = curvature_bound_check(unit_graph(fixtures::unit_square()));
  EXPECT_TRUE(sq.all_hold);
  for (const auto& e : sq.entries) {
    EXPECT_NEAR(e.max_puiseux / 6.0, 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(e.euclidean_puiseux / (2 * kPi), 0.25, 1e-12);
  }
  EXPECT_NEAR(sq.euclidean_sum, 2 * kPi, 1e-12);
}

TEST(Curvature, BoundRequiresHardSpheres) {
  EXPECT_THROW(curvature_bound_check(unit_graph(pentagon_with_inner_wire())), PreconditionError);
  EXPECT_THROW(curvature_bound_check(build_bond_graph(generate_lattice_patch(1), {0.9, 1.1})), PreconditionError);
}

TEST(Curvature, MaxPuiseuxBoundsEveryTriangulation) {
  for (const auto& [name, x] : lattice_corpus(80, 21)) {
    const auto g = unit_graph(x);
    if (!has_simple_closed_boundary(g)) continue;
    for (auto s : {TriangulationStrategy::EarClip, TriangulationStrategy::Fan}) {
      const auto p = gauss_bonnet_report(triangulate(g, s));
      for (int v : g.boundary_vertices()) {
        EXPECT_LE(p.puiseux[static_cast<std::size_t>(v)], max_puiseux_curvature(g, v)) << name << " " << v;
      }
    }
  }
}

TEST(Curvature, GaussBonnetAndHandshakes) {
  auto check = [](const TriGraph& t, const std::string& name) {
    const auto p = gauss_bonnet_report(t);
    EXPECT_TRUE(p.gauss_bonnet_holds()) << name;
    EXPECT_EQ(p.sum_v0, p.v0) << name;
    EXPECT_EQ(p.sum_v1, 3LL * p.v2) << name;
    EXPECT_EQ(p.sum_v2, 3LL * p.v2) << name;
    long long sum = 0;
    for (int k : p.puiseux) sum += k;
    EXPECT_EQ(sum, 6LL * p.chi + 3LL * (p.perimeter - p.boundary_count)) << name;
  };
  for (const auto& [name, x] : hand_built_examples()) check(triangulate(unit_graph(x)), name);
  for (const auto& [name, x] : lattice_corpus(60, 2)) {
    for (auto s : {TriangulationStrategy::EarClip, TriangulationStrategy::Fan}) check(triangulate(unit_graph(x), s), name);
  }
  for (const auto& [name, x] : soft_corpus(30, 2)) check(triangulate(build_bond_graph(x, default_soft_range(x))), name);
}

TEST(Curvature, InvariantUnderRigidMotion) {
  for (const auto& [name, x] : lattice_corpus(20, 8)) {
    const auto y = fixtures::rigid_motion(x, 0.7, {3.25, -11.5});
    const auto g = unit_graph(x);
    const auto h = unit_graph(y);
    const auto p = gauss_bonnet_report(triangulate(g));
    const auto q = gauss_bonnet_report(triangulate(h));
    EXPECT_EQ(p.puiseux, q.puiseux) << name;
    EXPECT_EQ(p.perimeter, q.perimeter);
    EXPECT_EQ(p.chi, q.chi);
    EXPECT_EQ(defect_measure_direct(g), defect_measure_direct(h));
    EXPECT_EQ(p.gromov, q.gromov);
  }
}

TEST(Curvature, LinkEqualsInducedEdgesWithoutSeparatingTriangles) {
  const auto t = triangulate(unit_graph(generate_lattice_patch(1)));
  for (int v = 0; v < 7; ++v) EXPECT_EQ(induced_sphere_edges(t, v), sphere_counts(t)[static_cast<std::size_t>(v)].v1);
}
