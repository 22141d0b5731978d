#include <gtest/gtest.h>

#include "latticecurv/bond_graph.hpp"
#include "latticecurv/corpus.hpp"
#include "latticecurv/energy.hpp"
#include "latticecurv/geometry.hpp"
#include "latticecurv/lattice.hpp"
#include "latticecurv/triangulation.hpp"
#include "support.hpp"

using namespace latticecurv;

namespace {

constexpr TriangulationStrategy kBoth[] = {TriangulationStrategy::EarClip, TriangulationStrategy::Fan};

TriGraph tri(const Configuration& x, TriangulationStrategy s = TriangulationStrategy::EarClip,
             BondRange range = BondRange::unit()) {
  return triangulate(build_bond_graph(x, range), s);
}

// Chords must not cross each other or any bond, except at shared endpoints.
void expect_planar(const TriGraph& t, const std::string& label) {
  const auto& x = t.base().config();
  std::vector<Edge> all(t.base().edges().begin(), t.base().edges().end());
  all.insert(all.end(), t.chords().begin(), t.chords().end());
  const std::size_t first_chord = t.base().edges().size();
  for (std::size_t a = first_chord; a < all.size(); ++a) {
    for (std::size_t b = 0; b < all.size(); ++b) {
      if (a == b) continue;
      const Edge& e = all[a];
      const Edge& f = all[b];
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
      EXPECT_FALSE(geom::segments_intersect(x[static_cast<std::size_t>(e.u)], x[static_cast<std::size_t>(e.v)],
                                            x[static_cast<std::size_t>(f.u)], x[static_cast<std::size_t>(f.v)], 1e-12))
          << label << " chord " << e.u << "-" << e.v << " crosses " << f.u << "-" << f.v;
    }
  }
}

}  // namespace

TEST(Triangulation, TriangleNeedsNoChords) {
  for (auto s : kBoth) {
    const auto t = tri(fixtures::unit_triangle(), s);
    EXPECT_TRUE(t.chords().empty());
    EXPECT_EQ(defect_measure(t), 0);
    EXPECT_EQ(t.tri_faces().size(), 1u);
  }
}

TEST(Triangulation, SquareNeedsOneChord) {
  for (auto s : kBoth) {
    const auto t = tri(fixtures::unit_square(), s);
    ASSERT_EQ(t.chords().size(), 1u);
    const Edge c = t.chords()[0];
    EXPECT_TRUE((c == Edge{0, 2}) || (c == Edge{1, 3}));
    EXPECT_EQ(t.tri_faces().size(), 2u);
    EXPECT_TRUE(t.adjacent(c.u, c.v));
  }
  EXPECT_EQ(tri(fixtures::unit_square()).chords()[0], tri(fixtures::unit_square()).chords()[0]);
  EXPECT_EQ(defect_measure_direct(build_bond_graph(fixtures::unit_square(), BondRange::unit())), 1);
}

TEST(Triangulation, HexagonalHoleNeedsThreeChords) {
  auto ring = hexagon(1);
  std::erase(ring, LatticeCoord{0, 0});
  for (auto s : kBoth) {
    const auto t = tri(to_configuration(ring), s);
    EXPECT_EQ(t.chords().size(), 3u);
    expect_planar(t, "ring");
  }
}

TEST(Triangulation, FullyTriangularPatchIsUnchanged) {
  for (int m = 1; m <= 3; ++m) EXPECT_EQ(defect_measure(tri(generate_lattice_patch(m))), 0);
}

TEST(Triangulation, PentagonAndSquare) {
  const auto x = fixtures::pentagon_and_square();
  EXPECT_GE(fixtures::brute_min_distance(x), 1.0 - 1e-12);
  const auto g = build_bond_graph(x, BondRange::unit());
  EXPECT_EQ(g.faces().size(), 2u);
  EXPECT_EQ(defect_measure_direct(g), 3);
  for (auto s : kBoth) EXPECT_EQ(defect_measure(triangulate(g, s)), 3);
}

TEST(Triangulation, InnerWireFace) {
  const auto g = build_bond_graph(pentagon_with_inner_wire(), BondRange::unit());
  EXPECT_EQ(defect_measure_direct(g), 4);
  for (auto s : kBoth) {
    const auto t = triangulate(g, s);
    EXPECT_EQ(defect_measure(t), 4);
    EXPECT_EQ(t.tri_faces().size(), 5u);
    expect_planar(t, "pentagon");
  }
}

TEST(Triangulation, HoleWithSpur) {
  const auto g = build_bond_graph(hole_with_spur(), BondRange::unit());
  int wire_faces = 0;
  for (const auto& f : g.faces()) {
    if (inner_perimeter(f) > 3) {
      ++wire_faces;
      EXPECT_EQ(inner_perimeter(f), 14);
    }
  }
  EXPECT_EQ(wire_faces, 1);
  EXPECT_EQ(defect_measure_direct(g), 11);
  for (auto s : kBoth) EXPECT_EQ(defect_measure(triangulate(g, s)), 11);
}

TEST(Triangulation, EveryTriFaceIsATriangle) {
  for (const auto& [name, x] : lattice_corpus(40, 3)) {
    for (auto s : kBoth) {
      const auto t = tri(x, s);
      for (const auto& f : t.tri_faces()) {
        ASSERT_EQ(f.length(), 3u) << name;
        EXPECT_TRUE(t.adjacent(f.vertices[0], f.vertices[1]));
        EXPECT_TRUE(t.adjacent(f.vertices[1], f.vertices[2]));
        EXPECT_TRUE(t.adjacent(f.vertices[2], f.vertices[0]));
        EXPECT_GT(f.signed_area, 0.0) << name;
      }
      expect_planar(t, name);
      EXPECT_EQ(euler_characteristic(t), euler_characteristic(t.base())) << name;
    }
  }
}

TEST(Triangulation, StrategiesAgreeOnDefect) {
  for (const auto& [name, x] : soft_corpus(40, 17)) {
    const auto g = build_bond_graph(x, default_soft_range(x));
    const int direct = defect_measure_direct(g);
    for (auto s : kBoth) {
      const auto t = triangulate(g, s);
      EXPECT_EQ(defect_measure(t), direct) << name;
      expect_planar(t, name);
    }
  }
}

TEST(Triangulation, ChordsCanBeLongerThanBonds) {
  const auto t = tri(fixtures::unit_square());
  const Edge c = t.chords()[0];
  EXPECT_NEAR(distance(t.base().config()[static_cast<std::size_t>(c.u)], t.base().config()[static_cast<std::size_t>(c.v)]),
              std::sqrt(2.0), 1e-12);
}
