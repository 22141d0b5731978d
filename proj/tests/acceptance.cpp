// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "latticecurv/bond_graph.hpp"
#include "latticecurv/corpus.hpp"
#include "latticecurv/curvature.hpp"
#include "latticecurv/energy.hpp"
#include "latticecurv/error.hpp"
#include "latticecurv/ground_state.hpp"
#include "latticecurv/lattice.hpp"
#include "latticecurv/triangulation.hpp"

using namespace latticecurv;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void fail(const std::string& what) {
    if (ok) note << "first failure: " << what << "; ";
    ok = false;
  }
};

long long unit_pairs(const Configuration& x) {
  long long n = 0;
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = a + 1; b < x.size(); ++b) {
      if (std::abs(distance(x[a], x[b]) - 1.0) <= x.tol()) ++n;
    }
  }
  return n;
}

double lj_direct(const Configuration& x, double p) {
  double e = 0.0;
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = a + 1; b < x.size(); ++b) {
      const double r = distance(x[a], x[b]);
      e += std::pow(r, -2 * p) - 2 * std::pow(r, -p);
    }
  }
  return e;
}

// d_min > 1/sqrt(2) with finite Heitmann-Radin energy.
std::vector<NamedConfig> hr_corpus() {
  auto out = lattice_corpus(250, 1001);
  for (auto& c : sparse_corpus(250, 1002)) out.push_back(std::move(c));
  return out;
}

std::vector<NamedConfig> hand_examples() {
  auto out = hand_built_examples();
  out.push_back({"pentagon-with-inner-wire", pentagon_with_inner_wire()});
  out.push_back({"removal-counterexample", removal_counterexample()});
  return out;
}

std::vector<NamedConfig> wire_corpus() {
  // sparse subsets of small balls: many components, outer and inner wires
  std::vector<NamedConfig> out;
  for (int k = 0; k < 200; ++k) {
    const auto pts = random_lattice_subset(2 + k % 4, 0.3 + 0.002 * k, 5000 + static_cast<std::uint64_t>(k));
    if (!pts.empty()) out.push_back({"wires-" + std::to_string(k), to_configuration(pts)});
  }
  return out;
}

constexpr double kLjExponents[] = {2.0, 6.0, 20.0};

bool residual_ok(double residual, double total) { return std::abs(residual) <= 1e-9 * (1.0 + std::abs(total)); }

Outcome criterion1() {
  Outcome o;
  const auto hr = Potential::heitmann_radin();
  int random = 0;
  for (const auto& [name, x] : hr_corpus()) {
    if (x.size() > 1 && !(min_pairwise_distance(x) > 1.0 / std::sqrt(2.0))) o.fail(name + " spacing");
    const auto e = energy_decomposition(x, hr, BondRange::unit());
    const long long lhs = static_cast<long long>(e.total);
    const long long rhs = -3LL * static_cast<long long>(x.size()) + e.perimeter + e.defect + e.euler_term;
    if (e.infinite || lhs != rhs || lhs != -unit_pairs(x)) o.fail(name);
    ++random;
  }
  int hand = 0;
  for (const auto& [name, x] : hand_examples()) {
    const auto e = energy_decomposition(x, hr, BondRange::unit());
    const long long rhs = -3LL * static_cast<long long>(x.size()) + e.perimeter + e.defect + e.euler_term;
    if (e.infinite) {
      // overlapping particles: the identity concerns the geometric terms only
      const auto g = build_bond_graph(x, BondRange::unit());
      const long long geo = -3LL * static_cast<long long>(x.size()) + perimeter(g) + defect_measure_direct(g) +
                            3LL * euler_characteristic(g);
      if (geo != -unit_pairs(x)) o.fail(name);
    } else if (static_cast<long long>(e.total) != rhs || e.total != -static_cast<double>(unit_pairs(x))) {
      o.fail(name);
    }
    ++hand;
  }
  o.note << random << " seeded configs, " << hand << " hand-built examples";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto corpus = soft_corpus(200, 2002);
  double worst = 0.0;
  for (double p : kLjExponents) {
    const auto v = Potential::lennard_jones(p);
    for (const auto& [name, x] : corpus) {
      const auto e = energy_decomposition(x, v);
      const double direct = lj_direct(x, p);
      worst = std::max(worst, std::abs(e.residual) / (1.0 + std::abs(e.total)));
      if (!residual_ok(e.residual, e.total) || !residual_ok(e.reconstructed() - direct, direct)) {
        o.fail(name + " p=" + std::to_string(p));
      }
      if (e.range.beta > 1.2 || e.range.alpha != 0.8 || !(e.range.beta < std::sqrt(2.0) * min_pairwise_distance(x))) {
        o.fail(name + " range");
      }
    }
  }
  o.note << 3 * corpus.size() << " cases, max relative residual " << worst;
  return o;
}

void check_gauss_bonnet(const BondGraph& g, const std::string& name, Outcome& o, long long& count) {
  for (auto s : {TriangulationStrategy::EarClip, TriangulationStrategy::Fan}) {
    const auto t = triangulate(g, s);
    CurvatureProfile p;
    try {
      p = gauss_bonnet_report(t);
    } catch (const IdentityViolation& e) {
      o.fail(name + " " + e.what());
      continue;
    }
    long long sum = 0;
    for (int k : p.puiseux) sum += k;
    if (sum != 6LL * euler_characteristic(g) + 3LL * (perimeter(g) - static_cast<long long>(g.boundary_vertices().size()))) {
      o.fail(name + " sum K");
    }
    if (p.sum_v0 != g.vertex_count()) o.fail(name + " V0 handshake");
    if (p.sum_v1 != 3LL * static_cast<long long>(t.tri_faces().size())) o.fail(name + " V1 handshake");
    if (p.sum_v2 != 3LL * static_cast<long long>(t.tri_faces().size())) o.fail(name + " V2 handshake");
    ++count;
  }
}

Outcome criterion3() {
  Outcome o;
  long long count = 0;
  for (const auto& [name, x] : hr_corpus()) check_gauss_bonnet(build_bond_graph(x, BondRange::unit()), name, o, count);
  for (const auto& [name, x] : hand_examples()) check_gauss_bonnet(build_bond_graph(x, BondRange::unit()), name, o, count);
  for (const auto& [name, x] : soft_corpus(200, 2002)) check_gauss_bonnet(build_bond_graph(x, default_soft_range(x)), name, o, count);
  int multi = 0;
  for (const auto& [name, x] : wire_corpus()) {
    const auto g = build_bond_graph(x, BondRange::unit());
    if (g.component_count() > 1) ++multi;
    check_gauss_bonnet(g, name, o, count);
  }
  o.note << count << " triangulations, " << multi << " multi-component wire configs";
  return o;
}

Outcome criterion4() {
  Outcome o;
  long long count = 0;
  auto check = [&](const BondGraph& g, const std::string& name) {
    const int direct = defect_measure_direct(g);
    const int ear = defect_measure(triangulate(g, TriangulationStrategy::EarClip));
    const int fan = defect_measure(triangulate(g, TriangulationStrategy::Fan));
    if (ear != direct || fan != direct) o.fail(name);
    ++count;
  };
  for (const auto& [name, x] : hr_corpus()) check(build_bond_graph(x, BondRange::unit()), name);
  for (const auto& [name, x] : hand_examples()) check(build_bond_graph(x, BondRange::unit()), name);
  for (const auto& [name, x] : soft_corpus(200, 2002)) check(build_bond_graph(x, default_soft_range(x)), name);
  for (const auto& [name, x] : wire_corpus()) check(build_bond_graph(x, BondRange::unit()), name);
  o.note << count << " configs";
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (int m = 0; m <= 4; ++m) {
    const auto h = generate_lattice_patch(m);
    const int p = perimeter(build_bond_graph(h, BondRange::unit()));
    const auto next = add_closed_shell(h);
    const int q = perimeter(build_bond_graph(next, BondRange::unit()));
    if (q != p + 6) o.fail("H_" + std::to_string(m) + " perimeter");
    if (static_cast<long long>(next.size() - h.size()) != shell_count(p, 1)) o.fail("H_" + std::to_string(m) + " count");
    // lattice enumeration: the grown set is exactly the next hexagon
    if (next.size() != hexagon(m + 1).size()) o.fail("H_" + std::to_string(m) + " shape");
  }
  o.note << "H_0..H_4";
  return o;
}

Outcome criterion6() {
  Outcome o;
  int checked = 0;
  int equality = 0;
  int skipped = 0;
  auto run = [&](const Configuration& x, const std::string& name) {
    const auto r = removal_inequality_check(x);
    if (!r.holds) o.fail(name);
    if (r.slack == 0) {
      ++equality;
      if (!r.defects_equal) o.fail(name + " equality with different mu");
    }
    ++checked;
  };
  for (const auto& [name, x] : lattice_corpus(500, 6006)) {
    const auto g = build_bond_graph(x, BondRange::unit());
    if (!has_simple_closed_boundary(g) || remove_boundary(g).empty()) {
      ++skipped;
      continue;
    }
    try {
      run(x, name);
    } catch (const IdentityViolation& e) {
      o.fail(name + " " + e.what());
    }
  }
  for (int m = 2; m <= 4; ++m) run(generate_lattice_patch(m), "H_" + std::to_string(m));
  const auto cx = removal_counterexample();
  const auto r = removal_inequality_check(cx);
  if (!r.holds || r.perimeter != 16 || r.inner_perimeter != 12) o.fail("counterexample");
  ++checked;
  o.note << checked << " configs (" << equality << " with equality), " << skipped
         << " lattice subsets without simply closed boundary or interior; counterexample P 16 -> 12, mu "
         << r.defect << " -> " << r.inner_defect << ", slack " << r.slack;
  return o;
}

Outcome criterion7() {
  Outcome o;
  int configs = 0;
  long long vertices = 0;
  double worst_sum = 0.0;
  auto run = [&](const Configuration& x, const std::string& name) {
    const auto g = build_bond_graph(x, BondRange::unit());
    if (!has_simple_closed_boundary(g)) return;
    const auto r = curvature_bound_check(g);
    for (const auto& e : r.entries) {
      // independent evaluation of both sides
      const double lhs = (2 - interior_degree(g, e.vertex)) / 6.0;
      const double rhs = (std::numbers::pi - inner_angle(g, e.vertex)) / (2 * std::numbers::pi);
      if (!(lhs >= rhs - 1e-9) || !e.holds) o.fail(name + " vertex " + std::to_string(e.vertex));
      ++vertices;
    }
    worst_sum = std::max(worst_sum, std::abs(r.euclidean_sum - 2 * std::numbers::pi));
    if (std::abs(r.euclidean_sum - 2 * std::numbers::pi) > 1e-9) o.fail(name + " angle sum");
    ++configs;
  };
  for (const auto& [name, x] : lattice_corpus(500, 7007)) run(x, name);
  for (int m = 1; m <= 4; ++m) run(generate_lattice_patch(m), "H_" + std::to_string(m));
  run(removal_counterexample(), "counterexample");
  run(square_lattice_patch(4), "square-patch");
  run(honeycomb_patch(1), "honeycomb");
  o.note << configs << " configs, " << vertices << " boundary vertices, max |sum K_eu - 2pi| " << worst_sum;
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto hr = Potential::heitmann_radin();
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= 12; ++n) {
    const auto x = build_minimizer(n);
    const auto oracle = brute_force_min_lattice(n, n - 1);
    if (static_cast<int>(total_energy(x, hr)) != oracle.energy) o.fail("N=" + std::to_string(n) + " energy");
    if (n >= 3 && !is_topologically_crystallized(x)) o.fail("N=" + std::to_string(n) + " crystallized");
    if (negative_curvature_count(x) > 1) o.fail("N=" + std::to_string(n) + " negative curvature");
  }
  const double oracle_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::vector<int> spot;
  for (int n = 13; n <= 300; ++n) spot.push_back(n);
  for (int n : {397, 500, 919, 1000, 1500, 2023, 2500, 3001, 4096, 5000, 6250, 7777, 8191, 9000, 9999, 10000}) spot.push_back(n);
  for (int n : spot) {
    const auto x = build_minimizer(n);
    const auto e = energy_decomposition(x, hr, BondRange::unit());
    if (e.defect != 0 || e.euler_term != 3 || e.total != -3.0 * n + e.perimeter + 3) o.fail("N=" + std::to_string(n));
    if (e.total != -std::floor(3.0 * n - std::sqrt(12.0 * n - 3.0))) o.fail("N=" + std::to_string(n) + " minimum");
  }
  o.note << "oracle N=1..12 in " << oracle_s << " s, " << spot.size() << " spot checks up to N=10000";
  return o;
}

Outcome criterion9() {
  Outcome o;
  auto interior = [](const BondGraph& g, const std::function<void(const GromovEuler&)>& f) {
    int n = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.is_boundary(v)) continue;
      f(gromov_euler_curvatures(g, v));
      ++n;
    }
    return n;
  };
  const auto tri = build_bond_graph(generate_lattice_patch(4), BondRange::unit());
  const int nt = interior(tri, [&](const GromovEuler& k) {
    if (k.gromov != Rational(0) || k.euler != Rational(0)) o.fail("triangular");
  });
  const auto sq = build_bond_graph(square_lattice_patch(6), BondRange::unit());
  const int ns = interior(sq, [&](const GromovEuler& k) {
    if (k.gromov != Rational(0)) o.fail("square gromov");
    if (k.euler == Rational(0)) o.fail("square euler");
  });
  const auto hc = build_bond_graph(honeycomb_patch(2), BondRange::unit());
  const int nh = interior(hc, [&](const GromovEuler& k) {
    if (k.gromov != Rational(0)) o.fail("honeycomb");
  });
  if (nt == 0 || ns == 0 || nh == 0) o.fail("no interior vertices");
  o.note << nt << " triangular, " << ns << " square, " << nh << " honeycomb interior vertices";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if ((id == 1 || id == 2) && s >= 10.0) o.fail("runtime over 10 s");
    if (id == 8 && s >= 300.0) o.fail("runtime over 5 min");
    std::printf("%s criterion %d (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", id, s, o.note.str().c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
