#include "latticecurv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "latticecurv/bond_graph.hpp"
#include "latticecurv/corpus.hpp"
#include "latticecurv/curvature.hpp"
#include "latticecurv/energy.hpp"
#include "latticecurv/error.hpp"
#include "latticecurv/ground_state.hpp"
#include "latticecurv/lattice.hpp"
#include "latticecurv/triangulation.hpp"

namespace latticecurv {

int SuiteResult::passed() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.passed; }));
}

int SuiteResult::failed() const { return static_cast<int>(cases.size()) - passed(); }

namespace {

/// Runs `body`, turning library errors into a failed case.
void run_case(SuiteResult& suite, std::string label, const std::function<std::string()>& body) {
  CaseResult c;
  c.label = std::move(label);
  try {
    c.detail = body();
    c.passed = true;
  } catch (const Error& e) {
    c.detail = e.kind() + ": " + e.what();
  }
  suite.cases.push_back(std::move(c));
}

std::string gauss_bonnet_case(const Configuration& config, BondRange range) {
  const BondGraph g = build_bond_graph(config, range);
  const TriGraph ear = triangulate(g, TriangulationStrategy::EarClip);
  const TriGraph fan = triangulate(g, TriangulationStrategy::Fan);
  const CurvatureProfile a = gauss_bonnet_report(ear);
  gauss_bonnet_report(fan);
  const int direct = defect_measure_direct(g);
  if (defect_measure(ear) != direct || defect_measure(fan) != direct) {
    throw IdentityViolation("defect-measure", defect_measure(ear), direct,
                            "triangulations disagree on mu: ear-clip " + std::to_string(defect_measure(ear)) +
                                ", fan " + std::to_string(defect_measure(fan)) + ", direct " + std::to_string(direct));
  }
  std::ostringstream s;
  s << "N=" << config.size() << " sumK=" << a.sum_puiseux << " 6chi=" << a.six_chi()
    << " 3(P-#bd)=" << a.boundary_term() << " mu=" << direct;
  return s.str();
}

SuiteResult gauss_bonnet_suite(const VerifyOptions& o) {
  SuiteResult r{"gauss-bonnet", {}, 0.0};
  const int lattice_trials = (o.trials * 2 + 2) / 3;
  const auto lat = lattice_corpus(lattice_trials, o.seed);
  const auto soft = soft_corpus(o.trials - lattice_trials, o.seed);
  int k = 0;
  for (const auto& c : lat) {
    run_case(r, "trial " + std::to_string(k++) + " " + c.name,
             [&] { return gauss_bonnet_case(c.config, BondRange::unit()); });
  }
  for (const auto& c : soft) {
    run_case(r, "trial " + std::to_string(k++) + " " + c.name,
             [&] { return gauss_bonnet_case(c.config, default_soft_range(c.config)); });
  }
  return r;
}

SuiteResult decomposition_suite(const VerifyOptions& o) {
  SuiteResult r{"decomposition", {}, 0.0};
  const bool soft = o.lj_exponent.has_value();
  const Potential v = soft ? Potential::lennard_jones(*o.lj_exponent) : Potential::heitmann_radin();
  const auto corpus = soft ? soft_corpus(o.trials, o.seed) : lattice_corpus(o.trials, o.seed);
  int k = 0;
  for (const auto& c : corpus) {
    run_case(r, "trial " + std::to_string(k++) + " " + c.name, [&] {
      const EnergyBreakdown b = energy_decomposition(c.config, v);
      const double rel = std::abs(b.residual) / (1.0 + std::abs(b.total));
      r.max_relative_residual = std::max(r.max_relative_residual, rel);
      std::ostringstream s;
      s.precision(17);
      s << v.name() << " E=" << b.total << " residual=" << b.residual;
      return s.str();
    });
  }
  return r;
}

SuiteResult shell_suite(const VerifyOptions& o) {
  SuiteResult r{"shell", {}, 0.0};
  for (int m = 0; m <= 4; ++m) {
    run_case(r, "H_" + std::to_string(m), [m] {
      const Configuration core = generate_lattice_patch(m);
      const int before = m == 0 ? 0 : perimeter(build_bond_graph(core, BondRange::unit()));
      const Configuration grown = add_closed_shell(core);
      const int after = perimeter(build_bond_graph(grown, BondRange::unit()));
      const long long gained = static_cast<long long>(grown.size() - core.size());
      if (after != before + 6 || gained != shell_count(before, 1)) {
        throw IdentityViolation("closed-shell", after, before + 6,
                                "P " + std::to_string(before) + " -> " + std::to_string(after) + ", gained " +
                                    std::to_string(gained));
      }
      return "P " + std::to_string(before) + " -> " + std::to_string(after) + ", +" + std::to_string(gained);
    });
  }
  // Crystallized cores from the cluster corpus; add_closed_shell asserts the
  // perimeter bound itself.
  int k = 0;
  for (const auto& c : lattice_corpus(2 * o.trials, o.seed)) {
    if (k >= o.trials) break;
    if (c.config.size() < 3 || !is_topologically_crystallized(c.config)) continue;
    run_case(r, "core " + c.name, [&] {
      const int before = perimeter(build_bond_graph(c.config, BondRange::unit()));
      const Configuration grown = add_closed_shell(c.config);
      const int after = perimeter(build_bond_graph(grown, BondRange::unit()));
      return "P " + std::to_string(before) + " -> " + std::to_string(after) + ", negative curvature " +
             std::to_string(negative_curvature_count(c.config));
    });
    ++k;
  }
  return r;
}

std::string removal_case(const Configuration& config) {
  const RemovalReport rep = removal_inequality_check(config);
  if (!rep.holds) {
    throw IdentityViolation("removal-inequality", rep.perimeter + rep.defect,
                            rep.inner_perimeter + rep.inner_defect + 6, "removal inequality fails");
  }
  return "P+mu " + std::to_string(rep.perimeter + rep.defect) + " -> " +
         std::to_string(rep.inner_perimeter + rep.inner_defect) + ", slack " + std::to_string(rep.slack);
}

bool removal_applicable(const Configuration& config) {
  const BondGraph g = build_bond_graph(config, BondRange::unit());
  if (!has_simple_closed_boundary(g)) return false;
  return static_cast<int>(g.boundary_vertices().size()) < g.vertex_count();
}

SuiteResult removal_suite(const VerifyOptions& o) {
  SuiteResult r{"removal", {}, 0.0};
  for (int m = 1; m <= 4; ++m) {
    run_case(r, "H_" + std::to_string(m), [m] { return removal_case(generate_lattice_patch(m)); });
  }
  run_case(r, "boundary-removal counterexample", [] { return removal_case(removal_counterexample()); });
  int k = 0;
  for (const auto& c : lattice_corpus(4 * o.trials, o.seed)) {
    if (k >= o.trials) break;
    if (!removal_applicable(c.config)) continue;
    run_case(r, c.name, [&] { return removal_case(c.config); });
    ++k;
  }
  return r;
}

SuiteResult minimizer_suite(const VerifyOptions&) {
  SuiteResult r{"minimizers", {}, 0.0};
  for (int n = 1; n <= 12; ++n) {
    run_case(r, "N=" + std::to_string(n), [n] {
      const Configuration x = build_minimizer(n);
      const double built = total_energy(x, Potential::heitmann_radin());
      const OracleResult oracle = brute_force_min_lattice(n, n - 1);
      if (built != static_cast<double>(oracle.energy)) {
        throw IdentityViolation("ground-state", built, oracle.energy, "builder energy differs from the oracle");
      }
      if (n >= 3) {
        if (!is_topologically_crystallized(x)) throw IdentityViolation("crystallized", 0, 1, "builder output has mu > 0 or a non-simple boundary");
        if (negative_curvature_count(x) > 1) {
          throw IdentityViolation("negative-curvature", negative_curvature_count(x), 1,
                                  "more than one point of negative curvature");
        }
      }
      return "E=" + std::to_string(oracle.energy) + " classes=" + std::to_string(oracle.classes) +
             " visited=" + std::to_string(oracle.visited);
    });
  }
  return r;
}

}  // namespace

std::vector<std::string_view> suite_names() { return {"gauss-bonnet", "decomposition", "shell", "removal", "minimizers"}; }

SuiteResult run_suite(std::string_view suite, const VerifyOptions& options) {
  if (options.trials < 0) throw DomainError("trials must be non-negative");
  if (suite == "gauss-bonnet") return gauss_bonnet_suite(options);
  if (suite == "decomposition") return decomposition_suite(options);
  if (suite == "shell") return shell_suite(options);
  if (suite == "removal") return removal_suite(options);
  if (suite == "minimizers") return minimizer_suite(options);
  throw DomainError("unknown suite '" + std::string(suite) + "'");
}

}  // namespace latticecurv
