#include "latticecurv/report.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "latticecurv/error.hpp"

namespace latticecurv {

using nlohmann::json;

namespace {

constexpr const char* kInfinity = "infinity";

BondRange resolve_range(const Configuration& config, const AnalysisOptions& options) {
  if (options.range) return *options.range;
  if (options.potential.kind() == Potential::Kind::HeitmannRadin) return BondRange::unit();
  return default_soft_range(config);
}

void fill_geometry(AnalysisReport& r, const BondGraph& g, const TriGraph& tri) {
  r.geometry = true;
  const auto classes = g.edge_classes();
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    r.edges.push_back({g.edges()[k].u, g.edges()[k].v, classes[k]});
  }
  r.chords.assign(tri.chords().begin(), tri.chords().end());
  for (const auto& f : g.faces()) r.faces.push_back({f.vertices, inner_perimeter(f)});
  r.boundary.assign(g.boundary_vertices().begin(), g.boundary_vertices().end());
  r.perimeter = perimeter(g);
  r.chi = euler_characteristic(g);
  r.mu = defect_measure(tri);
  r.components = g.component_count();

  const CurvatureProfile prof = gauss_bonnet_report(tri);
  r.simple_boundary = prof.simple_boundary;
  r.vertices.resize(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t x = 0; x < r.vertices.size(); ++x) {
    auto& v = r.vertices[x];
    v.boundary = g.is_boundary(static_cast<int>(x));
    v.degree = g.degree(static_cast<int>(x));
    v.puiseux = prof.puiseux[x];
    v.euler_like = prof.euler_like[x];
    v.sphere_edges = prof.spheres[x].v1;
    v.triangles = prof.spheres[x].v2;
    v.gromov = prof.gromov[x];
    v.euler = prof.euler[x];
    v.max_puiseux = prof.max_puiseux[x];
    v.euclidean_puiseux = prof.euclidean_puiseux[x];
  }
  r.gauss_bonnet = {true, prof.sum_puiseux, prof.six_chi(), prof.boundary_term(), prof.gauss_bonnet_holds()};
}

}  // namespace

json to_json(const EnergyBreakdown& e) {
  if (e.infinite) return {{"infinite", true}, {"total", kInfinity}};
  return {{"infinite", false}, {"total", e.total},         {"bulk", e.bulk},     {"perimeter", e.perimeter},
          {"euler_term", e.euler_term}, {"defect", e.defect}, {"elastic", e.elastic}, {"nonbond", e.nonbond},
          {"bonds", e.bonds},   {"residual", e.residual}};
}

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("report is missing field '") + key + "'");
  return j.at(key).get<T>();
}

TriangulationStrategy strategy_from_string(const std::string& s) {
  if (s == to_string(TriangulationStrategy::EarClip)) return TriangulationStrategy::EarClip;
  if (s == to_string(TriangulationStrategy::Fan)) return TriangulationStrategy::Fan;
  throw ParseError("unknown triangulation strategy '" + s + "'");
}

}  // namespace

AnalysisReport analyze(const Configuration& config, const AnalysisOptions& options) {
  AnalysisReport r;
  r.config = config;
  r.range = resolve_range(config, options);
  r.range.validate();
  r.potential = options.potential.name();
  r.strategy = options.strategy;
  r.energy = energy_decomposition(config, options.potential, r.range);

  std::optional<BondGraph> graph;
  try {
    graph = build_bond_graph(config, r.range);
  } catch (const PlanarityError&) {
    // An overlapping pair makes the energy infinite and may also break
    // planarity; the geometric part is then skipped.
    if (!r.energy.infinite) throw;
    return r;
  }
  fill_geometry(r, *graph, triangulate(*graph, options.strategy));
  return r;
}

std::string rational_to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  auto parse = [&](std::string_view part) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size()) throw ParseError("invalid rational '" + text + "'");
    return value;
  };
  const std::string_view all(text);
  if (slash == std::string::npos) return Rational(parse(all));
  const long long den = parse(all.substr(slash + 1));
  if (den == 0) throw ParseError("invalid rational '" + text + "'");
  return Rational(parse(all.substr(0, slash)), den);
}

json to_json(const AnalysisReport& r) {
  json points = json::array();
  for (const auto& p : r.config.points()) points.push_back({p.x, p.y});

  json edges = json::array();
  for (const auto& e : r.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"class", std::string(to_string(e.cls))}});
  json chords = json::array();
  for (const auto& c : r.chords) chords.push_back({c.u, c.v});
  json faces = json::array();
  for (const auto& f : r.faces) faces.push_back({{"vertices", f.vertices}, {"P_inn", f.inner_perimeter}});

  json vertices = json::array();
  for (const auto& v : r.vertices) {
    json jv = {{"boundary", v.boundary},
               {"degree", v.degree},
               {"K", v.puiseux},
               {"K_euler_like", v.euler_like},
               {"S1", v.sphere_edges},
               {"triangles", v.triangles},
               {"K_gromov", rational_to_string(v.gromov)},
               {"K_euler", rational_to_string(v.euler)},
               {"K_max", nullptr},
               {"K_eu", nullptr}};
    if (v.max_puiseux) jv["K_max"] = *v.max_puiseux;
    if (v.euclidean_puiseux) jv["K_eu"] = *v.euclidean_puiseux;
    vertices.push_back(std::move(jv));
  }

  return {{"v", kReportVersion},
          {"config", {{"points", std::move(points)}, {"tol", r.config.tol()}}},
          {"N", r.particles()},
          {"bond_range", {r.range.alpha, r.range.beta}},
          {"potential", r.potential},
          {"triangulation", std::string(to_string(r.strategy))},
          {"geometry", r.geometry},
          {"edges", std::move(edges)},
          {"triangulation_chords", std::move(chords)},
          {"faces", std::move(faces)},
          {"boundary", r.boundary},
          {"P", r.perimeter},
          {"chi", r.chi},
          {"mu", r.mu},
          {"components", r.components},
          {"simple_boundary", r.simple_boundary},
          {"vertices", std::move(vertices)},
          {"energy", to_json(r.energy)},
          {"gauss_bonnet",
           {{"checked", r.gauss_bonnet.checked},
            {"sum_K", r.gauss_bonnet.sum_curvature},
            {"six_chi", r.gauss_bonnet.six_chi},
            {"boundary_term", r.gauss_bonnet.boundary_term},
            {"holds", r.gauss_bonnet.holds}}}};
}

AnalysisReport report_from_json(const json& doc) {
  try {
    if (field<int>(doc, "v") != kReportVersion) throw ParseError("unsupported report version");
    AnalysisReport r;
    const json& cfg = doc.at("config");
    std::vector<Point> points;
    for (const auto& p : cfg.at("points")) points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    r.config = Configuration(std::move(points), field<double>(cfg, "tol"));
    if (field<int>(doc, "N") != r.particles()) throw ParseError("report N does not match its point list");

    const json& range = doc.at("bond_range");
    r.range = {range.at(0).get<double>(), range.at(1).get<double>()};
    r.potential = field<std::string>(doc, "potential");
    r.strategy = strategy_from_string(field<std::string>(doc, "triangulation"));
    r.geometry = field<bool>(doc, "geometry");

    for (const auto& e : doc.at("edges")) {
      const auto cls = edge_class_from_string(field<std::string>(e, "class"));
      if (!cls) throw ParseError("unknown edge class in report");
      r.edges.push_back({field<int>(e, "u"), field<int>(e, "v"), *cls});
    }
    for (const auto& c : doc.at("triangulation_chords")) r.chords.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    for (const auto& f : doc.at("faces")) {
      r.faces.push_back({field<std::vector<int>>(f, "vertices"), field<int>(f, "P_inn")});
    }
    r.boundary = field<std::vector<int>>(doc, "boundary");
    r.perimeter = field<int>(doc, "P");
    r.chi = field<int>(doc, "chi");
    r.mu = field<int>(doc, "mu");
    r.components = field<int>(doc, "components");
    r.simple_boundary = field<bool>(doc, "simple_boundary");

    for (const auto& jv : doc.at("vertices")) {
      VertexRecord v;
      v.boundary = field<bool>(jv, "boundary");
      v.degree = field<int>(jv, "degree");
      v.puiseux = field<int>(jv, "K");
      v.euler_like = field<int>(jv, "K_euler_like");
      v.sphere_edges = field<int>(jv, "S1");
      v.triangles = field<int>(jv, "triangles");
      v.gromov = rational_from_string(field<std::string>(jv, "K_gromov"));
      v.euler = rational_from_string(field<std::string>(jv, "K_euler"));
      if (!jv.at("K_max").is_null()) v.max_puiseux = jv.at("K_max").get<int>();
      if (!jv.at("K_eu").is_null()) v.euclidean_puiseux = jv.at("K_eu").get<double>();
      r.vertices.push_back(v);
    }

    const json& e = doc.at("energy");
    r.energy.particles = r.particles();
    r.energy.range = r.range;
    r.energy.infinite = field<bool>(e, "infinite");
    if (r.energy.infinite) {
      r.energy.total = std::numeric_limits<double>::infinity();
    } else {
      r.energy.total = field<double>(e, "total");
      r.energy.bulk = field<double>(e, "bulk");
      r.energy.perimeter = field<int>(e, "perimeter");
      r.energy.euler_term = field<int>(e, "euler_term");
      r.energy.defect = field<int>(e, "defect");
      r.energy.elastic = field<double>(e, "elastic");
      r.energy.nonbond = field<double>(e, "nonbond");
      r.energy.bonds = field<int>(e, "bonds");
      r.energy.residual = field<double>(e, "residual");
    }

    const json& gb = doc.at("gauss_bonnet");
    r.gauss_bonnet = {field<bool>(gb, "checked"), field<long long>(gb, "sum_K"), field<long long>(gb, "six_chi"),
                      field<long long>(gb, "boundary_term"), field<bool>(gb, "holds")};
    return r;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("malformed report: ") + ex.what());
  }
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "N " << r.particles() << "\n";
  out << "bond range [" << r.range.alpha << ", " << r.range.beta << "]  potential " << r.potential << "\n";
  if (r.geometry) {
    out << "edges " << r.edges.size() << "  faces " << r.faces.size() << "  components " << r.components << "\n";
    out << "P " << r.perimeter << "  chi " << r.chi << "  mu " << r.mu << "  #boundary " << r.boundary.size()
        << (r.simple_boundary ? "  (simply closed)" : "") << "\n";
    out << "sum K " << r.gauss_bonnet.sum_curvature << " = 6chi " << r.gauss_bonnet.six_chi << " + 3(P - #boundary) "
        << r.gauss_bonnet.boundary_term << (r.gauss_bonnet.holds ? "  ok" : "  VIOLATED") << "\n";
  } else {
    out << "geometry skipped: bond graph not planar\n";
  }
  if (r.energy.infinite) {
    out << "energy infinity\n";
  } else {
    const auto& e = r.energy;
    out.precision(std::numeric_limits<double>::max_digits10);
    out << "energy " << e.total << "\n";
    out << "  -3N " << e.bulk << "  P " << e.perimeter << "  3chi " << e.euler_term << "  mu " << e.defect << "\n";
    out << "  elastic " << e.elastic << "  nonbond " << e.nonbond << "  residual " << e.residual << "\n";
  }
  return out.str();
}

}  // namespace latticecurv
