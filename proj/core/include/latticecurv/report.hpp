#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "latticecurv/bond_graph.hpp"
#include "latticecurv/config.hpp"
#include "latticecurv/curvature.hpp"
#include "latticecurv/energy.hpp"
#include "latticecurv/triangulation.hpp"

namespace latticecurv {

inline constexpr int kReportVersion = 1;

struct AnalysisOptions {
  Potential potential = Potential::heitmann_radin();
  /// Defaults to [1, 1] for Heitmann-Radin and default_soft_range otherwise.
  std::optional<BondRange> range;
  TriangulationStrategy strategy = TriangulationStrategy::EarClip;
};

struct EdgeRecord {
  int u = 0;
  int v = 0;
  EdgeClass cls = EdgeClass::RegularInterior;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

struct FaceRecord {
  std::vector<int> vertices;
  int inner_perimeter = 0;

  friend bool operator==(const FaceRecord&, const FaceRecord&) = default;
};

struct VertexRecord {
  bool boundary = false;
  int degree = 0;
  int puiseux = 0;
  int euler_like = 0;
  int sphere_edges = 0;
  int triangles = 0;
  Rational gromov;
  Rational euler;
  std::optional<int> max_puiseux;
  std::optional<double> euclidean_puiseux;

  friend bool operator==(const VertexRecord&, const VertexRecord&) = default;
};

struct GaussBonnetRecord {
  bool checked = false;
  long long sum_curvature = 0;
  long long six_chi = 0;
  long long boundary_term = 0;
  bool holds = false;

  friend bool operator==(const GaussBonnetRecord&, const GaussBonnetRecord&) = default;
};

struct AnalysisReport {
  Configuration config;
  BondRange range;
  std::string potential;
  TriangulationStrategy strategy = TriangulationStrategy::EarClip;
  /// False when the energy is infinite and the bond graph is not planar.
  bool geometry = false;
  std::vector<EdgeRecord> edges;
  std::vector<Edge> chords;
  std::vector<FaceRecord> faces;
  std::vector<int> boundary;
  int perimeter = 0;
  int chi = 0;
  int mu = 0;
  int components = 0;
  bool simple_boundary = false;
  std::vector<VertexRecord> vertices;
  EnergyBreakdown energy;
  GaussBonnetRecord gauss_bonnet;

  int particles() const { return static_cast<int>(config.size()); }
};

/// Bond graph, faces, triangulation, curvature and energy decomposition.
/// Throws PreconditionError on bad input and IdentityViolation when an
/// identity fails.
AnalysisReport analyze(const Configuration& config, const AnalysisOptions& options = {});

/// "p/q", or "p" for integers.
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& text);

nlohmann::json to_json(const AnalysisReport& report);
/// Total "infinity" with no other terms when the energy is infinite.
nlohmann::json to_json(const EnergyBreakdown& energy);
/// Throws ParseError on a malformed document or an unknown version.
AnalysisReport report_from_json(const nlohmann::json& doc);

/// Short human-readable summary.
std::string to_text(const AnalysisReport& report);

}  // namespace latticecurv
