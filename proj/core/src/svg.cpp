#include "latticecurv/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace latticecurv {

namespace {

constexpr const char* kBoundaryFill = "#1f77b4";
constexpr const char* kInteriorFill = "#ffffff";
constexpr const char* kBondStroke = "#222222";
constexpr const char* kChordStroke = "#d62728";

const char* class_stroke(EdgeClass c) {
  switch (c) {
    case EdgeClass::RegularInterior:
      return "#222222";
    case EdgeClass::RegularBoundary:
      return "#1f77b4";
    case EdgeClass::OuterWire:
      return "#2ca02c";
    case EdgeClass::InnerWire:
      return "#9467bd";
  }
  return kBondStroke;
}

const char* curvature_fill(int k) {
  if (k < 0) return "#1f77b4";
  if (k == 0) return "#cccccc";
  return "#ff7f0e";
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

std::string render_svg(const AnalysisReport& report, const SvgOptions& options) {
  const auto pts = report.config.points();
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  if (!pts.empty()) {
    xmin = xmax = pts.front().x;
    ymin = ymax = pts.front().y;
    for (const auto& p : pts) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  }
  double extent = std::max(xmax - xmin, ymax - ymin);
  if (extent <= 0.0) extent = 1.0;
  const double margin = 0.1 * extent;
  const double s = options.scale;
  const double width = (xmax - xmin + 2 * margin) * s;
  const double height = (ymax - ymin + 2 * margin) * s;
  auto sx = [&](double x) { return num((x - xmin + margin) * s); };
  auto sy = [&](double y) { return num((ymax - y + margin) * s); };
  const double radius = 0.12 * s;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  out << "<g id=\"bonds\" stroke-width=\"" << num(0.04 * s) << "\">\n";
  for (const auto& e : report.edges) {
    const auto& a = pts[static_cast<std::size_t>(e.u)];
    const auto& b = pts[static_cast<std::size_t>(e.v)];
    const char* stroke = options.color_by == ColorBy::Class ? class_stroke(e.cls) : kBondStroke;
    out << "<line class=\"" << to_string(e.cls) << "\" x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\""
        << sx(b.x) << "\" y2=\"" << sy(b.y) << "\" stroke=\"" << stroke << "\"/>\n";
  }
  out << "</g>\n";

  if (!report.chords.empty()) {
    out << "<g id=\"chords\" stroke=\"" << kChordStroke << "\" stroke-width=\"" << num(0.03 * s)
        << "\" stroke-dasharray=\"" << num(0.1 * s) << " " << num(0.06 * s) << "\">\n";
    for (const auto& c : report.chords) {
      const auto& a = pts[static_cast<std::size_t>(c.u)];
      const auto& b = pts[static_cast<std::size_t>(c.v)];
      out << "<line class=\"chord\" x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x) << "\" y2=\""
          << sy(b.y) << "\"/>\n";
    }
    out << "</g>\n";
  }

  out << "<g id=\"particles\" stroke=\"#222222\" stroke-width=\"" << num(0.02 * s) << "\">\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const bool has_vertex = i < report.vertices.size();
    const bool boundary = has_vertex && report.vertices[i].boundary;
    const char* fill = boundary ? kBoundaryFill : kInteriorFill;
    if (options.color_by == ColorBy::Curvature && has_vertex) fill = curvature_fill(report.vertices[i].puiseux);
    out << "<circle class=\"" << (boundary ? "boundary" : "interior") << "\" cx=\"" << sx(pts[i].x) << "\" cy=\""
        << sy(pts[i].y) << "\" r=\"" << num(radius) << "\" fill=\"" << fill << "\"/>\n";
  }
  out << "</g>\n";

  if (options.labels && !report.vertices.empty()) {
    out << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"" << num(0.18 * s) << "\" fill=\"#000000\">\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out << "<text x=\"" << sx(pts[i].x + 0.14) << "\" y=\"" << sy(pts[i].y + 0.14) << "\">"
          << report.vertices[i].puiseux << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace latticecurv
