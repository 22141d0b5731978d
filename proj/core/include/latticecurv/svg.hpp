#pragma once

#include <string>

#include "latticecurv/report.hpp"

namespace latticecurv {

enum class ColorBy { Class, Curvature };

struct SvgOptions {
  ColorBy color_by = ColorBy::Class;
  /// Write the Puiseux curvature next to each particle.
  bool labels = false;
  /// Pixels per unit length.
  double scale = 60.0;
};

/// Bonds as solid lines, triangulation chords as dashed red lines, particles
/// as circles. The output depends only on the report and the options.
std::string render_svg(const AnalysisReport& report, const SvgOptions& options = {});

}  // namespace latticecurv
