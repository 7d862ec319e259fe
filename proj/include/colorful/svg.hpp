#ifndef COLORFUL_SVG_HPP
#define COLORFUL_SVG_HPP

#include <optional>
#include <string>

#include "colorful/cones.hpp"

namespace colorful {

struct SvgOptions {
  int size = 520;
  std::size_t samples_per_arc = 64;
};

/// Orthographic view of the unit sphere with the nine arcs. Far-side
/// segments are dashed; the crossing pair, if given, is drawn in orange.
std::string render_svg(const SphereDrawing& d, const std::optional<CrossingWitness>& crossing,
                       const SvgOptions& opts = {});

}  // namespace colorful

#endif  // COLORFUL_SVG_HPP
