#ifndef PLANKCERT_SVG_RENDER_HPP
#define PLANKCERT_SVG_RENDER_HPP

#include <optional>
#include <string>

#include "plankcert/scene.hpp"

// Deterministic SVG rendering of a scene: circles k and K, every domain and
// strip, and optionally a witness marker from a failed coverage check. The
// output is a pure function of its inputs (fixed number formatting, no
// timestamps), so renders of the same scene are byte-identical.

namespace plankcert::svg {

struct RenderOptions {
  int resolution = 800;  // output width == height in pixels
  std::optional<geom::PointXY> witness;
};

std::string render(const scene::Scene& scene, const RenderOptions& options = {});

}  // namespace plankcert::svg

#endif  // PLANKCERT_SVG_RENDER_HPP
