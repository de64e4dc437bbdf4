#include "plankcert/svg_render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace plankcert::svg {

using geom::kPi;
using geom::PointXY;

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

struct Mapper {
  double scale;
  double world_extent;  // world half-width shown
  int resolution;

  double sx(double x) const { return (x + world_extent) * scale; }
  double sy(double y) const { return (world_extent - y) * scale; }
  std::string pt(PointXY p) const { return fmt(sx(p.x)) + "," + fmt(sy(p.y)); }
};

void draw_strip(std::ostringstream& out, const Mapper& m, const geom::Strip& s,
                double reach) {
  const PointXY n = geom::unit_vector(s.normal_angle);
  const PointXY u = geom::unit_vector(s.normal_angle + kPi / 2.0);
  const PointXY c1 = s.offset_low * n;
  const PointXY c2 = s.offset_high * n;
  out << "<polygon points=\"" << m.pt(c1 + reach * u) << " " << m.pt(c2 + reach * u) << " "
      << m.pt(c2 - reach * u) << " " << m.pt(c1 - reach * u)
      << "\" fill=\"#2c7fb8\" fill-opacity=\"0.18\" stroke=\"#2c7fb8\" "
         "stroke-width=\"1\"/>\n";
}

void draw_wedge(std::ostringstream& out, const Mapper& m, const geom::AngularDomain& d,
                double reach) {
  const PointXY a = d.vertex + reach * geom::unit_vector(d.start_direction);
  const PointXY b = d.vertex + reach * geom::unit_vector(d.start_direction + d.sweep);
  // World-ccw arcs map to sweep-flag 0 in svg's y-down coordinates.
  const int large_arc = 0;  // sweep <= pi
  out << "<path d=\"M " << m.pt(d.vertex) << " L " << m.pt(a) << " A " << fmt(reach * m.scale)
      << " " << fmt(reach * m.scale) << " 0 " << large_arc << " 0 " << m.pt(b)
      << " Z\" fill=\"#31a354\" fill-opacity=\"0.18\" stroke=\"#31a354\" "
         "stroke-width=\"1\"/>\n";
}

}  // namespace

std::string render(const scene::Scene& scene, const RenderOptions& options) {
  if (options.resolution < 16) throw std::invalid_argument("svg render: resolution too small");

  const double R = scene.config.R;
  Mapper m;
  m.world_extent = 1.15 * R;
  m.resolution = options.resolution;
  m.scale = options.resolution / (2.0 * m.world_extent);
  const double reach = 4.0 * m.world_extent;  // rays/strips drawn past the canvas

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.resolution
      << "\" height=\"" << options.resolution << "\" viewBox=\"0 0 " << options.resolution
      << " " << options.resolution << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<clipPath id=\"canvas\"><rect width=\"" << options.resolution << "\" height=\""
      << options.resolution << "\"/></clipPath>\n";
  out << "<g clip-path=\"url(#canvas)\">\n";

  for (const geom::Strip& s : scene.strips) draw_strip(out, m, s, reach);
  for (const auto& entry : scene.domains) draw_wedge(out, m, entry.as_angular(), reach);

  // Outer circle K, inner circle k, disc T shading.
  out << "<circle cx=\"" << fmt(m.sx(0)) << "\" cy=\"" << fmt(m.sy(0)) << "\" r=\""
      << fmt(scene.config.R * m.scale)
      << "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1.5\"/>\n";
  out << "<circle cx=\"" << fmt(m.sx(0)) << "\" cy=\"" << fmt(m.sy(0)) << "\" r=\""
      << fmt(scene.config.r * m.scale)
      << "\" fill=\"#fec44f\" fill-opacity=\"0.12\" stroke=\"#d95f0e\" "
         "stroke-width=\"1.5\"/>\n";

  if (options.witness) {
    const PointXY w = *options.witness;
    const double cr = 0.02 * options.resolution;
    out << "<g stroke=\"#e31a1c\" stroke-width=\"2\">\n";
    out << "<line x1=\"" << fmt(m.sx(w.x) - cr) << "\" y1=\"" << fmt(m.sy(w.y) - cr)
        << "\" x2=\"" << fmt(m.sx(w.x) + cr) << "\" y2=\"" << fmt(m.sy(w.y) + cr) << "\"/>\n";
    out << "<line x1=\"" << fmt(m.sx(w.x) - cr) << "\" y1=\"" << fmt(m.sy(w.y) + cr)
        << "\" x2=\"" << fmt(m.sx(w.x) + cr) << "\" y2=\"" << fmt(m.sy(w.y) - cr) << "\"/>\n";
    out << "<circle cx=\"" << fmt(m.sx(w.x)) << "\" cy=\"" << fmt(m.sy(w.y)) << "\" r=\""
        << fmt(cr) << "\" fill=\"none\"/>\n";
    out << "</g>\n";
  }

  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace plankcert::svg
