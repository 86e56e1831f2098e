#include "pentatile/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace pentatile {

namespace {

struct XY {
  double x, y;
};

XY to_cartesian(EPoint p, double scale) {
  double x = (static_cast<double>(p.tp) + static_cast<double>(p.tq) / 2.0) / 3.0;
  double y = static_cast<double>(p.tq) * std::sqrt(3.0) / 6.0;
  return {x * scale, -y * scale};  // svg y grows downward
}

std::string fmt(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::string points_attr(const std::vector<EPoint>& poly, double scale, XY offset, int precision) {
  std::string s;
  for (const EPoint& p : poly) {
    XY c = to_cartesian(p, scale);
    if (!s.empty()) s += ' ';
    s += fmt(c.x - offset.x, precision) + "," + fmt(c.y - offset.y, precision);
  }
  return s;
}

const std::string& pentagon_fill(const RenderOptions& o, const UnitPlacement& u,
                                 const PentagonPlacement& p, std::size_t unit_index) {
  switch (o.color_by) {
    case ColorBy::Chirality:
      return p.chirality() == Chirality::Anterior ? o.fill_anterior : o.fill_posterior;
    case ColorBy::Kind:
      return u.kind == UnitKind::Windmill ? o.fill_windmill : o.fill_ship;
    case ColorBy::UnitParity:
      return unit_index % 2 == 0 ? o.fill_anterior : o.fill_posterior;
  }
  return o.fill_anterior;
}

}  // namespace

std::string render_svg(const Tiling& t, const RenderOptions& opts) {
  if (opts.scale <= 0) throw std::invalid_argument("scale must be positive");
  if (opts.precision < 3 || opts.precision > 12)
    throw std::invalid_argument("precision must be in 3..12");

  VerifyResult check = verify(t);
  if (!check.valid() && !opts.allow_invalid)
    throw std::invalid_argument("refusing to render an invalid tiling (see verify)");

  std::vector<UnitPlacement> units;
  std::vector<EPoint> cell_poly;
  if (const TorusBasis* b = t.domain.torus_basis()) {
    Tiling block = lift(t, opts.torus_cells_x, opts.torus_cells_y);
    units = block.units;
    EPoint v1{3 * b->v1x, 3 * b->v1y}, v2{3 * b->v2x, 3 * b->v2y};
    cell_poly = {EPoint{0, 0}, v1, v1 + v2, v2};
  } else {
    units = t.units;
  }
  std::sort(units.begin(), units.end());

  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  bool first = true;
  auto grow_bounds = [&](const std::vector<EPoint>& poly) {
    for (const EPoint& p : poly) {
      XY c = to_cartesian(p, opts.scale);
      if (first) {
        min_x = max_x = c.x;
        min_y = max_y = c.y;
        first = false;
      } else {
        min_x = std::min(min_x, c.x);
        max_x = std::max(max_x, c.x);
        min_y = std::min(min_y, c.y);
        max_y = std::max(max_y, c.y);
      }
    }
  };
  std::vector<std::vector<EPoint>> pentagon_polys;
  std::vector<PentagonPlacement> pentagons;
  for (const UnitPlacement& u : units)
    for (const PentagonPlacement& p : u.pentagons()) pentagons.push_back(p);
  std::vector<std::size_t> owner_index;
  {
    std::size_t k = 0;
    for (std::size_t ui = 0; ui < units.size(); ++ui)
      for (int e = 0; e < 3; ++e, ++k) owner_index.push_back(ui);
  }
  for (const PentagonPlacement& p : pentagons) {
    pentagon_polys.push_back(p.vertices());
    grow_bounds(pentagon_polys.back());
  }
  if (!cell_poly.empty()) grow_bounds(cell_poly);
  for (const auto& h : opts.highlights) grow_bounds(h);
  if (first) {
    min_x = min_y = 0;
    max_x = max_y = 1;
  }

  double margin = opts.scale / 2.0;
  XY offset{min_x - margin, min_y - margin};
  double width = max_x - min_x + 2 * margin;
  double height = max_y - min_y + 2 * margin;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << fmt(width, opts.precision) << "\" height=\"" << fmt(height, opts.precision) << "\">\n";

  for (std::size_t i = 0; i < pentagons.size(); ++i) {
    const UnitPlacement& u = units[owner_index[i]];
    svg << "  <polygon points=\"" << points_attr(pentagon_polys[i], opts.scale, offset, opts.precision)
        << "\" fill=\"" << pentagon_fill(opts, u, pentagons[i], owner_index[i])
        << "\" stroke=\"#333333\" stroke-width=\"" << fmt(opts.pentagon_stroke, 2) << "\"/>\n";
  }
  for (const UnitPlacement& u : units) {
    std::vector<EPoint> outline = region_outline(u.footprint());
    svg << "  <polygon points=\"" << points_attr(outline, opts.scale, offset, opts.precision)
        << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" << fmt(opts.unit_stroke, 2)
        << "\"/>\n";
  }
  if (!check.valid()) {
    for (const Violation& v : check.violations) {
      if (!v.wedge) continue;
      auto c = v.wedge->corners();
      std::vector<EPoint> tri{c[0], c[1], c[2]};
      const char* color = v.kind == ViolationKind::Gap ? "#dd2222" : "#8822cc";
      svg << "  <polygon points=\"" << points_attr(tri, opts.scale, offset, opts.precision)
          << "\" fill=\"" << color << "\" stroke=\"none\"/>\n";
    }
  }
  if (!cell_poly.empty()) {
    svg << "  <polygon points=\"" << points_attr(cell_poly, opts.scale, offset, opts.precision)
        << "\" fill=\"none\" stroke=\"#cc0000\" stroke-width=\"" << fmt(opts.unit_stroke, 2)
        << "\" stroke-dasharray=\"6,3\"/>\n";
  }
  for (const auto& h : opts.highlights) {
    svg << "  <polygon points=\"" << points_attr(h, opts.scale, offset, opts.precision)
        << "\" fill=\"none\" stroke=\"#cc0000\" stroke-width=\"" << fmt(opts.unit_stroke * 1.5, 2)
        << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace pentatile
