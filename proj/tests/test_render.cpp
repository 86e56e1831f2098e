#include <doctest.h>

#include <set>
#include <sstream>

#include "pentatile/catalog.hpp"
#include "pentatile/render.hpp"
#include "pentatile/reversal.hpp"

using namespace pentatile;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++n;
  return n;
}

std::vector<std::string> polygon_elements(const std::string& svg) {
  std::vector<std::string> out;
  std::istringstream in(svg);
  std::string line;
  while (std::getline(in, line))
    if (line.find("<polygon") != std::string::npos) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("one windmill renders as three equal-fill polygons") {
  UnitPlacement wm{UnitKind::Windmill, Chirality::Anterior, Tri{0, 0, Orient::U}, 0};
  Tiling t{Domain::finite(wm.footprint()), {wm}};
  RenderOptions opts;
  opts.color_by = ColorBy::Kind;
  std::string svg = render_svg(t, opts);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count_occurrences(svg, "fill=\"" + opts.fill_windmill + "\"") == 3);
  CHECK(count_occurrences(svg, "fill=\"" + opts.fill_ship + "\"") == 0);
}

TEST_CASE("an anterior ship renders two light and one dark pentagon") {
  UnitPlacement ship{UnitKind::Ship, Chirality::Anterior, Tri{0, 0, Orient::U}, 0};
  Tiling t{Domain::finite(ship.footprint()), {ship}};
  RenderOptions opts;
  std::string svg = render_svg(t, opts);
  CHECK(count_occurrences(svg, "fill=\"" + opts.fill_anterior + "\"") == 2);
  CHECK(count_occurrences(svg, "fill=\"" + opts.fill_posterior + "\"") == 1);
}

TEST_CASE("torus renders a block of cells with one polygon per pentagon") {
  Tiling t = preset("windmill-min");
  RenderOptions opts;
  opts.torus_cells_x = 2;
  opts.torus_cells_y = 3;
  std::string svg = render_svg(t, opts);
  std::size_t pentagon_polys = 0;
  for (const std::string& el : polygon_elements(svg))
    if (el.find("stroke=\"#333333\"") != std::string::npos) ++pentagon_polys;
  CHECK(pentagon_polys == 3 * t.units.size() * 2 * 3);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);  // cell outline
}

TEST_CASE("coordinates respect the precision option") {
  UnitPlacement wm{UnitKind::Windmill, Chirality::Anterior, Tri{0, 0, Orient::U}, 0};
  Tiling t{Domain::finite(wm.footprint()), {wm}};
  RenderOptions opts;
  opts.precision = 4;
  std::string svg = render_svg(t, opts);
  // grab the first points attribute and check decimal places
  std::size_t p = svg.find("points=\"");
  REQUIRE(p != std::string::npos);
  std::size_t q = svg.find('"', p + 8);
  std::string pts = svg.substr(p + 8, q - p - 8);
  std::size_t dot = pts.find('.');
  REQUIRE(dot != std::string::npos);
  int decimals = 0;
  for (std::size_t i = dot + 1; i < pts.size() && std::isdigit(static_cast<unsigned char>(pts[i])); ++i)
    ++decimals;
  CHECK(decimals == 4);

  RenderOptions bad;
  bad.precision = 2;
  CHECK_THROWS_AS(render_svg(t, bad), std::invalid_argument);
  bad.precision = 6;
  bad.scale = 0;
  CHECK_THROWS_AS(render_svg(t, bad), std::invalid_argument);
}

TEST_CASE("invalid tilings render only behind the flag") {
  UnitPlacement wm{UnitKind::Windmill, Chirality::Anterior, Tri{0, 0, Orient::U}, 0};
  Tiling gap{Domain::finite(wm.footprint()), {}};
  CHECK_THROWS_AS(render_svg(gap), std::invalid_argument);
  RenderOptions opts;
  opts.allow_invalid = true;
  std::string svg = render_svg(gap, opts);
  CHECK(count_occurrences(svg, "#dd2222") == 21);  // gap markers
}

TEST_CASE("a flip changes the image only inside the region") {
  Tiling flat = lift(preset("flower-lattice"), 2, 2);
  std::vector<ReversibleRegion> regions = find_cn(flat, 4);
  REQUIRE(!regions.empty());
  const ReversibleRegion& r = regions[0];
  Tiling flipped = flip(flat, r);

  RenderOptions opts;
  std::string before = render_svg(flat, opts);
  std::string after = render_svg(flipped, opts);
  CHECK(before != after);

  std::vector<std::string> pa = polygon_elements(before), pb = polygon_elements(after);
  std::set<std::string> a(pa.begin(), pa.end());
  std::set<std::string> b(pb.begin(), pb.end());
  // polygons exclusive to one side must all describe region pentagons
  std::size_t changed = 0;
  for (const std::string& el : a) changed += b.count(el) ? 0 : 1;
  // 7 wedge-polygons per pentagon side: filling size on each side, plus
  // the unit outlines that moved
  CHECK(changed > 0);
  CHECK(changed <= r.filling.size() + r.unit_indices.size() + 4);
}

TEST_CASE("emitted coordinates decimalize exact points faithfully") {
  // re-parse every pentagon polygon and re-check convexity numerically
  Tiling t = lift(preset("rice1995-like"), 1, 1);
  RenderOptions opts;
  std::string svg = render_svg(t, opts);
  int checked = 0;
  for (const std::string& el : polygon_elements(svg)) {
    if (el.find("stroke=\"#333333\"") == std::string::npos) continue;  // pentagons only
    std::size_t p = el.find("points=\"");
    REQUIRE(p != std::string::npos);
    std::size_t q = el.find('"', p + 8);
    std::istringstream in(el.substr(p + 8, q - p - 8));
    std::vector<std::pair<double, double>> pts;
    std::string tok;
    while (in >> tok) {
      auto comma = tok.find(',');
      pts.emplace_back(std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1)));
    }
    REQUIRE(pts.size() == 5);
    // svg y grows downward, so exact pentagons read back clockwise
    double tol = 1e-4 * opts.scale * opts.scale;
    for (std::size_t i = 0; i < 5; ++i) {
      auto [ax, ay] = pts[i];
      auto [bx, by] = pts[(i + 1) % 5];
      auto [cx, cy] = pts[(i + 2) % 5];
      double cross_z = (bx - ax) * (cy - by) - (by - ay) * (cx - bx);
      CHECK(cross_z <= tol);
    }
    ++checked;
  }
  CHECK(checked == 18);
}
