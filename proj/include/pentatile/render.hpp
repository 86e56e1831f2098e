#pragma once

#include "pentatile/tiling.hpp"

namespace pentatile {

enum class ColorBy : std::uint8_t { Chirality, Kind, UnitParity };

struct RenderOptions {
  double scale = 40.0;  // pixels per unit edge
  ColorBy color_by = ColorBy::Chirality;
  double pentagon_stroke = 1.0;
  double unit_stroke = 2.5;
  std::vector<std::vector<EPoint>> highlights;  // outlines drawn on top
  int precision = 6;                            // decimals, 3..12
  int torus_cells_x = 3;                        // rendered block for torus tilings
  int torus_cells_y = 3;
  bool allow_invalid = false;  // mark gaps/overlaps instead of refusing
  // anterior light, posterior dark
  std::string fill_anterior = "#f5e9d0";
  std::string fill_posterior = "#8a7a5c";
  std::string fill_windmill = "#bcd9ea";
  std::string fill_ship = "#e8b87e";
};

// SVG 1.1 document with one polygon per pentagon, deterministic element
// order. Torus tilings render a block of fundamental cells with the cell
// parallelogram outlined. Invalid tilings throw unless allow_invalid is
// set, in which case violations are marked.
std::string render_svg(const Tiling& t, const RenderOptions& opts = {});

}  // namespace pentatile
