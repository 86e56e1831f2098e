#pragma once

// Independent reference implementations used to check the engine. Nothing
// here shares search code with the library: the counter is a plain
// first-free-cell backtracker and validity goes through exact
// point-in-polygon tests.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "pentatile/solver.hpp"

namespace pentatile::testing {

// Exhaustive tiling counter: recurse on the first uncovered wedge, try
// every placement covering it. No links, no column heuristics.
inline std::int64_t naive_count(const Domain& domain, const PieceSet& pieces) {
  const TorusBasis* torus = domain.torus_basis();
  std::vector<Tri> anchor_tris = torus ? torus->cell() : domain.region()->tris();

  std::vector<Wedge> wedges;
  for (Tri t : anchor_tris)
    for (std::uint8_t e = 0; e < 3; ++e) wedges.push_back({t, e});
  std::sort(wedges.begin(), wedges.end());
  std::map<Wedge, int> index;
  for (std::size_t i = 0; i < wedges.size(); ++i) index[wedges[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> supports;
  for (Tri t : anchor_tris) {
    for (const UnitPlacement& u : units_at(t)) {
      if (!pieces.contains(u.kind, u.chirality)) continue;
      std::vector<int> cols;
      bool ok = true;
      for (const Wedge& w : u.wedges()) {
        Wedge dw = torus ? torus->reduce(w) : w;
        auto it = index.find(dw);
        if (it == index.end()) {
          ok = false;
          break;
        }
        cols.push_back(it->second);
      }
      if (!ok) continue;
      std::sort(cols.begin(), cols.end());
      if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) continue;
      supports.push_back(std::move(cols));
    }
  }
  std::vector<std::vector<int>> by_first_cell(wedges.size());
  for (std::size_t r = 0; r < supports.size(); ++r)
    for (int c : supports[r]) by_first_cell[static_cast<std::size_t>(c)].push_back(static_cast<int>(r));

  std::vector<char> covered(wedges.size(), 0);
  std::int64_t found = 0;
  std::function<void(int)> rec = [&](int from) {
    int cell = -1;
    for (int i = from; i < static_cast<int>(wedges.size()); ++i) {
      if (!covered[static_cast<std::size_t>(i)]) {
        cell = i;
        break;
      }
    }
    if (cell < 0) {
      ++found;
      return;
    }
    for (int r : by_first_cell[static_cast<std::size_t>(cell)]) {
      bool free = true;
      for (int c : supports[static_cast<std::size_t>(r)]) free = free && !covered[static_cast<std::size_t>(c)];
      if (!free) continue;
      for (int c : supports[static_cast<std::size_t>(r)]) covered[static_cast<std::size_t>(c)] = 1;
      rec(cell + 1);
      for (int c : supports[static_cast<std::size_t>(r)]) covered[static_cast<std::size_t>(c)] = 0;
    }
  };
  rec(0);
  return found;
}

// Strict point-in-convex-polygon in exact arithmetic; polygon in thirds,
// point in ninths.
inline bool strictly_inside(const std::vector<EPoint>& poly_thirds, EPoint point_ninths) {
  for (std::size_t i = 0; i < poly_thirds.size(); ++i) {
    EPoint a{3 * poly_thirds[i].tp, 3 * poly_thirds[i].tq};
    EPoint b{3 * poly_thirds[(i + 1) % poly_thirds.size()].tp,
             3 * poly_thirds[(i + 1) % poly_thirds.size()].tq};
    if (cross(b - a, point_ninths - a) <= 0) return false;
  }
  return true;
}

// Rasterizer ground truth for finite tilings: each domain wedge's interior
// point must sit inside exactly one pentagon.
inline bool rasterizer_valid(const Tiling& t) {
  if (t.domain.is_torus()) return false;
  std::vector<std::vector<EPoint>> pentagons;
  for (const UnitPlacement& u : t.units)
    for (const PentagonPlacement& p : u.pentagons()) pentagons.push_back(p.vertices());
  for (const Wedge& w : t.domain.region()->wedges()) {
    int hits = 0;
    for (const auto& poly : pentagons)
      if (strictly_inside(poly, w.interior_point_times3())) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

// Brute-force congruence: r2 equals some point-group image of r1 up to
// translation.
inline bool congruent(const Region& r1, const Region& r2, bool with_reflections) {
  auto normalize = [](std::vector<Tri> ts) {
    std::int64_t mx = ts[0].x, my = ts[0].y;
    for (const Tri& t : ts) {
      mx = std::min(mx, t.x);
      my = std::min(my, t.y);
    }
    for (Tri& t : ts) {
      t.x -= mx;
      t.y -= my;
    }
    std::sort(ts.begin(), ts.end());
    return ts;
  };
  std::vector<Tri> want = normalize(r2.tris());
  for (int m = 0; m < (with_reflections ? 2 : 1); ++m) {
    for (int k = 0; k < 6; ++k) {
      Isometry g{k, m == 1, {}};
      std::vector<Tri> img;
      for (Tri t : r1.tris()) img.push_back(g.apply(t));
      if (normalize(std::move(img)) == want) return true;
    }
  }
  return false;
}

// Seeded connected random region, grown one boundary triangle at a time.
inline Region random_region(std::mt19937_64& rng, int size) {
  std::set<Tri> tris{Tri{0, 0, Orient::U}};
  while (static_cast<int>(tris.size()) < size) {
    std::vector<Tri> frontier;
    for (Tri t : tris)
      for (int e = 0; e < 3; ++e)
        if (!tris.count(t.neighbor(e))) frontier.push_back(t.neighbor(e));
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    tris.insert(frontier[rng() % frontier.size()]);
  }
  return Region({tris.begin(), tris.end()});
}

// Region that is tileable by construction: the union of disjoint random
// unit footprints.
inline Region random_unit_union(std::mt19937_64& rng, int count) {
  std::set<Tri> used;
  int placed = 0;
  for (int attempt = 0; attempt < 500 && placed < count; ++attempt) {
    Tri anchor{static_cast<std::int64_t>(rng() % 9) - 4, static_cast<std::int64_t>(rng() % 9) - 4,
               rng() & 1 ? Orient::D : Orient::U};
    const UnitPlacement u = units_at(anchor)[rng() % 8];
    Region foot = u.footprint();
    bool free = true;
    for (Tri t : foot.tris()) free = free && !used.count(t);
    if (!free) continue;
    for (Tri t : foot.tris()) used.insert(t);
    ++placed;
  }
  return Region({used.begin(), used.end()});
}

inline Isometry random_isometry(std::mt19937_64& rng) {
  return {static_cast<int>(rng() % 6), (rng() & 1) != 0,
          EPoint{3 * (static_cast<std::int64_t>(rng() % 21) - 10),
                 3 * (static_cast<std::int64_t>(rng() % 21) - 10)}};
}

}  // namespace pentatile::testing
