#include "pentatile/reversal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace pentatile {

namespace {

std::pair<std::vector<Tri>, EPoint> normalize_tris(std::vector<Tri> ts) {
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
  return {std::move(ts), EPoint{3 * mx, 3 * my}};
}

std::pair<std::vector<Wedge>, EPoint> normalize_wedges(std::vector<Wedge> ws) {
  std::int64_t mx = ws[0].tri.x, my = ws[0].tri.y;
  for (const Wedge& w : ws) {
    mx = std::min(mx, w.tri.x);
    my = std::min(my, w.tri.y);
  }
  for (Wedge& w : ws) {
    w.tri.x -= mx;
    w.tri.y -= my;
  }
  std::sort(ws.begin(), ws.end());
  return {std::move(ws), EPoint{3 * mx, 3 * my}};
}

template <typename Item, typename Normalize>
std::vector<Isometry> generic_self_maps(const std::vector<Item>& items, Normalize normalize,
                                        bool reflective_only) {
  std::vector<Isometry> out;
  if (items.empty()) return out;
  auto [base, base_off] = normalize(items);
  for (int m = reflective_only ? 1 : 0; m < 2; ++m) {
    for (int k = 0; k < 6; ++k) {
      Isometry part{k, m == 1, {}};
      std::vector<Item> img;
      img.reserve(items.size());
      for (const Item& it : items) img.push_back(part.apply(it));
      auto [norm, img_off] = normalize(img);
      if (norm == base) out.push_back(Isometry::translation(base_off - img_off) * part);
    }
  }
  return out;
}

std::string pentagon_text(const PentagonPlacement& p) {
  std::ostringstream os;
  os << p.central.to_string() << "/e" << int(p.edge) << to_char(p.lean);
  return os.str();
}

std::string filling_text(std::vector<PentagonPlacement> ps) {
  std::sort(ps.begin(), ps.end());
  std::string out;
  for (const PentagonPlacement& p : ps) {
    out += pentagon_text(p);
    out += ' ';
  }
  return out;
}

std::vector<PentagonPlacement> apply_all(const Isometry& g,
                                         const std::vector<PentagonPlacement>& ps) {
  std::vector<PentagonPlacement> out;
  out.reserve(ps.size());
  for (const PentagonPlacement& p : ps) out.push_back(apply(g, p));
  std::sort(out.begin(), out.end());
  return out;
}

void require_finite_valid(const Tiling& t, const char* what) {
  if (t.domain.is_torus())
    throw std::invalid_argument(std::string(what) + " needs a finite tiling; lift the torus first");
  if (!verify(t).valid()) throw std::invalid_argument(std::string(what) + " needs a valid tiling");
}

}  // namespace

std::vector<Isometry> self_maps(const Region& r) {
  return generic_self_maps(
      r.tris(), [](std::vector<Tri> ts) { return normalize_tris(std::move(ts)); }, false);
}

std::vector<ReversibleRegion> find_reversible(const Tiling& t, int max_units) {
  require_finite_valid(t, "find_reversible");
  const int n = static_cast<int>(t.units.size());

  std::map<Tri, int> owner;
  std::vector<Region> feet;
  feet.reserve(t.units.size());
  for (int i = 0; i < n; ++i) {
    feet.push_back(t.units[static_cast<std::size_t>(i)].footprint());
    for (Tri tri : feet.back().tris()) owner[tri] = i;
  }
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    std::set<int> nb;
    for (Tri tri : feet[static_cast<std::size_t>(i)].tris()) {
      for (int e = 0; e < 3; ++e) {
        auto it = owner.find(tri.neighbor(e));
        if (it != owner.end() && it->second != i) nb.insert(it->second);
      }
    }
    adj[static_cast<std::size_t>(i)] = {nb.begin(), nb.end()};
  }

  std::vector<ReversibleRegion> results;
  std::vector<int> subset;
  std::vector<Tri> region_tris;

  auto process = [&](const std::vector<int>& S) {
    std::vector<Tri> tris = region_tris;
    std::sort(tris.begin(), tris.end());
    std::vector<UnitPlacement> units;
    units.reserve(S.size());
    for (int i : S) units.push_back(t.units[static_cast<std::size_t>(i)]);
    std::sort(units.begin(), units.end());

    std::vector<Isometry> sigmas = generic_self_maps(
        tris, [](std::vector<Tri> ts) { return normalize_tris(std::move(ts)); }, true);
    if (sigmas.empty()) return;

    std::set<std::string> seen_flips;
    for (const Isometry& sigma : sigmas) {
      std::vector<UnitPlacement> moved;
      moved.reserve(units.size());
      for (const UnitPlacement& u : units) moved.push_back(apply(sigma, u));
      std::sort(moved.begin(), moved.end());
      if (moved == units) continue;

      ReversibleRegion r;
      r.unit_indices = S;
      std::sort(r.unit_indices.begin(), r.unit_indices.end());
      for (const UnitPlacement& u : units)
        for (const PentagonPlacement& p : u.pentagons()) r.filling.push_back(p);
      std::sort(r.filling.begin(), r.filling.end());
      r.flipped = apply_all(sigma, r.filling);
      if (!seen_flips.insert(filling_text(r.flipped)).second) continue;
      for (const Tri& tri : tris)
        for (std::uint8_t e = 0; e < 3; ++e) r.cells.push_back({tri, e});
      std::sort(r.cells.begin(), r.cells.end());
      try {
        r.outline = wedge_outline(r.cells);
      } catch (const OutlineError&) {
        continue;
      }
      r.sigma = sigma;
      results.push_back(std::move(r));
    }
  };

  // Connected subsets rooted at their least member, each visited once.
  std::vector<char> in_subset(n, 0), banned(n, 0), queued(n, 0);
  std::function<void(int, std::vector<int>&)> grow = [&](int root, std::vector<int>& ext) {
    process(subset);
    if (static_cast<int>(subset.size()) >= max_units) return;
    for (std::size_t i = 0; i < ext.size(); ++i) {
      int v = ext[i];
      if (banned[static_cast<std::size_t>(v)]) continue;
      std::vector<int> next(ext.begin() + static_cast<std::ptrdiff_t>(i) + 1, ext.end());
      std::vector<int> added;
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (w <= root || in_subset[static_cast<std::size_t>(w)] ||
            banned[static_cast<std::size_t>(w)] || queued[static_cast<std::size_t>(w)])
          continue;
        next.push_back(w);
        queued[static_cast<std::size_t>(w)] = 1;
        added.push_back(w);
      }
      subset.push_back(v);
      in_subset[static_cast<std::size_t>(v)] = 1;
      std::size_t mark = region_tris.size();
      for (Tri tri : feet[static_cast<std::size_t>(v)].tris()) region_tris.push_back(tri);

      grow(root, next);

      region_tris.resize(mark);
      in_subset[static_cast<std::size_t>(v)] = 0;
      subset.pop_back();
      for (int w : added) queued[static_cast<std::size_t>(w)] = 0;
      banned[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 0; i < ext.size(); ++i) banned[static_cast<std::size_t>(ext[i])] = 0;
  };

  for (int root = 0; root < n; ++root) {
    subset = {root};
    in_subset[static_cast<std::size_t>(root)] = 1;
    region_tris.assign(feet[static_cast<std::size_t>(root)].tris().begin(),
                       feet[static_cast<std::size_t>(root)].tris().end());
    std::vector<int> ext;
    for (int w : adj[static_cast<std::size_t>(root)]) {
      if (w > root) {
        ext.push_back(w);
        queued[static_cast<std::size_t>(w)] = 1;
      }
    }
    grow(root, ext);
    for (int w : ext) queued[static_cast<std::size_t>(w)] = 0;
    in_subset[static_cast<std::size_t>(root)] = 0;
  }

  std::sort(results.begin(), results.end(),
            [](const ReversibleRegion& a, const ReversibleRegion& b) {
              if (a.unit_indices != b.unit_indices) return a.unit_indices < b.unit_indices;
              return std::tuple(a.sigma.rot, a.sigma.reflect, a.sigma.shift) <
                     std::tuple(b.sigma.rot, b.sigma.reflect, b.sigma.shift);
            });
  return results;
}

Tiling flip(const Tiling& t, const ReversibleRegion& r) {
  if (t.domain.is_torus())
    throw std::invalid_argument("flip needs a finite tiling; lift the torus first");
  std::set<PentagonPlacement> pentagons;
  for (const UnitPlacement& u : t.units)
    for (const PentagonPlacement& p : u.pentagons()) pentagons.insert(p);
  for (const PentagonPlacement& p : r.filling)
    if (!pentagons.count(p)) throw std::invalid_argument("stale reversible region");
  for (const PentagonPlacement& p : r.filling) pentagons.erase(p);
  for (const PentagonPlacement& p : r.flipped)
    if (!pentagons.insert(p).second) throw std::invalid_argument("stale reversible region");

  std::map<Tri, std::array<std::optional<Lean>, 3>> groups;
  for (const PentagonPlacement& p : pentagons) groups[p.central][p.edge] = p.lean;
  Tiling out;
  out.domain = t.domain;
  for (const auto& [central, leans] : groups) {
    if (!(leans[0] && leans[1] && leans[2]))
      throw std::logic_error("flip left a partially covered central triangle");
    out.units.push_back(assemble_unit(central, {*leans[0], *leans[1], *leans[2]}));
  }
  return out;
}

std::vector<CnShape> cn_shapes(int max_units) {
  std::vector<CnShape> out;
  for (int k = 1;; ++k) {
    std::int64_t tri_area = static_cast<std::int64_t>(k + 2) * (k + 2) - 2;
    if (3 * tri_area > 21LL * max_units) break;
    if ((3 * tri_area) % 7 != 0) continue;

    CnShape shape;
    shape.k = k;
    EPoint p{0, 0};
    auto push = [&shape, &p](EPoint step) {
      shape.outline.push_back(p);
      p = p + step;
    };
    std::int64_t kk = k;
    push({3 * kk, 0});
    push({1, 1});
    push({-1, 2});
    push({-3 * kk, 3 * kk});
    push({-2, 1});
    push({-1, -1});
    push({0, -3 * kk});
    push({1, -2});
    push({2, -1});
    if (!(p == EPoint{0, 0})) throw std::logic_error("nonagon walk did not close");

    // Scale outline to ninths and keep wedges whose interior point is
    // strictly inside.
    std::vector<EPoint> nine;
    for (EPoint v : shape.outline) nine.push_back({3 * v.tp, 3 * v.tq});
    auto strictly_inside = [&nine](EPoint pt) {
      for (std::size_t i = 0; i < nine.size(); ++i) {
        EPoint a = nine[i], b = nine[(i + 1) % nine.size()];
        if (cross(b - a, pt - a) <= 0) return false;
      }
      return true;
    };
    std::int64_t lo_x = -1, hi_x = k + 2, lo_y = -1, hi_y = k + 2;
    for (std::int64_t x = lo_x; x <= hi_x; ++x) {
      for (std::int64_t y = lo_y; y <= hi_y; ++y) {
        for (Orient o : {Orient::U, Orient::D}) {
          for (std::uint8_t e = 0; e < 3; ++e) {
            Wedge w{{x, y, o}, e};
            if (strictly_inside(w.interior_point_times3())) shape.cells.push_back(w);
          }
        }
      }
    }
    std::sort(shape.cells.begin(), shape.cells.end());
    if (shape.cells.size() != static_cast<std::size_t>(3 * tri_area))
      throw std::logic_error("nonagon rasterization mismatch");
    shape.pentagon_capacity = static_cast<int>(shape.cells.size() / 7);
    out.push_back(std::move(shape));
  }
  return out;
}

namespace {

std::vector<Isometry> wedge_self_maps(const std::vector<Wedge>& ws, bool reflective_only) {
  return generic_self_maps(
      ws, [](std::vector<Wedge> v) { return normalize_wedges(std::move(v)); }, reflective_only);
}

// Pentagon placements contained in the sorted wedge set.
std::vector<PentagonPlacement> pentagon_rows(const std::vector<Wedge>& cells) {
  std::set<Tri> tris;
  for (const Wedge& w : cells) tris.insert(w.tri);
  auto inside = [&cells](const Wedge& w) {
    return std::binary_search(cells.begin(), cells.end(), w);
  };
  std::vector<PentagonPlacement> rows;
  for (Tri c : tris) {
    for (std::uint8_t e = 0; e < 3; ++e) {
      for (Lean l : {Lean::L, Lean::R}) {
        PentagonPlacement p{c, e, l};
        bool ok = true;
        for (const Wedge& w : p.wedges()) ok = ok && inside(w);
        if (ok) rows.push_back(p);
      }
    }
  }
  return rows;
}

CnSideCensus side_census(const std::vector<PentagonPlacement>& filling) {
  CnSideCensus cs;
  std::map<Tri, std::vector<PentagonPlacement>> groups;
  for (const PentagonPlacement& p : filling) {
    groups[p.central].push_back(p);
    ++(p.chirality() == Chirality::Anterior ? cs.anterior : cs.posterior);
  }
  for (const auto& [central, ps] : groups) {
    if (ps.size() == 3) {
      std::array<Lean, 3> leans{};
      for (const PentagonPlacement& p : ps) leans[p.edge] = p.lean;
      UnitPlacement u = assemble_unit(central, leans);
      ++(u.kind == UnitKind::Windmill ? cs.complete_windmills : cs.complete_ships);
    } else {
      cs.partial_pentagons += static_cast<int>(ps.size());
    }
  }
  cs.ship_only = cs.complete_windmills == 0 && cs.complete_ships > 0;
  return cs;
}

}  // namespace

std::vector<CnPattern> enumerate_cn_patterns(int max_units) {
  std::vector<CnPattern> out;
  std::set<std::string> seen;

  for (const CnShape& shape : cn_shapes(max_units)) {
    std::map<Wedge, int> col_of;
    for (std::size_t i = 0; i < shape.cells.size(); ++i)
      col_of[shape.cells[i]] = static_cast<int>(i);
    std::vector<PentagonPlacement> rows = pentagon_rows(shape.cells);
    std::vector<std::vector<int>> row_cols;
    row_cols.reserve(rows.size());
    for (const PentagonPlacement& p : rows) {
      std::vector<int> cols;
      for (const Wedge& w : p.wedges()) cols.push_back(col_of.at(w));
      std::sort(cols.begin(), cols.end());
      row_cols.push_back(std::move(cols));
    }

    std::vector<std::vector<PentagonPlacement>> fillings;
    ExactCover cover(static_cast<int>(shape.cells.size()), row_cols);
    cover.search([&](const std::vector<int>& sel) {
      std::vector<PentagonPlacement> f;
      f.reserve(sel.size());
      for (int rdx : sel) f.push_back(rows[static_cast<std::size_t>(rdx)]);
      std::sort(f.begin(), f.end());
      fillings.push_back(std::move(f));
      return true;
    });

    std::vector<Isometry> all_syms = wedge_self_maps(shape.cells, false);
    std::vector<Isometry> sigmas = wedge_self_maps(shape.cells, true);

    for (const auto& filling : fillings) {
      for (const Isometry& sigma : sigmas) {
        std::vector<PentagonPlacement> moved = apply_all(sigma, filling);
        if (moved == filling) continue;

        std::string key;
        for (const Isometry& g : all_syms) {
          std::string ta = filling_text(apply_all(g, filling));
          std::string tb = filling_text(apply_all(g, moved));
          if (tb < ta) std::swap(ta, tb);
          std::string cand = ta + "|" + tb;
          if (key.empty() || cand < key) key = std::move(cand);
        }
        if (!seen.insert(key).second) continue;

        CnPattern pat;
        pat.shape_k = shape.k;
        pat.outline = shape.outline;
        pat.filling_a = filling;
        pat.filling_b = moved;
        if (filling_text(pat.filling_b) < filling_text(pat.filling_a))
          std::swap(pat.filling_a, pat.filling_b);
        pat.sigma = sigma;
        pat.key = key;
        pat.census_a = side_census(pat.filling_a);
        pat.census_b = side_census(pat.filling_b);
        out.push_back(std::move(pat));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CnPattern& a, const CnPattern& b) {
    if (a.shape_k != b.shape_k) return a.shape_k < b.shape_k;
    return a.key < b.key;
  });
  return out;
}

std::vector<ReversibleRegion> find_cn(const Tiling& t, int max_units) {
  require_finite_valid(t, "find_cn");

  std::vector<PentagonPlacement> host_pentagons;
  std::vector<int> owner_unit;
  std::map<Wedge, int> covered_by;
  for (std::size_t i = 0; i < t.units.size(); ++i) {
    for (const PentagonPlacement& p : t.units[i].pentagons()) {
      int idx = static_cast<int>(host_pentagons.size());
      host_pentagons.push_back(p);
      owner_unit.push_back(static_cast<int>(i));
      for (const Wedge& w : p.wedges()) covered_by[w] = idx;
    }
  }

  std::vector<ReversibleRegion> results;
  std::set<std::vector<Wedge>> seen_cells;

  for (const CnShape& shape : cn_shapes(max_units)) {
    // Distinct orientations of the shape under the point group.
    std::vector<std::vector<Wedge>> variants;
    std::set<std::vector<Wedge>> seen_variants;
    for (int m = 0; m < 2; ++m) {
      for (int k = 0; k < 6; ++k) {
        Isometry g{k, m == 1, {}};
        std::vector<Wedge> img;
        img.reserve(shape.cells.size());
        for (const Wedge& w : shape.cells) img.push_back(g.apply(w));
        auto [norm, off] = normalize_wedges(std::move(img));
        if (seen_variants.insert(norm).second) variants.push_back(norm);
      }
    }

    for (const std::vector<Wedge>& variant : variants) {
      Tri ref = variant[0].tri;
      for (const Tri& anchor : t.domain.region()->tris()) {
        if (anchor.o != ref.o) continue;
        EPoint d{3 * (anchor.x - ref.x), 3 * (anchor.y - ref.y)};
        Isometry shift = Isometry::translation(d);
        std::vector<Wedge> cells;
        cells.reserve(variant.size());
        bool inside = true;
        for (const Wedge& w : variant) {
          Wedge placed = shift.apply(w);
          if (!t.domain.region()->contains(placed.tri)) {
            inside = false;
            break;
          }
          cells.push_back(placed);
        }
        if (!inside) continue;
        std::sort(cells.begin(), cells.end());
        if (seen_cells.count(cells)) continue;

        // The host pentagons over these cells must tile them exactly.
        std::set<int> pent_idx;
        for (const Wedge& w : cells) pent_idx.insert(covered_by.at(w));
        if (pent_idx.size() * 7 != cells.size()) continue;
        bool exact = true;
        for (int pi : pent_idx) {
          for (const Wedge& w : host_pentagons[static_cast<std::size_t>(pi)].wedges())
            exact = exact && std::binary_search(cells.begin(), cells.end(), w);
          if (!exact) break;
        }
        if (!exact) continue;
        seen_cells.insert(cells);

        std::vector<PentagonPlacement> filling;
        std::set<int> units_touched;
        for (int pi : pent_idx) {
          filling.push_back(host_pentagons[static_cast<std::size_t>(pi)]);
          units_touched.insert(owner_unit[static_cast<std::size_t>(pi)]);
        }
        std::sort(filling.begin(), filling.end());

        std::set<std::string> seen_flips;
        for (const Isometry& sigma : wedge_self_maps(cells, true)) {
          std::vector<PentagonPlacement> moved = apply_all(sigma, filling);
          if (moved == filling) continue;
          if (!seen_flips.insert(filling_text(moved)).second) continue;
          ReversibleRegion r;
          r.unit_indices = {units_touched.begin(), units_touched.end()};
          r.filling = filling;
          r.flipped = std::move(moved);
          r.cells = cells;
          r.outline = wedge_outline(cells);
          r.sigma = sigma;
          results.push_back(std::move(r));
        }
      }
    }
  }

  std::sort(results.begin(), results.end(),
            [](const ReversibleRegion& a, const ReversibleRegion& b) {
              if (a.cells != b.cells) return a.cells < b.cells;
              return std::tuple(a.sigma.rot, a.sigma.reflect, a.sigma.shift) <
                     std::tuple(b.sigma.rot, b.sigma.reflect, b.sigma.shift);
            });
  return results;
}

Tiling complete_filling(const std::vector<PentagonPlacement>& filling) {
  std::map<Tri, std::array<std::optional<Lean>, 3>> groups;
  for (const PentagonPlacement& p : filling) {
    auto& slot = groups[p.central][p.edge];
    if (slot) throw std::invalid_argument("filling covers an edge twice");
    slot = p.lean;
  }
  std::vector<Tri> centrals;
  std::vector<std::array<std::optional<Lean>, 3>> partial;
  for (auto& [central, leans] : groups) {
    centrals.push_back(central);
    partial.push_back(leans);
  }

  std::vector<UnitPlacement> units(centrals.size());
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == centrals.size()) return true;
    std::array<std::optional<Lean>, 3> leans = partial[i];
    std::vector<int> open;
    for (int e = 0; e < 3; ++e)
      if (!leans[e]) open.push_back(e);
    for (int combo = 0; combo < (1 << open.size()); ++combo) {
      std::array<Lean, 3> full{};
      for (int e = 0; e < 3; ++e) full[e] = leans[e].value_or(Lean::L);
      for (std::size_t b = 0; b < open.size(); ++b)
        full[open[b]] = (combo >> b) & 1 ? Lean::R : Lean::L;
      UnitPlacement u = assemble_unit(centrals[i], full);
      Region foot = u.footprint();
      bool clash = false;
      for (std::size_t j = 0; j < i && !clash; ++j) {
        Region other = units[j].footprint();
        for (Tri tr : other.tris()) clash = clash || foot.contains(tr);
      }
      if (clash) continue;
      units[i] = u;
      if (assign(i + 1)) return true;
    }
    return false;
  };
  if (!assign(0)) throw std::logic_error("filling admits no whole-unit completion");

  std::vector<Tri> tris;
  for (const UnitPlacement& u : units) {
    Region foot = u.footprint();
    for (Tri tr : foot.tris()) tris.push_back(tr);
  }
  return Tiling{Domain::finite(Region(std::move(tris))), units};
}

std::vector<Tiling> flip_walk(const Tiling& t, int steps, std::uint64_t seed, int max_units) {
  if (t.domain.is_torus())
    throw std::invalid_argument("flip_walk needs a finite tiling; lift the torus first");
  std::vector<Tiling> out{t};
  std::mt19937_64 rng(seed);
  std::string previous;
  for (int s = 0; s < steps; ++s) {
    // unit subsets first, convex nonagons after; both lists are sorted
    std::vector<ReversibleRegion> regions = find_reversible(out.back(), max_units);
    std::vector<ReversibleRegion> nonagons = find_cn(out.back(), std::min(max_units, 4));
    regions.insert(regions.end(), std::make_move_iterator(nonagons.begin()),
                   std::make_move_iterator(nonagons.end()));
    if (regions.empty()) break;
    // never undo the flip just made unless it is the only move
    Tiling next = flip(out.back(), regions[rng() % regions.size()]);
    for (int redraw = 0; redraw < 64 && regions.size() > 1; ++redraw) {
      if (serialize_tiling(next) != previous) break;
      next = flip(out.back(), regions[rng() % regions.size()]);
    }
    previous = serialize_tiling(out.back());
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace pentatile
