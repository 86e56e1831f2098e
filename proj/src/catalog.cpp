#include "pentatile/catalog.hpp"

#include "pentatile/reversal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace pentatile {

std::vector<TorusBasis> hermite_bases(std::int64_t det) {
  std::vector<TorusBasis> out;
  for (std::int64_t a = 1; a <= det; ++a) {
    if (det % a != 0) continue;
    std::int64_t d = det / a;
    for (std::int64_t c = 0; c < a; ++c) out.push_back({a, 0, c, d});
  }
  return out;
}

namespace {

std::string unit_text(const UnitPlacement& u) {
  std::ostringstream os;
  os << to_string(u.kind) << " " << to_char(u.chirality) << " " << u.anchor.x << " " << u.anchor.y
     << " " << (u.anchor.o == Orient::U ? "U" : "D") << " " << int(u.spin);
  return os.str();
}

std::string normalized_units_text(std::vector<UnitPlacement> us) {
  std::int64_t mx = us[0].anchor.x, my = us[0].anchor.y;
  for (const UnitPlacement& u : us) {
    mx = std::min(mx, u.anchor.x);
    my = std::min(my, u.anchor.y);
  }
  for (UnitPlacement& u : us) {
    u.anchor.x -= mx;
    u.anchor.y -= my;
  }
  std::sort(us.begin(), us.end());
  std::string out;
  for (const UnitPlacement& u : us) {
    out += unit_text(u);
    out += '\n';
  }
  return out;
}

UnitPlacement translated(const UnitPlacement& u, std::int64_t ex, std::int64_t ey) {
  UnitPlacement v = u;
  v.anchor.x += ex;
  v.anchor.y += ey;
  return v;
}

bool regions_disjoint(const Region& a, const Region& b) {
  for (Tri t : a.tris())
    if (b.contains(t)) return false;
  return true;
}

Region region_union(const Region& a, const Region& b) {
  std::vector<Tri> ts = a.tris();
  ts.insert(ts.end(), b.tris().begin(), b.tris().end());
  return Region(std::move(ts));
}

std::optional<TorusBasis> translation_tiling_basis(const Region& patch) {
  if (patch.size() % 2 != 0) return std::nullopt;
  std::int64_t det = static_cast<std::int64_t>(patch.size() / 2);
  for (const TorusBasis& b : hermite_bases(det)) {
    std::set<Tri> residues;
    for (Tri t : patch.tris()) residues.insert(b.reduce(t));
    if (residues.size() == patch.size()) return b;
  }
  return std::nullopt;
}

// Isometry with the given point part sending a onto b exactly, if any.
std::optional<Isometry> match_with_point_part(const Isometry& part, const UnitPlacement& a,
                                              const UnitPlacement& b) {
  UnitPlacement img = apply(part, a);
  if (img.anchor.o != b.anchor.o) return std::nullopt;
  EPoint d{3 * (b.anchor.x - img.anchor.x), 3 * (b.anchor.y - img.anchor.y)};
  Isometry g = Isometry::translation(d) * part;
  if (apply(g, a) == b) return g;
  return std::nullopt;
}

std::optional<Isometry> c2_swap(const UnitPlacement& a, const UnitPlacement& b) {
  auto g = match_with_point_part(Isometry::rotation(3), a, b);
  if (g && apply(*g, b) == a) return g;
  return std::nullopt;
}

std::optional<Isometry> reflection_swap(const UnitPlacement& a, const UnitPlacement& b) {
  for (int k = 0; k < 6; ++k) {
    Isometry part{k, true, {}};
    auto g = match_with_point_part(part, a, b);
    if (g && apply(*g, b) == a) return g;
  }
  return std::nullopt;
}

bool adjacent_disjoint(const Region& a, const Region& b) {
  if (!regions_disjoint(a, b)) return false;
  Region u = region_union(a, b);
  return u.connected();
}

}  // namespace

std::string canonical_units_key(std::vector<UnitPlacement> units, bool with_reflections) {
  if (units.empty()) return {};
  std::string best;
  for (int m = 0; m < (with_reflections ? 2 : 1); ++m) {
    for (int k = 0; k < 6; ++k) {
      Isometry g{k, m == 1, {}};
      std::vector<UnitPlacement> img;
      img.reserve(units.size());
      for (const UnitPlacement& u : units) img.push_back(apply(g, u));
      std::string text = normalized_units_text(std::move(img));
      if (best.empty() || text < best) best = std::move(text);
    }
  }
  return best;
}

std::string torus_canonical_text(const Tiling& t) {
  const TorusBasis* b = t.domain.torus_basis();
  if (!b) return serialize_tiling(t);
  std::string best;
  for (int m = 0; m < 2; ++m) {
    for (int k = 0; k < 6; ++k) {
      Isometry part{k, m == 1, {}};
      if (!b->point_group_preserves(part)) continue;
      for (Tri rep : b->cell()) {
        if (rep.o != Orient::U) continue;
        Isometry g = Isometry::translation({3 * rep.x, 3 * rep.y}) * part;
        std::string text = serialize_tiling(transform(t, g));
        if (best.empty() || text < best) best = std::move(text);
      }
    }
  }
  return best;
}

bool placements_equal_mod(const UnitPlacement& a, const UnitPlacement& b,
                          const TorusBasis& basis) {
  return a.kind == b.kind && a.chirality == b.chirality && a.spin == b.spin &&
         a.anchor.o == b.anchor.o &&
         basis.lattice_contains(a.anchor.x - b.anchor.x, a.anchor.y - b.anchor.y);
}

namespace {

// Torus tiling by isometric copies of the two-unit patch, if any exists up
// to the determinant bound.
std::optional<Tiling> patch_copy_tiling(const std::array<UnitPlacement, 2>& pair,
                                        std::int64_t max_abs_det) {
  for (std::int64_t det = 7; det <= max_abs_det; det += 7) {
    for (const TorusBasis& b : hermite_bases(det)) {
      std::vector<Tri> cell = b.cell();
      std::map<Wedge, int> idx;
      int cols = 0;
      for (Tri t : cell)
        for (std::uint8_t e = 0; e < 3; ++e) idx[Wedge{t, e}] = cols++;
      std::vector<std::array<UnitPlacement, 2>> row_units;
      std::vector<std::vector<int>> rows;
      std::set<std::vector<int>> seen;
      for (int m = 0; m < 2; ++m) {
        for (int r = 0; r < 6; ++r) {
          Isometry part{r, m == 1, {}};
          for (Tri t : cell) {
            if (t.o != Orient::U) continue;
            Isometry g = Isometry::translation({3 * t.x, 3 * t.y}) * part;
            std::set<int> support;
            bool ok = true;
            std::array<UnitPlacement, 2> us{apply(g, pair[0]), apply(g, pair[1])};
            for (const UnitPlacement& u : us)
              for (const Wedge& w : u.wedges()) ok = ok && support.insert(idx.at(b.reduce(w))).second;
            if (!ok) continue;
            std::vector<int> row(support.begin(), support.end());
            if (!seen.insert(row).second) continue;
            rows.push_back(std::move(row));
            row_units.push_back(us);
          }
        }
      }
      ExactCover cover(cols, rows);
      std::optional<Tiling> found;
      cover.search([&](const std::vector<int>& sel) {
        Tiling t;
        t.domain = Domain::torus(b);
        for (int rdx : sel)
          for (const UnitPlacement& u : row_units[static_cast<std::size_t>(rdx)])
            t.units.push_back(u);
        found = std::move(t);
        return false;
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<PairClass> find_pair_classes(std::int64_t max_abs_det) {
  std::map<std::string, PairClass> classes;
  for (const UnitPlacement& s1 : units_at(Tri{0, 0, Orient::U})) {
    if (s1.kind != UnitKind::Ship) continue;
    Region f1 = s1.footprint();
    for (std::int64_t x = -4; x <= 4; ++x) {
      for (std::int64_t y = -4; y <= 4; ++y) {
        for (Orient o : {Orient::U, Orient::D}) {
          for (const UnitPlacement& s2 : units_at(Tri{x, y, o})) {
            if (s2.kind != UnitKind::Ship || s2 == s1) continue;
            Region f2 = s2.footprint();
            if (!adjacent_disjoint(f1, f2)) continue;
            Region patch = region_union(f1, f2);
            std::string key = canonical_units_key({s1, s2}, true);
            if (classes.count(key)) continue;

            PairClass pc;
            pc.key = key;
            pc.units = {s1, s2};
            pc.patch = patch;
            if (auto basis = translation_tiling_basis(patch)) {
              pc.translation_fundamental = true;
              pc.witness = Tiling{Domain::torus(*basis), {s1, s2}};
            } else if (auto witness = patch_copy_tiling({s1, s2}, max_abs_det)) {
              pc.witness = std::move(*witness);
            } else {
              continue;
            }
            if (c2_swap(s1, s2))
              pc.symmetry = PairSymmetry::Rotational;
            else if (reflection_swap(s1, s2))
              pc.symmetry = PairSymmetry::Crooked;
            else
              pc.symmetry = PairSymmetry::Other;
            classes.emplace(std::move(key), std::move(pc));
          }
        }
      }
    }
  }
  std::vector<PairClass> out;
  out.reserve(classes.size());
  for (auto& [key, pc] : classes) out.push_back(std::move(pc));
  return out;
}

std::vector<FlowerAssembly> find_flowers(UnitKind kind, int radius) {
  std::vector<FlowerAssembly> out;
  for (std::int64_t x = -radius; x <= radius; ++x) {
    for (std::int64_t y = -radius; y <= radius; ++y) {
      for (Orient o : {Orient::U, Orient::D}) {
        for (const UnitPlacement& u : units_at(Tri{x, y, o})) {
          if (u.kind != kind) continue;
          std::array<UnitPlacement, 6> orbit;
          orbit[0] = u;
          bool base_is_least = true;
          for (int k = 1; k < 6; ++k) {
            orbit[k] = apply(Isometry::rotation(k), u);
            base_is_least = base_is_least && !(orbit[k] < u);
          }
          if (!base_is_least) continue;

          std::vector<Tri> tris;
          bool disjoint = true;
          std::vector<Region> feet;
          for (const UnitPlacement& v : orbit) feet.push_back(v.footprint());
          for (int i = 0; i < 6 && disjoint; ++i)
            for (int j = i + 1; j < 6 && disjoint; ++j)
              disjoint = regions_disjoint(feet[i], feet[j]);
          if (!disjoint) continue;
          for (const Region& f : feet)
            tris.insert(tris.end(), f.tris().begin(), f.tris().end());
          Region u6(std::move(tris));
          try {
            region_outline(u6);
          } catch (const OutlineError&) {
            continue;
          }
          FlowerAssembly fl;
          std::sort(orbit.begin(), orbit.end());
          fl.units = orbit;
          fl.outline_region = u6;
          if (auto basis = translation_tiling_basis(u6)) {
            fl.lattice_tiling =
                Tiling{Domain::torus(*basis), {orbit.begin(), orbit.end()}};
          }
          out.push_back(std::move(fl));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const FlowerAssembly& a, const FlowerAssembly& b) {
    return a.units < b.units;
  });
  return out;
}

const char* to_string(FamilyLabel label) {
  switch (label) {
    case FamilyLabel::WindmillOnly: return "windmill-only";
    case FamilyLabel::ShipOnly: return "ship-only";
    case FamilyLabel::Mixed: return "mixed";
    case FamilyLabel::FlowerTiling: return "flower-tiling";
    case FamilyLabel::PairStripe: return "pair-stripe";
    case FamilyLabel::Rice1995Like: return "rice1995-like";
  }
  return "?";
}

namespace {

// True when some plane lift of b forms a connected rotational pair with a.
bool c2_adjacent_mod(const UnitPlacement& a, const UnitPlacement& b, const TorusBasis& basis) {
  Region fa = a.footprint();
  for (std::int64_t i = -2; i <= 2; ++i) {
    for (std::int64_t j = -2; j <= 2; ++j) {
      UnitPlacement bb = translated(b, i * basis.v1x + j * basis.v2x, i * basis.v1y + j * basis.v2y);
      if (!c2_swap(a, bb)) continue;
      if (adjacent_disjoint(fa, bb.footprint())) return true;
    }
  }
  return false;
}

bool splits_into_c2_pairs(const std::vector<UnitPlacement>& units, const TorusBasis& basis) {
  if (units.size() % 2 != 0) return false;
  std::vector<int> todo(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) todo[i] = static_cast<int>(i);
  // Greedy matching with backtracking over the 15-or-fewer pairings.
  std::function<bool(std::vector<int>&)> rec = [&](std::vector<int>& rest) {
    if (rest.empty()) return true;
    int first = rest[0];
    for (std::size_t k = 1; k < rest.size(); ++k) {
      if (!c2_adjacent_mod(units[first], units[rest[k]], basis)) continue;
      std::vector<int> next;
      for (std::size_t m = 1; m < rest.size(); ++m)
        if (m != k) next.push_back(rest[m]);
      if (rec(next)) return true;
    }
    return false;
  };
  return rec(todo);
}

bool is_flower_tiling(const Tiling& t, const TorusBasis& basis) {
  if (t.units.size() != 6) return false;
  for (Tri rep : basis.cell()) {
    if (rep.o != Orient::U) continue;
    EPoint c{3 * rep.x, 3 * rep.y};
    Isometry g = Isometry::translation(c - c.rot60()) * Isometry::rotation(1);
    bool closed = true;
    for (const UnitPlacement& u : t.units) {
      UnitPlacement img = apply(g, u);
      bool found = false;
      for (const UnitPlacement& v : t.units) found = found || placements_equal_mod(img, v, basis);
      closed = closed && found;
    }
    if (closed) return true;
  }
  return false;
}

}  // namespace

std::vector<FamilyTag> family_tags(const Tiling& t) {
  std::vector<FamilyTag> tags;
  TilingStats s = stats(t);
  std::int64_t windmills = s.unit_count(UnitKind::Windmill, Chirality::Anterior) +
                           s.unit_count(UnitKind::Windmill, Chirality::Posterior);
  std::int64_t ships = s.unit_count(UnitKind::Ship, Chirality::Anterior) +
                       s.unit_count(UnitKind::Ship, Chirality::Posterior);
  if (windmills > 0 && ships == 0)
    tags.push_back({FamilyLabel::WindmillOnly, "no ship units"});
  else if (ships > 0 && windmills == 0)
    tags.push_back({FamilyLabel::ShipOnly, "no windmill units"});
  else if (ships > 0 && windmills > 0)
    tags.push_back({FamilyLabel::Mixed, "both unit kinds"});

  const TorusBasis* basis = t.domain.torus_basis();
  if (!basis) return tags;
  if (t.units.size() == 2 && ships == 2 &&
      c2_adjacent_mod(t.units[0], t.units[1], *basis))
    tags.push_back({FamilyLabel::PairStripe, "cell is one rotational pair"});
  if (ships == 6 && windmills == 0 && splits_into_c2_pairs(t.units, *basis))
    tags.push_back({FamilyLabel::Rice1995Like, "cell splits into three rotational pairs"});
  if (is_flower_tiling(t, *basis))
    tags.push_back({FamilyLabel::FlowerTiling, "cell is one 60-degree unit orbit"});
  return tags;
}

std::vector<PeriodicEntry> enumerate_periodic(const PieceSet& pieces, std::int64_t max_abs_det,
                                              const PeriodicFilters& filters,
                                              std::int64_t per_basis_limit) {
  std::vector<PeriodicEntry> out;
  for (std::int64_t det = 7; det <= max_abs_det; det += 7) {
    for (const TorusBasis& basis : hermite_bases(det)) {
      CoverInstance inst = build_instance(Domain::torus(basis), pieces);
      std::set<std::string> seen;
      enumerate_solutions(inst, per_basis_limit, [&](const Tiling& t) {
        TilingStats s = stats(t);
        if (filters.require_uniform_chirality) {
          bool uniform = (s.unit_count(UnitKind::Windmill, Chirality::Anterior) +
                              s.unit_count(UnitKind::Ship, Chirality::Anterior) ==
                          0) ||
                         (s.unit_count(UnitKind::Windmill, Chirality::Posterior) +
                              s.unit_count(UnitKind::Ship, Chirality::Posterior) ==
                          0);
          if (!uniform) return true;
        }
        std::vector<FamilyTag> tags = family_tags(t);
        if (filters.require_c2_pair) {
          bool has = false;
          for (std::size_t i = 0; i < t.units.size() && !has; ++i)
            for (std::size_t j = i + 1; j < t.units.size() && !has; ++j)
              has = c2_adjacent_mod(t.units[i], t.units[j], basis);
          if (!has) return true;
        }
        if (!seen.insert(torus_canonical_text(t)).second) return true;
        out.push_back({basis, t, std::move(tags)});
        return true;
      });
    }
  }
  return out;
}

std::vector<std::string> preset_names() {
  return {"windmill-min", "rice1995-like", "flower-lattice"};
}

namespace {

Tiling make_windmill_min() {
  PieceSet pieces;
  pieces.add(UnitKind::Windmill, Chirality::Anterior).add(UnitKind::Windmill, Chirality::Posterior);
  for (std::int64_t det = 7; det <= 42; det += 7) {
    for (const TorusBasis& basis : hermite_bases(det)) {
      CoverInstance inst = build_instance(Domain::torus(basis), pieces);
      if (auto t = solve_first(inst)) return *t;
    }
  }
  throw std::logic_error("no windmill-only torus tiling in the sweep range");
}

Tiling make_rice1995_like() {
  PieceSet pieces;
  pieces.add(UnitKind::Ship, Chirality::Anterior).add(UnitKind::Ship, Chirality::Posterior);
  std::optional<Tiling> fallback;
  for (const TorusBasis& basis : hermite_bases(21)) {
    CoverInstance inst = build_instance(Domain::torus(basis), pieces);
    std::optional<Tiling> found;
    enumerate_solutions(inst, 1000000, [&](const Tiling& t) {
      if (!splits_into_c2_pairs(t.units, basis)) return true;
      if (!fallback) fallback = t;
      // prefer a witness carrying reversible convex nonagons
      if (!find_cn(lift(t, 3, 3), 4).empty()) {
        found = t;
        return false;
      }
      return true;
    });
    if (found) return *found;
  }
  if (fallback) return *fallback;
  throw std::logic_error("no three-pair ship tiling at determinant 21");
}

Tiling make_flower_lattice() {
  for (const FlowerAssembly& f : find_flowers(UnitKind::Ship)) {
    if (f.lattice_tiling) return *f.lattice_tiling;
  }
  throw std::logic_error("no ship flower tiles a torus in the search radius");
}

}  // namespace

Tiling preset(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, Tiling> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;

  Tiling t;
  if (name == "windmill-min") t = make_windmill_min();
  else if (name == "rice1995-like") t = make_rice1995_like();
  else if (name == "flower-lattice") t = make_flower_lattice();
  else throw std::out_of_range("unknown preset '" + name + "'");
  cache.emplace(name, t);
  return t;
}

}  // namespace pentatile
