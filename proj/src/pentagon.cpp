#include "pentatile/pentagon.hpp"

#include <algorithm>

namespace pentatile {

namespace {

int back_edge(Tri blade, Tri central) {
  for (int k = 0; k < 3; ++k)
    if (blade.neighbor(k) == central) return k;
  throw std::logic_error("triangles are not adjacent");
}

}  // namespace

Tri PentagonPlacement::blade1() const { return central.neighbor(edge); }

Tri PentagonPlacement::blade2() const {
  // lean is a chirality bit: walk the centroids central -> blade1 ->
  // candidate and pick by turn direction (R turns left, L turns right).
  Tri b1 = blade1();
  int k = back_edge(b1, central);
  EPoint c0 = central.centroid(), c1 = b1.centroid();
  for (int step = 1; step <= 2; ++step) {
    Tri cand = b1.neighbor((k + step) % 3);
    std::int64_t turn = cross(c1 - c0, cand.centroid() - c1);
    if ((turn > 0) == (lean == Lean::R)) return cand;
  }
  throw std::logic_error("blade selection failed");
}

std::array<Wedge, 7> PentagonPlacement::wedges() const {
  Tri b1 = blade1(), b2 = blade2();
  return {Wedge{central, edge}, Wedge{b1, 0}, Wedge{b1, 1}, Wedge{b1, 2},
          Wedge{b2, 0},         Wedge{b2, 1}, Wedge{b2, 2}};
}

std::vector<EPoint> PentagonPlacement::vertices() const {
  auto ws = wedges();
  std::vector<EPoint> poly = wedge_outline({ws.begin(), ws.end()});
  auto e = std::find(poly.begin(), poly.end(), central.centroid());
  if (e == poly.end()) throw std::logic_error("pentagon lost its centroid vertex");
  std::rotate(poly.begin(), e, poly.end());
  return poly;
}

PentagonPlacement apply(const Isometry& g, const PentagonPlacement& p) {
  Wedge w = g.apply(Wedge{p.central, p.edge});
  PentagonPlacement out{w.tri, w.edge, Lean::L};
  if (out.blade2() == g.apply(p.blade2())) return out;
  out.lean = Lean::R;
  if (out.blade2() != g.apply(p.blade2())) throw std::logic_error("pentagon image inconsistent");
  return out;
}

THPentagonSpec pentagon_spec() {
  PentagonPlacement p{Tri{0, 0, Orient::U}, 0, Lean::R};
  std::vector<EPoint> v = p.vertices();
  THPentagonSpec spec;
  std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    EPoint prev = v[(i + n - 1) % n], cur = v[i], next = v[(i + 1) % n];
    spec.angles_deg[i] = angle_ccw_deg(next - cur, prev - cur);
    spec.side2_times9[i] = norm2_times9(next - cur);
  }
  return spec;
}

std::array<int, 5> THPentagonSpec::sorted_angles() const {
  std::array<int, 5> a = angles_deg;
  std::sort(a.begin(), a.end());
  return a;
}

bool THPentagonSpec::has_vertex_triple_360() const {
  for (int i = 1; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (angles_deg[i] + angles_deg[j] + angles_deg[0] == 360) return true;
  return false;
}

std::array<Lean, 3> UnitPlacement::leans() const {
  Lean major = chirality == Chirality::Anterior ? Lean::L : Lean::R;
  Lean minor = major == Lean::L ? Lean::R : Lean::L;
  std::array<Lean, 3> ls{major, major, major};
  if (kind == UnitKind::Ship) ls[spin] = minor;
  return ls;
}

std::array<PentagonPlacement, 3> UnitPlacement::pentagons() const {
  auto ls = leans();
  return {PentagonPlacement{anchor, 0, ls[0]}, PentagonPlacement{anchor, 1, ls[1]},
          PentagonPlacement{anchor, 2, ls[2]}};
}

Region UnitPlacement::footprint() const {
  std::vector<Tri> tris{anchor};
  for (const PentagonPlacement& p : pentagons()) {
    tris.push_back(p.blade1());
    tris.push_back(p.blade2());
  }
  Region r(std::move(tris));
  if (r.size() != 7) throw std::logic_error("unit footprint collision");
  return r;
}

std::array<Wedge, 21> UnitPlacement::wedges() const {
  std::array<Wedge, 21> out;
  std::size_t i = 0;
  for (const PentagonPlacement& p : pentagons())
    for (const Wedge& w : p.wedges()) out[i++] = w;
  return out;
}

UnitPlacement assemble_unit(Tri central, std::array<Lean, 3> leans) {
  UnitPlacement u;
  u.anchor = central;
  if (leans[0] == leans[1] && leans[1] == leans[2]) {
    u.kind = UnitKind::Windmill;
    u.chirality = leans[0] == Lean::L ? Chirality::Anterior : Chirality::Posterior;
    u.spin = 0;
  } else {
    u.kind = UnitKind::Ship;
    int odd = leans[0] == leans[1] ? 2 : (leans[0] == leans[2] ? 1 : 0);
    u.spin = static_cast<std::uint8_t>(odd);
    u.chirality = leans[odd] == Lean::R ? Chirality::Anterior : Chirality::Posterior;
  }
  return u;
}

UnitPlacement apply(const Isometry& g, const UnitPlacement& u) {
  std::array<Lean, 3> leans{};
  Tri central = g.apply(u.anchor);
  for (const PentagonPlacement& p : u.pentagons()) {
    PentagonPlacement q = apply(g, p);
    if (q.central != central) throw std::logic_error("unit image inconsistent");
    leans[q.edge] = q.lean;
  }
  return assemble_unit(central, leans);
}

std::array<UnitPlacement, 8> units_at(Tri central) {
  std::array<UnitPlacement, 8> out;
  std::size_t i = 0;
  for (int bits = 0; bits < 8; ++bits) {
    std::array<Lean, 3> ls;
    for (int e = 0; e < 3; ++e) ls[e] = (bits >> e) & 1 ? Lean::R : Lean::L;
    out[i++] = assemble_unit(central, ls);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pentatile
