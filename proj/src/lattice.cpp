#include "pentatile/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pentatile {

namespace {

std::int64_t mod3(std::int64_t v) { return ((v % 3) + 3) % 3; }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

bool EPoint::is_lattice_vertex() const { return mod3(tp) == 0 && mod3(tq) == 0; }

bool EPoint::is_centroid() const {
  std::int64_t a = mod3(tp);
  return a != 0 && a == mod3(tq);
}

std::int64_t norm2_times9(EPoint p) { return p.tp * p.tp + p.tp * p.tq + p.tq * p.tq; }

int angle_ccw_deg(EPoint u, EPoint v) {
  if ((u.tp == 0 && u.tq == 0) || (v.tp == 0 && v.tq == 0))
    throw std::domain_error("angle of zero vector");
  // dot*18 and cross*18/sqrt(3); tan(theta) = sqrt(3)*c/d.
  std::int64_t d = 2 * u.tp * v.tp + u.tp * v.tq + u.tq * v.tp + 2 * u.tq * v.tq;
  std::int64_t c = cross(u, v);
  if (c == 0) {
    if (d > 0) return 0;
    return 180;
  }
  std::int64_t a = c > 0 ? c : -c;
  int deg;
  if (d == 3 * a) deg = 30;
  else if (d == a) deg = 60;
  else if (d == 0) deg = 90;
  else if (d == -a) deg = 120;
  else if (d == -3 * a) deg = 150;
  else throw std::domain_error("angle not a multiple of 30 degrees");
  return c > 0 ? deg : 360 - deg;
}

std::array<EPoint, 3> Tri::vertices() const {
  std::int64_t px = 3 * x, py = 3 * y;
  if (o == Orient::U)
    return {EPoint{px, py}, EPoint{px + 3, py}, EPoint{px, py + 3}};
  return {EPoint{px + 3, py}, EPoint{px, py + 3}, EPoint{px + 3, py + 3}};
}

EPoint Tri::centroid() const {
  std::int64_t k = (o == Orient::U) ? 1 : 2;
  return {3 * x + k, 3 * y + k};
}

Tri Tri::neighbor(int edge) const {
  switch (edge) {
    case 0: return o == Orient::U ? Tri{x, y - 1, Orient::D} : Tri{x, y, Orient::U};
    case 1: return o == Orient::U ? Tri{x, y, Orient::D} : Tri{x, y + 1, Orient::U};
    case 2: return o == Orient::U ? Tri{x - 1, y, Orient::D} : Tri{x + 1, y, Orient::U};
    default: throw std::out_of_range("edge index");
  }
}

Tri Tri::from_centroid(EPoint c) {
  std::int64_t r = mod3(c.tp);
  if (r == 0 || r != mod3(c.tq)) throw std::invalid_argument("not a centroid");
  return {(c.tp - r) / 3, (c.tq - r) / 3, r == 1 ? Orient::U : Orient::D};
}

std::string Tri::to_string() const {
  return (o == Orient::U ? "U" : "D") + std::to_string(x) + "," + std::to_string(y);
}

std::array<EPoint, 3> Wedge::corners() const {
  auto v = tri.vertices();
  return {v[edge], v[(edge + 1) % 3], tri.centroid()};
}

EPoint Wedge::interior_point_times3() const {
  auto c = corners();
  return {c[0].tp + c[1].tp + c[2].tp, c[0].tq + c[1].tq + c[2].tq};
}

Isometry Isometry::translation(EPoint v) {
  if (!v.is_lattice_vertex()) throw std::invalid_argument("shift must be a lattice vector");
  return {0, false, v};
}

EPoint Isometry::linear(EPoint p) const {
  if (reflect) p = p.mirror_x();
  for (int i = 0; i < rot; ++i) p = p.rot60();
  return p;
}

Wedge Isometry::apply(Wedge w) const {
  Tri t = apply(w.tri);
  auto c = w.corners();
  EPoint a = apply(c[0]), b = apply(c[1]);
  auto v = t.vertices();
  for (int e = 0; e < 3; ++e) {
    EPoint p = v[e], q = v[(e + 1) % 3];
    if ((p == a && q == b) || (p == b && q == a)) return {t, static_cast<std::uint8_t>(e)};
  }
  throw std::logic_error("wedge image inconsistent");
}

Isometry operator*(const Isometry& a, const Isometry& b) {
  Isometry r;
  r.reflect = a.reflect != b.reflect;
  r.rot = ((a.reflect ? a.rot - b.rot : a.rot + b.rot) % 6 + 6) % 6;
  r.shift = a.apply(b.shift);
  return r;
}

Isometry Isometry::inverse() const {
  Isometry r;
  r.reflect = reflect;
  r.rot = reflect ? rot : (6 - rot) % 6;
  r.shift = -r.linear(shift);
  return r;
}

Region::Region(std::vector<Tri> tris) : tris_(std::move(tris)) {
  std::sort(tris_.begin(), tris_.end());
  tris_.erase(std::unique(tris_.begin(), tris_.end()), tris_.end());
}

bool Region::contains(Tri t) const {
  return std::binary_search(tris_.begin(), tris_.end(), t);
}

bool Region::connected() const {
  if (tris_.empty()) return true;
  std::vector<bool> seen(tris_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t visited = 1;
  while (!stack.empty()) {
    Tri t = tris_[stack.back()];
    stack.pop_back();
    for (int e = 0; e < 3; ++e) {
      auto it = std::lower_bound(tris_.begin(), tris_.end(), t.neighbor(e));
      if (it != tris_.end() && *it == t.neighbor(e)) {
        std::size_t i = static_cast<std::size_t>(it - tris_.begin());
        if (!seen[i]) {
          seen[i] = true;
          ++visited;
          stack.push_back(i);
        }
      }
    }
  }
  return visited == tris_.size();
}

std::vector<Wedge> Region::wedges() const {
  std::vector<Wedge> out;
  out.reserve(3 * tris_.size());
  for (Tri t : tris_)
    for (std::uint8_t e = 0; e < 3; ++e) out.push_back({t, e});
  return out;
}

std::string Region::to_string() const {
  std::string s;
  for (const Tri& t : tris_) {
    if (!s.empty()) s += ';';
    s += t.to_string();
  }
  return s;
}

Region apply(const Isometry& g, const Region& r) {
  std::vector<Tri> out;
  out.reserve(r.size());
  for (Tri t : r.tris()) out.push_back(g.apply(t));
  return Region(std::move(out));
}

namespace {

std::vector<Tri> translate_normalized(std::vector<Tri> ts) {
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
}

Region canonical_form(const Region& r, bool with_reflections) {
  if (r.empty()) return r;
  std::vector<Tri> best;
  for (int m = 0; m < (with_reflections ? 2 : 1); ++m) {
    for (int k = 0; k < 6; ++k) {
      Isometry g{k, m == 1, {}};
      std::vector<Tri> img;
      img.reserve(r.size());
      for (Tri t : r.tris()) img.push_back(g.apply(t));
      img = translate_normalized(std::move(img));
      if (best.empty() || img < best) best = std::move(img);
    }
  }
  return Region(std::move(best));
}

}  // namespace

Region canonical_region(const Region& r) { return canonical_form(r, false); }

Region canonical_region_achiral(const Region& r) { return canonical_form(r, true); }

std::vector<Region> enumerate_polyiamonds(int n) {
  if (n < 1 || n > 9) throw std::out_of_range("polyiamond size must be in 1..9");
  std::set<Region> level{canonical_region_achiral(Region({Tri{0, 0, Orient::U}}))};
  for (int size = 1; size < n; ++size) {
    std::set<Region> next;
    for (const Region& r : level) {
      for (Tri t : r.tris()) {
        for (int e = 0; e < 3; ++e) {
          Tri nb = t.neighbor(e);
          if (r.contains(nb)) continue;
          std::vector<Tri> grown = r.tris();
          grown.push_back(nb);
          next.insert(canonical_region_achiral(Region(std::move(grown))));
        }
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

TorusBasis TorusBasis::reduced() const {
  if (det() == 0) throw std::invalid_argument("degenerate torus basis");
  EPoint a{v1x, v1y}, b{v2x, v2y};
  auto dot2 = [](EPoint u, EPoint v) {
    return 2 * u.tp * v.tp + u.tp * v.tq + u.tq * v.tp + 2 * u.tq * v.tq;
  };
  for (;;) {
    if (norm2_times9(b) < norm2_times9(a)) std::swap(a, b);
    std::int64_t num = dot2(a, b);
    std::int64_t den = 2 * norm2_times9(a);
    std::int64_t mu = floor_div(2 * num + den, 2 * den);  // nearest integer
    if (mu == 0) break;
    b = b - EPoint{mu * a.tp, mu * a.tq};
  }
  TorusBasis out{a.tp, a.tq, b.tp, b.tq};
  if ((out.det() > 0) != (det() > 0)) out = {a.tp, a.tq, -b.tp, -b.tq};
  return out;
}

Tri TorusBasis::reduce(Tri t) const {
  std::int64_t d = det();
  if (d == 0) throw std::invalid_argument("degenerate torus basis");
  std::int64_t alpha = floor_div(t.x * v2y - t.y * v2x, d);
  std::int64_t beta = floor_div(t.y * v1x - t.x * v1y, d);
  return {t.x - alpha * v1x - beta * v2x, t.y - alpha * v1y - beta * v2y, t.o};
}

std::vector<Tri> TorusBasis::cell() const {
  std::int64_t d = det();
  if (d == 0) throw std::invalid_argument("degenerate torus basis");
  std::int64_t bound = std::abs(v1x) + std::abs(v2x) + std::abs(v1y) + std::abs(v2y);
  std::set<Tri> reps;
  for (std::int64_t x = -bound; x <= bound; ++x)
    for (std::int64_t y = -bound; y <= bound; ++y)
      for (Orient o : {Orient::U, Orient::D}) reps.insert(reduce(Tri{x, y, o}));
  std::vector<Tri> out(reps.begin(), reps.end());
  if (out.size() != static_cast<std::size_t>(2 * std::abs(d)))
    throw std::logic_error("torus cell census mismatch");
  return out;
}

bool TorusBasis::lattice_contains(std::int64_t ex, std::int64_t ey) const {
  std::int64_t d = det();
  return (ex * v2y - ey * v2x) % d == 0 && (ey * v1x - ex * v1y) % d == 0;
}

bool TorusBasis::point_group_preserves(const Isometry& g) const {
  Isometry lin{g.rot, g.reflect, {}};
  EPoint a = lin.apply(EPoint{3 * v1x, 3 * v1y});
  EPoint b = lin.apply(EPoint{3 * v2x, 3 * v2y});
  return lattice_contains(a.tp / 3, a.tq / 3) && lattice_contains(b.tp / 3, b.tq / 3);
}

namespace {

std::vector<EPoint> trace_boundary(std::map<std::pair<EPoint, EPoint>, int>& edges) {
  // edges holds directed segments with interior on the left; opposite
  // pairs have already cancelled.
  std::map<EPoint, std::vector<EPoint>> out_of;
  std::size_t total = 0;
  for (const auto& [seg, cnt] : edges) {
    if (cnt == 0) continue;
    if (cnt != 1) throw OutlineError("boundary segment covered twice");
    out_of[seg.first].push_back(seg.second);
    ++total;
  }
  if (total == 0) throw OutlineError("empty region");
  for (const auto& [v, outs] : out_of)
    if (outs.size() != 1) throw OutlineError("region is not simply connected");

  EPoint start = out_of.begin()->first;
  std::vector<EPoint> cycle;
  EPoint cur = start;
  do {
    cycle.push_back(cur);
    cur = out_of.at(cur)[0];
    if (cycle.size() > total) throw OutlineError("boundary walk failed");
  } while (!(cur == start));
  if (cycle.size() != total) throw OutlineError("region is disconnected or has holes");
  return cycle;
}

std::vector<EPoint> finish_outline(std::vector<EPoint> cycle) {
  std::vector<EPoint> poly;
  std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) {
    EPoint prev = cycle[(i + n - 1) % n], cur = cycle[i], next = cycle[(i + 1) % n];
    if (cross(cur - prev, next - cur) != 0) poly.push_back(cur);
  }
  auto least = std::min_element(poly.begin(), poly.end());
  std::rotate(poly.begin(), least, poly.end());
  return poly;
}

}  // namespace

std::vector<EPoint> wedge_outline(const std::vector<Wedge>& ws) {
  std::map<std::pair<EPoint, EPoint>, int> edges;
  auto add = [&edges](EPoint a, EPoint b) {
    auto rev = edges.find({b, a});
    if (rev != edges.end() && rev->second > 0) {
      --rev->second;
    } else {
      ++edges[{a, b}];
    }
  };
  for (const Wedge& w : ws) {
    auto c = w.corners();
    bool ccw = cross(c[1] - c[0], c[2] - c[0]) > 0;
    if (ccw) {
      add(c[0], c[1]);
      add(c[1], c[2]);
      add(c[2], c[0]);
    } else {
      add(c[0], c[2]);
      add(c[2], c[1]);
      add(c[1], c[0]);
    }
  }
  return finish_outline(trace_boundary(edges));
}

std::vector<EPoint> region_outline(const Region& r) { return wedge_outline(r.wedges()); }

std::int64_t polygon_cross_sum(const std::vector<EPoint>& poly) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const EPoint& a = poly[i];
    const EPoint& b = poly[(i + 1) % poly.size()];
    sum += cross(a, b);
  }
  return sum;
}

ConvexityReport is_convex(const std::vector<EPoint>& poly) {
  if (poly.size() < 3) throw std::invalid_argument("degenerate polygon");
  std::size_t n = poly.size();
  std::int64_t orient = polygon_cross_sum(poly);
  if (orient == 0) throw std::invalid_argument("degenerate polygon");
  ConvexityReport rep;
  rep.convex = true;
  for (std::size_t i = 0; i < n; ++i) {
    EPoint a = poly[(i + n - 1) % n], b = poly[i], c = poly[(i + 1) % n];
    if (b - a == EPoint{} || c - b == EPoint{}) throw std::invalid_argument("degenerate polygon");
    std::int64_t turn = cross(b - a, c - b);
    if (turn != 0) ++rep.strict_vertices;
    if ((orient > 0 && turn < 0) || (orient < 0 && turn > 0)) rep.convex = false;
  }
  return rep;
}

}  // namespace pentatile
