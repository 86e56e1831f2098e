#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "pentatile/pentagon.hpp"
#include "support/oracles.hpp"

using namespace pentatile;
namespace pt = pentatile::testing;

namespace {

Tri U(std::int64_t x, std::int64_t y) { return {x, y, Orient::U}; }
Tri D(std::int64_t x, std::int64_t y) { return {x, y, Orient::D}; }

PentagonPlacement random_pentagon(std::mt19937_64& rng) {
  return {Tri{static_cast<std::int64_t>(rng() % 21) - 10, static_cast<std::int64_t>(rng() % 21) - 10,
              rng() & 1 ? Orient::D : Orient::U},
          static_cast<std::uint8_t>(rng() % 3), rng() & 1 ? Lean::R : Lean::L};
}

}  // namespace

TEST_CASE("pentagon vertices, reference placement") {
  PentagonPlacement p{U(0, 0), 0, Lean::R};
  std::vector<EPoint> v = p.vertices();
  REQUIRE(v.size() == 5);
  CHECK(v[0] == EPoint{1, 1});
  CHECK(v[1] == EPoint{0, 0});
  CHECK(v[2] == EPoint{3, -3});
  CHECK(v[3] == EPoint{6, -3});
  CHECK(v[4] == EPoint{3, 0});

  // the lean L variant is its mirror across the base edge's perpendicular
  // bisector (the vertical through x = 1/2): (tp,tq) -> (3-tp-tq, tq)
  PentagonPlacement q{U(0, 0), 0, Lean::L};
  std::set<EPoint> mirrored;
  for (EPoint e : v) mirrored.insert(EPoint{3 - e.tp - e.tq, e.tq});
  auto qv = q.vertices();
  std::set<EPoint> got(qv.begin(), qv.end());
  CHECK(got == mirrored);
}

TEST_CASE("pentagon blades, reference placement") {
  PentagonPlacement r{U(0, 0), 0, Lean::R};
  CHECK(r.blade1() == D(0, -1));
  CHECK(r.blade2() == U(1, -1));
  PentagonPlacement l{U(0, 0), 0, Lean::L};
  CHECK(l.blade2() == U(0, -1));
}

TEST_CASE("pentagon side lengths are three units and two thirds") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    PentagonPlacement p = random_pentagon(rng);
    std::vector<EPoint> v = p.vertices();
    REQUIRE(v.size() == 5);
    std::multiset<std::int64_t> sides;
    for (int k = 0; k < 5; ++k) sides.insert(norm2_times9(v[(k + 1) % 5] - v[k]));
    CHECK(sides == std::multiset<std::int64_t>{3, 3, 9, 9, 9});
    CHECK(p.wedges().size() == 7);
    auto pw = p.wedges();
    std::set<Wedge> distinct(pw.begin(), pw.end());
    CHECK(distinct.size() == 7);
  }
}

TEST_CASE("tile spec: exact angles and identities") {
  THPentagonSpec spec = pentagon_spec();
  CHECK(spec.angle_at_centroid() == 120);
  CHECK(spec.three_e_is_360());
  CHECK(spec.has_vertex_triple_360());
  CHECK(spec.sorted_angles() == std::array<int, 5>{60, 90, 120, 120, 150});
  std::multiset<std::int64_t> sides(spec.side2_times9.begin(), spec.side2_times9.end());
  CHECK(sides == std::multiset<std::int64_t>{3, 3, 9, 9, 9});
  int total = 0;
  for (int a : spec.angles_deg) total += a;
  CHECK(total == 540);
}

TEST_CASE("pentagon wedge footprints") {
  PentagonPlacement r{U(0, 0), 0, Lean::R};
  auto rw = r.wedges();
  std::set<Wedge> ws(rw.begin(), rw.end());
  std::set<Wedge> expect{Wedge{U(0, 0), 0}, Wedge{D(0, -1), 0}, Wedge{D(0, -1), 1},
                         Wedge{D(0, -1), 2}, Wedge{U(1, -1), 0}, Wedge{U(1, -1), 1},
                         Wedge{U(1, -1), 2}};
  CHECK(ws == expect);
}

TEST_CASE("pentagon polygon area equals seven wedges") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    PentagonPlacement p = random_pentagon(rng);
    CHECK(polygon_cross_sum(p.vertices()) == 7 * 3);
  }
}

TEST_CASE("assembling all eight lean configurations") {
  std::map<Region, std::set<Region>> achiral_to_chiral;
  int windmills = 0, ships = 0;
  for (int bits = 0; bits < 8; ++bits) {
    std::array<Lean, 3> ls;
    for (int e = 0; e < 3; ++e) ls[e] = (bits >> e) & 1 ? Lean::R : Lean::L;
    UnitPlacement u = assemble_unit(U(0, 0), ls);
    CHECK(u.leans() == ls);
    Region foot = u.footprint();
    CHECK(foot.size() == 7);
    achiral_to_chiral[canonical_region_achiral(foot)].insert(canonical_region(foot));
    (u.kind == UnitKind::Windmill ? windmills : ships) += 1;
  }
  CHECK(windmills == 2);
  CHECK(ships == 6);
  // two free shapes, each in two chiral forms
  CHECK(achiral_to_chiral.size() == 2);
  for (const auto& [key, chiral] : achiral_to_chiral) CHECK(chiral.size() == 2);
}

TEST_CASE("mixed-lean assemblies are rotations of one ship") {
  std::set<Region> keys;
  for (std::uint8_t spin = 0; spin < 3; ++spin) {
    UnitPlacement u{UnitKind::Ship, Chirality::Posterior, U(0, 0), spin};
    keys.insert(canonical_region(u.footprint()));
  }
  CHECK(keys.size() == 1);
}

TEST_CASE("windmill has C3 symmetry about its centroid, ship does not") {
  EPoint c = U(0, 0).centroid();
  Isometry rot120 = Isometry::translation(c - c.rot60().rot60()) * Isometry::rotation(2);
  CHECK(rot120.apply(c) == c);

  UnitPlacement wm{UnitKind::Windmill, Chirality::Anterior, U(0, 0), 0};
  CHECK(apply(rot120, wm) == wm);

  UnitPlacement ship{UnitKind::Ship, Chirality::Anterior, U(0, 0), 0};
  UnitPlacement turned = apply(rot120, ship);
  CHECK(turned != ship);
  CHECK(turned.anchor == ship.anchor);
  CHECK(turned.kind == UnitKind::Ship);
  CHECK(turned.chirality == ship.chirality);
  CHECK(turned.spin == (ship.spin + 1) % 3);
}

TEST_CASE("three pentagons meet at the centroid with 360 degrees") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    Tri anchor{static_cast<std::int64_t>(rng() % 11) - 5, static_cast<std::int64_t>(rng() % 11) - 5,
               rng() & 1 ? Orient::D : Orient::U};
    for (const UnitPlacement& u : units_at(anchor)) {
      int total = 0;
      for (const PentagonPlacement& p : u.pentagons()) {
        std::vector<EPoint> v = p.vertices();
        CHECK(v[0] == anchor.centroid());
        total += angle_ccw_deg(v[1] - v[0], v[4] - v[0]);
      }
      CHECK(total == 360);
      CHECK(u.footprint().size() == 7);
      auto uw = u.wedges();
      std::set<Wedge> ws(uw.begin(), uw.end());
      CHECK(ws.size() == 21);
    }
  }
}

TEST_CASE("reflection swaps chirality and preserves the free shape") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    Isometry mirror = pt::random_isometry(rng);
    mirror.reflect = true;
    Tri anchor{static_cast<std::int64_t>(rng() % 11) - 5, static_cast<std::int64_t>(rng() % 11) - 5,
               rng() & 1 ? Orient::D : Orient::U};
    for (const UnitPlacement& u : units_at(anchor)) {
      UnitPlacement m = apply(mirror, u);
      CHECK(m.kind == u.kind);
      CHECK(m.chirality == opposite(u.chirality));
      CHECK(canonical_region_achiral(m.footprint()) == canonical_region_achiral(u.footprint()));
      CHECK(canonical_region(m.footprint()) != canonical_region(u.footprint()));
    }
  }
}

TEST_CASE("pentagon transport is consistent with wedge transport") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    PentagonPlacement p = random_pentagon(rng);
    Isometry g = pt::random_isometry(rng);
    PentagonPlacement q = apply(g, p);
    std::set<Wedge> moved;
    for (const Wedge& w : p.wedges()) moved.insert(g.apply(w));
    auto qw = q.wedges();
    std::set<Wedge> direct(qw.begin(), qw.end());
    CHECK(moved == direct);
    CHECK(apply(g.inverse(), q) == p);
  }
}
