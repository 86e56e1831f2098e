#pragma once

#include "pentatile/lattice.hpp"

namespace pentatile {

enum class Lean : std::uint8_t { L = 0, R = 1 };
enum class Chirality : std::uint8_t { Anterior = 0, Posterior = 1 };
enum class UnitKind : std::uint8_t { Windmill = 0, Ship = 1 };

inline char to_char(Lean l) { return l == Lean::L ? 'L' : 'R'; }
inline char to_char(Chirality c) { return c == Chirality::Anterior ? 'A' : 'P'; }
inline const char* to_string(UnitKind k) { return k == UnitKind::Windmill ? "windmill" : "ship"; }
inline Chirality opposite(Chirality c) {
  return c == Chirality::Anterior ? Chirality::Posterior : Chirality::Anterior;
}

// One pentagon tile: the wedge of `central` on side `edge` plus the two
// blade triangles hanging off that edge. The tile's 120-degree vertex sits
// at the centroid of `central`. lean picks which far neighbor of blade1
// becomes blade2; anterior pentagons are exactly the lean L ones.
struct PentagonPlacement {
  Tri central;
  std::uint8_t edge = 0;
  Lean lean = Lean::L;
  auto operator<=>(const PentagonPlacement&) const = default;

  Chirality chirality() const {
    return lean == Lean::L ? Chirality::Anterior : Chirality::Posterior;
  }
  Tri blade1() const;
  Tri blade2() const;
  std::array<Wedge, 7> wedges() const;
  // Counterclockwise, starting at the centroid vertex.
  std::vector<EPoint> vertices() const;
};

PentagonPlacement apply(const Isometry& g, const PentagonPlacement& p);

// Exact tile data measured off a placement: interior angles in boundary
// order from the centroid vertex, squared side lengths times 9.
struct THPentagonSpec {
  std::array<int, 5> angles_deg{};
  std::array<std::int64_t, 5> side2_times9{};

  int angle_at_centroid() const { return angles_deg[0]; }
  std::array<int, 5> sorted_angles() const;
  bool three_e_is_360() const { return 3 * angles_deg[0] == 360; }
  // True when two of the other corners complete the centroid angle to 360.
  bool has_vertex_triple_360() const;
};

THPentagonSpec pentagon_spec();

// Three pentagons sharing one central triangle, one per edge; their
// centroid vertices meet at 3 x 120 degrees. Uniform lean means windmill,
// mixed lean means ship with the odd lean on edge `spin`. Chirality
// follows the majority lean (anterior = L).
struct UnitPlacement {
  UnitKind kind = UnitKind::Windmill;
  Chirality chirality = Chirality::Anterior;
  Tri anchor;
  std::uint8_t spin = 0;  // always 0 for windmills
  auto operator<=>(const UnitPlacement&) const = default;

  std::array<Lean, 3> leans() const;
  std::array<PentagonPlacement, 3> pentagons() const;
  Region footprint() const;  // 7 triangles
  std::array<Wedge, 21> wedges() const;
};

UnitPlacement assemble_unit(Tri central, std::array<Lean, 3> leans);
UnitPlacement apply(const Isometry& g, const UnitPlacement& u);

// All eight units anchored on one triangle, in a fixed deterministic order.
std::array<UnitPlacement, 8> units_at(Tri central);

}  // namespace pentatile
