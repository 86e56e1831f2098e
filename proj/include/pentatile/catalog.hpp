#pragma once

#include "pentatile/solver.hpp"

namespace pentatile {

// All index-`det` sublattices in Hermite normal form: v1=(a,0), v2=(c,d),
// a*d = det, 0 <= c < a. One basis per translation class.
std::vector<TorusBasis> hermite_bases(std::int64_t det);

// Canonical text key for a set of placements up to translation and the
// chosen point group (6 rotations, 12 with reflections).
std::string canonical_units_key(std::vector<UnitPlacement> units, bool with_reflections);

// Least serialization over all automorphisms of the torus (point parts
// normalizing the lattice composed with cell translations).
std::string torus_canonical_text(const Tiling& t);

bool placements_equal_mod(const UnitPlacement& a, const UnitPlacement& b, const TorusBasis& basis);

enum class PairSymmetry : std::uint8_t { Rotational, Crooked, Other };

inline const char* to_string(PairSymmetry s) {
  switch (s) {
    case PairSymmetry::Rotational: return "rotational";
    case PairSymmetry::Crooked: return "crooked";
    default: return "other";
  }
}

// A connected two-ship patch whose isometric copies tile a torus. Patches
// that are translation fundamental domains (index-7 lattices) are flagged;
// the orientation-reversing classes only tile through glide copies and
// first appear at determinant 14.
struct PairClass {
  std::string key;  // isometry-canonical placement key
  std::array<UnitPlacement, 2> units;
  Region patch;  // 14 triangles
  PairSymmetry symmetry = PairSymmetry::Other;
  bool translation_fundamental = false;
  Tiling witness;  // torus tiling by copies of the patch
};

std::vector<PairClass> find_pair_classes(std::int64_t max_abs_det = 14);

// Six units forming one 60-degree rotation orbit about a lattice vertex,
// pairwise disjoint with simply connected union.
struct FlowerAssembly {
  std::array<UnitPlacement, 6> units;
  Region outline_region;  // 42 triangles
  std::optional<Tiling> lattice_tiling;  // present when translates tile a torus
};

std::vector<FlowerAssembly> find_flowers(UnitKind kind, int radius = 4);

enum class FamilyLabel : std::uint8_t {
  WindmillOnly,
  ShipOnly,
  Mixed,
  FlowerTiling,
  PairStripe,
  Rice1995Like,
};

const char* to_string(FamilyLabel label);

struct FamilyTag {
  FamilyLabel label;
  std::string note;
};

struct PeriodicEntry {
  TorusBasis basis;
  Tiling tiling;
  std::vector<FamilyTag> tags;
};

struct PeriodicFilters {
  bool require_uniform_chirality = false;
  bool require_c2_pair = false;
};

// Census of small periodic tilings: every Hermite basis with |det| up to
// the bound, solutions deduplicated up to torus automorphisms.
std::vector<PeriodicEntry> enumerate_periodic(const PieceSet& pieces, std::int64_t max_abs_det,
                                              const PeriodicFilters& filters = {},
                                              std::int64_t per_basis_limit = 100000);

std::vector<FamilyTag> family_tags(const Tiling& t);

// Stored witnesses reproduced deterministically by the searches above.
std::vector<std::string> preset_names();
Tiling preset(const std::string& name);

}  // namespace pentatile
