#pragma once

#include <optional>
#include <variant>

#include "pentatile/pentagon.hpp"

namespace pentatile {

// Where a tiling lives: a finite region or a torus quotient.
struct Domain {
  std::variant<Region, TorusBasis> value;

  static Domain finite(Region r) { return {std::move(r)}; }
  static Domain torus(TorusBasis b);

  bool is_torus() const { return std::holds_alternative<TorusBasis>(value); }
  const Region* region() const { return std::get_if<Region>(&value); }
  const TorusBasis* torus_basis() const { return std::get_if<TorusBasis>(&value); }
  std::size_t wedge_count() const;
  auto operator<=>(const Domain&) const = default;
};

struct Tiling {
  Domain domain;
  std::vector<UnitPlacement> units;
};

enum class ViolationKind : std::uint8_t { Overlap, Gap, OutOfDomain };

struct Violation {
  ViolationKind kind;
  std::optional<Wedge> wedge;  // absent for OutOfDomain
  int unit_a = -1;
  int unit_b = -1;
  std::string to_string() const;
};

struct VerifyResult {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

// Exact coverage check: every domain wedge covered exactly once and, on
// finite domains, no unit sticking out. Violations are data, not errors.
VerifyResult verify(const Tiling& t);

struct TilingStats {
  // Indexed [kind][chirality] and [chirality].
  std::array<std::array<std::int64_t, 2>, 2> units{};
  std::array<std::int64_t, 2> pentagons{};
  std::int64_t domain_wedges = 0;

  std::int64_t unit_total() const;
  std::int64_t unit_count(UnitKind k, Chirality c) const {
    return units[static_cast<int>(k)][static_cast<int>(c)];
  }
  std::int64_t pentagon_count(Chirality c) const { return pentagons[static_cast<int>(c)]; }
};

TilingStats stats(const Tiling& t);

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& msg);
  int line;
  int col;
};

// Plain text interchange format, one statement per line:
//   pentatile 1
//   domain torus <v1x> <v1y> <v2x> <v2y>
//   domain region / tri <x> <y> <U|D> ... / end
//   unit <windmill|ship> <A|P> <x> <y> <U|D> <rot 0-5> [spin 0-2]
// '#' starts a comment. The serializer is canonical: torus anchors are
// reduced into the fundamental cell, rot is emitted as 0 (its value
// advances a ship's spin by rot mod 3) and unit lines are sorted.
Tiling parse_tiling(const std::string& text);
std::string serialize_tiling(const Tiling& t);

// Applies g to every placement. g must map the domain to itself: a finite
// region must be invariant, a torus basis lattice must be normalized by
// the point part. Throws std::invalid_argument otherwise.
Tiling transform(const Tiling& t, const Isometry& g);

// Unrolls m x n fundamental cells of a torus tiling into a finite tiling
// whose region is exactly the union of the lifted unit footprints.
Tiling lift(const Tiling& t, int m = 3, int n = 3);

}  // namespace pentatile
