#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pentatile {

// Exact point on the unit triangular lattice, stored as thirds of
// Eisenstein coordinates: cartesian x = (tp + tq/2)/3, y = tq*sqrt(3)/6.
// Lattice vertices have tp = tq = 0 (mod 3); triangle centroids fall on
// the residue classes (1,1) and (2,2). No operation ever rounds.
struct EPoint {
  std::int64_t tp = 0;
  std::int64_t tq = 0;

  friend EPoint operator+(EPoint a, EPoint b) { return {a.tp + b.tp, a.tq + b.tq}; }
  friend EPoint operator-(EPoint a, EPoint b) { return {a.tp - b.tp, a.tq - b.tq}; }
  EPoint operator-() const { return {-tp, -tq}; }
  auto operator<=>(const EPoint&) const = default;

  bool is_lattice_vertex() const;
  bool is_centroid() const;

  // 60 degree counterclockwise rotation about the origin.
  EPoint rot60() const { return {-tq, tp + tq}; }
  // Mirror across the x axis.
  EPoint mirror_x() const { return {tp + tq, -tq}; }
};

// Squared euclidean length times 9 (squared distances have denominator 9).
std::int64_t norm2_times9(EPoint p);

// z component of the cartesian cross product, times 18/sqrt(3).
inline std::int64_t cross(EPoint a, EPoint b) { return a.tp * b.tq - a.tq * b.tp; }

// Counterclockwise angle from u to v in degrees. Every angle between
// substrate directions (lattice edges, vertex-centroid segments) is a
// multiple of 30; anything else throws.
int angle_ccw_deg(EPoint u, EPoint v);

enum class Orient : std::uint8_t { U = 0, D = 1 };

// One cell of the triangular grid. The vertex order is frozen:
//   (x,y,U) -> (x,y), (x+1,y), (x,y+1)        in Eisenstein units
//   (x,y,D) -> (x+1,y), (x,y+1), (x+1,y+1)
// and edge e joins vertex e to vertex e+1 (mod 3).
struct Tri {
  std::int64_t x = 0;
  std::int64_t y = 0;
  Orient o = Orient::U;
  auto operator<=>(const Tri&) const = default;

  std::array<EPoint, 3> vertices() const;
  EPoint centroid() const;
  Tri neighbor(int edge) const;
  static Tri from_centroid(EPoint c);

  std::string to_string() const;
};

// One third of a triangle: the sub-triangle spanned by edge `edge` and the
// centroid. Wedges are the cells of every exact coverage test.
struct Wedge {
  Tri tri;
  std::uint8_t edge = 0;
  auto operator<=>(const Wedge&) const = default;

  // v_edge, v_edge+1, centroid
  std::array<EPoint, 3> corners() const;
  EPoint interior_point_times3() const;  // corner average, in ninths
};

// x -> R^rot(M^reflect x) + shift, with R the 60 degree rotation and M the
// x-axis mirror. shift must be a lattice vector.
struct Isometry {
  int rot = 0;
  bool reflect = false;
  EPoint shift{};

  static Isometry identity() { return {}; }
  static Isometry rotation(int k) { return {((k % 6) + 6) % 6, false, {}}; }
  static Isometry reflection() { return {0, true, {}}; }
  static Isometry translation(EPoint v);

  bool orientation_reversing() const { return reflect; }

  EPoint linear(EPoint p) const;  // rotation/mirror part only
  EPoint apply(EPoint p) const { return linear(p) + shift; }
  Tri apply(Tri t) const { return Tri::from_centroid(apply(t.centroid())); }
  Wedge apply(Wedge w) const;

  // (a * b) means apply b first, then a.
  friend Isometry operator*(const Isometry& a, const Isometry& b);
  Isometry inverse() const;
  auto operator<=>(const Isometry&) const = default;
};

// Finite set of triangles, sorted and deduplicated on construction.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<Tri> tris);

  const std::vector<Tri>& tris() const { return tris_; }
  bool contains(Tri t) const;
  bool empty() const { return tris_.empty(); }
  std::size_t size() const { return tris_.size(); }
  bool connected() const;
  std::size_t wedge_count() const { return 3 * tris_.size(); }
  std::vector<Wedge> wedges() const;

  auto operator<=>(const Region&) const = default;
  std::string to_string() const;

 private:
  std::vector<Tri> tris_;
};

Region apply(const Isometry& g, const Region& r);

// Canonical representative of a region's congruence class: the
// lexicographically least translated triangle list over the chosen point
// group. canonical_region uses the 6 rotations only, so a chiral shape and
// its mirror get distinct keys; canonical_region_achiral adds the 6
// reflections and identifies them.
Region canonical_region(const Region& r);
Region canonical_region_achiral(const Region& r);

// All free n-triangle shapes (canonical achiral forms, sorted). 1 <= n <= 9.
std::vector<Region> enumerate_polyiamonds(int n);

// Translation lattice spanned by v1, v2 (Eisenstein units). The quotient
// holds exactly 2*|det| triangles.
struct TorusBasis {
  std::int64_t v1x = 1, v1y = 0, v2x = 0, v2y = 1;
  auto operator<=>(const TorusBasis&) const = default;

  std::int64_t det() const { return v1x * v2y - v1y * v2x; }
  // Gauss-reduced basis of the same lattice (shortest vector pair).
  TorusBasis reduced() const;
  Tri reduce(Tri t) const;
  Wedge reduce(Wedge w) const { return {reduce(w.tri), w.edge}; }
  std::vector<Tri> cell() const;  // canonical representatives, sorted
  bool lattice_contains(std::int64_t ex, std::int64_t ey) const;
  // True when the rotation/mirror part of g maps the lattice to itself.
  bool point_group_preserves(const Isometry& g) const;
};

struct OutlineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Counterclockwise boundary polygon, collinear points elided, rotated so
// the least vertex comes first. Throws OutlineError unless the union is
// simply connected (single boundary cycle, no pinch points).
std::vector<EPoint> region_outline(const Region& r);
std::vector<EPoint> wedge_outline(const std::vector<Wedge>& ws);

// Shoelace sum of cross() around the polygon. Positive for counter-
// clockwise order; one unit triangle contributes exactly 9.
std::int64_t polygon_cross_sum(const std::vector<EPoint>& poly);

struct ConvexityReport {
  bool convex = false;
  int strict_vertices = 0;
};

// Exact convexity test for a simple polygon; counts vertices with a
// nonzero turn. Throws std::invalid_argument on degenerate input.
ConvexityReport is_convex(const std::vector<EPoint>& poly);

}  // namespace pentatile
