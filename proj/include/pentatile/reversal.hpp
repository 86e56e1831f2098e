#pragma once

#include "pentatile/solver.hpp"

namespace pentatile {

// A sub-assembly that can be replaced by its own mirror image: sigma is an
// orientation-reversing isometry that fixes the covered cells while moving
// the filling. Flipping swaps `filling` for `flipped`.
struct ReversibleRegion {
  std::vector<int> unit_indices;  // host units owning the filling pentagons
  std::vector<PentagonPlacement> filling;
  std::vector<PentagonPlacement> flipped;  // sigma(filling), != filling
  std::vector<Wedge> cells;                // covered wedges, sorted
  std::vector<EPoint> outline;
  Isometry sigma;
};

// All isometries mapping the triangle set onto itself (any point part,
// any translation).
std::vector<Isometry> self_maps(const Region& r);

// Connected whole-unit subsets of size <= max_units whose simply connected
// footprint admits a reflective self-map that moves the unit set. The
// tiling must be finite and valid.
std::vector<ReversibleRegion> find_reversible(const Tiling& t, int max_units = 6);

// Convex-nonagon sub-assemblies detected at pentagon resolution: regions
// bounded by a convex nine-vertex outline whose pentagons lie entirely
// inside and can be reflected in place. max_units bounds the filling size
// at 3*max_units pentagons.
std::vector<ReversibleRegion> find_cn(const Tiling& t, int max_units = 4);

// Replaces the region's pentagons by their sigma images and regroups the
// result into units. Throws std::invalid_argument when the region does not
// match the tiling (stale region).
Tiling flip(const Tiling& t, const ReversibleRegion& r);

// One convex-nonagon shape of the rigid family: three lattice runs of
// length k alternating with three centroid notches. Only k = 1 and 2 fall
// within reachable filling sizes (3 and 6 pentagons).
struct CnShape {
  int k = 1;
  std::vector<EPoint> outline;
  std::vector<Wedge> cells;
  int pentagon_capacity = 0;
};

// Shapes whose capacity fits within max_units units' worth of pentagons.
std::vector<CnShape> cn_shapes(int max_units);

struct CnSideCensus {
  int complete_windmills = 0;
  int complete_ships = 0;
  int partial_pentagons = 0;  // pentagons whose unit continues outside
  int anterior = 0;
  int posterior = 0;
  bool ship_only = false;  // complete units exist and none is a windmill
};

struct CnPattern {
  int shape_k = 1;
  std::vector<EPoint> outline;
  std::vector<PentagonPlacement> filling_a;
  std::vector<PentagonPlacement> filling_b;
  Isometry sigma;
  std::string key;
  CnSideCensus census_a;
  CnSideCensus census_b;

  bool ship_only_both() const { return census_a.ship_only && census_b.ship_only; }
};

// Free-standing pattern census: every pentagon tiling pair (S, sigma S) of
// a convex-nonagon shape, deduplicated up to isometry. Deterministic order.
std::vector<CnPattern> enumerate_cn_patterns(int max_units = 4);

// Extends a pattern side to whole units (the loose boundary pentagons get
// completed outward); the result is a valid finite patch tiling.
Tiling complete_filling(const std::vector<PentagonPlacement>& filling);

// Seeded random walk: at every step detect reversible unit subsets plus
// convex-nonagon regions and flip one of them. Returns steps+1 tilings
// (fewer when nothing is reversible).
std::vector<Tiling> flip_walk(const Tiling& t, int steps, std::uint64_t seed, int max_units = 6);

}  // namespace pentatile
