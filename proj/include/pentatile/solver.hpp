#pragma once

#include <functional>
#include <optional>

#include "pentatile/tiling.hpp"

namespace pentatile {

// Dancing-links exact cover over integer columns. Deterministic: columns
// are chosen by fewest remaining candidates with the lowest index breaking
// ties, and rows are tried in insertion order.
class ExactCover {
 public:
  ExactCover(int num_columns, const std::vector<std::vector<int>>& rows);

  // Selects a row up front (it appears in every emitted solution).
  // Returns false when one of its columns is already covered.
  bool force_row(int row);

  // Emits each solution (sorted row indices) until the sink returns false.
  // Returns true when the search space was exhausted.
  bool search(const std::function<bool(const std::vector<int>&)>& sink);

 private:
  void cover(int c);
  void uncover(int c);
  bool descend(const std::function<bool(const std::vector<int>&)>& sink);

  int cols_;
  std::vector<int> left_, right_, up_, down_, col_of_, row_of_;
  std::vector<int> col_size_;
  std::vector<int> row_start_;
  std::vector<char> col_active_;
  std::vector<int> chosen_;
  std::vector<int> forced_;
};

struct PieceSet {
  std::array<std::array<bool, 2>, 2> allowed{};  // [kind][chirality]

  static PieceSet all();
  static PieceSet none() { return {}; }
  PieceSet& add(UnitKind k, Chirality c) {
    allowed[static_cast<int>(k)][static_cast<int>(c)] = true;
    return *this;
  }
  bool contains(UnitKind k, Chirality c) const {
    return allowed[static_cast<int>(k)][static_cast<int>(c)];
  }
  bool empty() const;
};

// Unit-level cover instance: one column per domain wedge, one row per
// candidate placement with its 21-wedge support (torus-reduced). Rows on a
// torus appear once per residue class; rows whose support self-overlaps on
// a small torus are dropped.
struct CoverInstance {
  Domain domain;
  std::vector<Wedge> columns;
  std::vector<UnitPlacement> rows;
  std::vector<std::vector<int>> row_columns;
  std::vector<int> forced_rows;
  bool area_satisfiable = true;
};

// Throws std::invalid_argument when fixed placements conflict or leave the
// domain.
CoverInstance build_instance(const Domain& domain, const PieceSet& pieces,
                             const std::vector<UnitPlacement>& fixed = {});

struct SolveOptions {
  int threads = 1;          // >1 parallelizes counting over first-level branches
  bool symmetry_break = false;  // pin the least row covering the least column
  bool fast_fail = false;       // trust the area test and skip the search
};

std::optional<Tiling> solve_first(const CoverInstance& inst, const SolveOptions& opts = {});

std::int64_t count_solutions(const CoverInstance& inst, const SolveOptions& opts = {});

struct EnumerateResult {
  std::int64_t emitted = 0;
  bool exhausted = false;  // false means the limit cut the stream short
};

// Streams solutions in canonical order; stops after `limit` tilings.
EnumerateResult enumerate_solutions(const CoverInstance& inst, std::int64_t limit,
                                    const std::function<bool(const Tiling&)>& fn,
                                    const SolveOptions& opts = {});

Tiling tiling_from_rows(const CoverInstance& inst, const std::vector<int>& rows);

}  // namespace pentatile
