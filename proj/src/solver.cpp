#include "pentatile/solver.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

namespace pentatile {

ExactCover::ExactCover(int num_columns, const std::vector<std::vector<int>>& rows)
    : cols_(num_columns) {
  std::size_t nodes = static_cast<std::size_t>(cols_) + 1;
  for (const auto& r : rows) nodes += r.size();
  left_.reserve(nodes);
  right_.reserve(nodes);
  up_.reserve(nodes);
  down_.reserve(nodes);
  col_of_.reserve(nodes);
  row_of_.reserve(nodes);

  // Node 0 is the root; nodes 1..cols_ are column headers.
  for (int i = 0; i <= cols_; ++i) {
    left_.push_back(i == 0 ? cols_ : i - 1);
    right_.push_back(i == cols_ ? 0 : i + 1);
    up_.push_back(i);
    down_.push_back(i);
    col_of_.push_back(i);
    row_of_.push_back(-1);
  }
  col_size_.assign(cols_ + 1, 0);
  col_active_.assign(cols_ + 1, 1);

  row_start_.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int first = -1, prev = -1;
    for (int c : rows[r]) {
      if (c < 0 || c >= cols_) throw std::out_of_range("column index");
      int header = c + 1;
      int node = static_cast<int>(left_.size());
      // vertical insertion above the header keeps rows in index order
      up_.push_back(up_[header]);
      down_.push_back(header);
      down_[up_[header]] = node;
      up_[header] = node;
      col_of_.push_back(header);
      row_of_.push_back(static_cast<int>(r));
      ++col_size_[header];
      if (first < 0) {
        left_.push_back(node);
        right_.push_back(node);
        first = node;
      } else {
        left_.push_back(prev);
        right_.push_back(first);
        right_[prev] = node;
        left_[first] = node;
      }
      prev = node;
    }
    row_start_.push_back(first);
  }
}

void ExactCover::cover(int header) {
  col_active_[header] = 0;
  left_[right_[header]] = left_[header];
  right_[left_[header]] = right_[header];
  for (int i = down_[header]; i != header; i = down_[i]) {
    for (int j = right_[i]; j != i; j = right_[j]) {
      up_[down_[j]] = up_[j];
      down_[up_[j]] = down_[j];
      --col_size_[col_of_[j]];
    }
  }
}

void ExactCover::uncover(int header) {
  for (int i = up_[header]; i != header; i = up_[i]) {
    for (int j = left_[i]; j != i; j = left_[j]) {
      ++col_size_[col_of_[j]];
      up_[down_[j]] = j;
      down_[up_[j]] = j;
    }
  }
  left_[right_[header]] = header;
  right_[left_[header]] = header;
  col_active_[header] = 1;
}

bool ExactCover::force_row(int row) {
  int first = row_start_[static_cast<std::size_t>(row)];
  if (first < 0) return false;
  int j = first;
  do {
    if (!col_active_[col_of_[j]]) return false;
    j = right_[j];
  } while (j != first);
  j = first;
  do {
    cover(col_of_[j]);
    j = right_[j];
  } while (j != first);
  forced_.push_back(row);
  return true;
}

bool ExactCover::descend(const std::function<bool(const std::vector<int>&)>& sink) {
  if (right_[0] == 0) {
    std::vector<int> sol = forced_;
    sol.insert(sol.end(), chosen_.begin(), chosen_.end());
    std::sort(sol.begin(), sol.end());
    return sink(sol);
  }
  int best = -1, best_size = -1;
  for (int h = right_[0]; h != 0; h = right_[h]) {
    if (best < 0 || col_size_[h] < best_size) {
      best = h;
      best_size = col_size_[h];
      if (best_size == 0) break;
    }
  }
  if (best_size == 0) return true;
  cover(best);
  for (int i = down_[best]; i != best; i = down_[i]) {
    chosen_.push_back(row_of_[i]);
    for (int j = right_[i]; j != i; j = right_[j]) cover(col_of_[j]);
    bool keep_going = descend(sink);
    for (int j = left_[i]; j != i; j = left_[j]) uncover(col_of_[j]);
    chosen_.pop_back();
    if (!keep_going) {
      uncover(best);
      return false;
    }
  }
  uncover(best);
  return true;
}

bool ExactCover::search(const std::function<bool(const std::vector<int>&)>& sink) {
  return descend(sink);
}

PieceSet PieceSet::all() {
  PieceSet p;
  p.allowed = {{{true, true}, {true, true}}};
  return p;
}

bool PieceSet::empty() const {
  return !(allowed[0][0] || allowed[0][1] || allowed[1][0] || allowed[1][1]);
}

namespace {

// Torus-reduced wedge support of a unit; empty when the placement collides
// with itself around a small torus.
std::vector<int> torus_support(const UnitPlacement& u, const TorusBasis& b,
                               const std::map<Wedge, int>& col_index) {
  std::vector<int> cols;
  cols.reserve(21);
  for (const Wedge& w : u.wedges()) cols.push_back(col_index.at(b.reduce(w)));
  std::sort(cols.begin(), cols.end());
  if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) return {};
  return cols;
}

}  // namespace

CoverInstance build_instance(const Domain& domain, const PieceSet& pieces,
                             const std::vector<UnitPlacement>& fixed) {
  CoverInstance inst;
  inst.domain = domain;

  const TorusBasis* torus = domain.torus_basis();
  std::vector<Tri> anchor_tris = torus ? torus->cell() : domain.region()->tris();
  for (Tri t : anchor_tris)
    for (std::uint8_t e = 0; e < 3; ++e) inst.columns.push_back({t, e});
  std::sort(inst.columns.begin(), inst.columns.end());
  std::map<Wedge, int> col_index;
  for (std::size_t i = 0; i < inst.columns.size(); ++i)
    col_index[inst.columns[i]] = static_cast<int>(i);

  inst.area_satisfiable = inst.columns.size() % 21 == 0;

  std::set<UnitPlacement> wanted;
  for (Tri t : anchor_tris) {
    for (const UnitPlacement& u : units_at(t)) {
      if (pieces.contains(u.kind, u.chirality)) wanted.insert(u);
    }
  }
  for (const UnitPlacement& f : fixed) {
    UnitPlacement u = f;
    if (torus) {
      Tri reduced = torus->reduce(u.anchor);
      EPoint d{3 * (reduced.x - u.anchor.x), 3 * (reduced.y - u.anchor.y)};
      u = apply(Isometry::translation(d), u);
    }
    wanted.insert(u);
  }

  for (const UnitPlacement& u : wanted) {
    std::vector<int> cols;
    if (torus) {
      cols = torus_support(u, *torus, col_index);
      if (cols.empty()) continue;
    } else {
      const Region* region = domain.region();
      bool inside = true;
      Region foot = u.footprint();
      for (Tri t : foot.tris()) inside = inside && region->contains(t);
      if (!inside) continue;
      cols.reserve(21);
      for (const Wedge& w : u.wedges()) cols.push_back(col_index.at(w));
      std::sort(cols.begin(), cols.end());
    }
    inst.rows.push_back(u);
    inst.row_columns.push_back(std::move(cols));
  }

  for (const UnitPlacement& f : fixed) {
    UnitPlacement u = f;
    if (torus) {
      Tri reduced = torus->reduce(u.anchor);
      EPoint d{3 * (reduced.x - u.anchor.x), 3 * (reduced.y - u.anchor.y)};
      u = apply(Isometry::translation(d), u);
    }
    auto it = std::lower_bound(inst.rows.begin(), inst.rows.end(), u);
    if (it == inst.rows.end() || !(*it == u))
      throw std::invalid_argument("fixed placement does not fit the domain");
    inst.forced_rows.push_back(static_cast<int>(it - inst.rows.begin()));
  }
  std::sort(inst.forced_rows.begin(), inst.forced_rows.end());
  inst.forced_rows.erase(std::unique(inst.forced_rows.begin(), inst.forced_rows.end()),
                         inst.forced_rows.end());

  // Fixed placements must not collide with one another.
  std::set<int> used;
  for (int r : inst.forced_rows) {
    for (int c : inst.row_columns[static_cast<std::size_t>(r)])
      if (!used.insert(c).second) throw std::invalid_argument("fixed placements overlap");
  }
  return inst;
}

Tiling tiling_from_rows(const CoverInstance& inst, const std::vector<int>& rows) {
  Tiling t;
  t.domain = inst.domain;
  t.units.reserve(rows.size());
  for (int r : rows) t.units.push_back(inst.rows[static_cast<std::size_t>(r)]);
  return t;
}

namespace {

// Row forced by the symmetry-break flag: the least row covering the least
// column, matching the documented orbit-counting convention.
int symmetry_break_row(const CoverInstance& inst) {
  int best = -1;
  for (std::size_t r = 0; r < inst.rows.size(); ++r) {
    const auto& cols = inst.row_columns[r];
    if (std::find(cols.begin(), cols.end(), 0) == cols.end()) continue;
    if (best < 0) best = static_cast<int>(r);
  }
  return best;
}

struct PreparedSearch {
  ExactCover cover;
  bool feasible;
};

PreparedSearch prepare(const CoverInstance& inst, const SolveOptions& opts,
                       std::optional<int> extra_forced = std::nullopt) {
  PreparedSearch p{ExactCover(static_cast<int>(inst.columns.size()), inst.row_columns), true};
  for (int r : inst.forced_rows) p.feasible = p.feasible && p.cover.force_row(r);
  if (p.feasible && opts.symmetry_break) {
    int r = symmetry_break_row(inst);
    if (r < 0) {
      p.feasible = inst.columns.empty();
    } else if (std::find(inst.forced_rows.begin(), inst.forced_rows.end(), r) ==
               inst.forced_rows.end()) {
      p.feasible = p.cover.force_row(r);
    }
  }
  if (p.feasible && extra_forced) p.feasible = p.cover.force_row(*extra_forced);
  return p;
}

// First-level branch rows under the deterministic column choice, used to
// split counting work across threads.
std::vector<int> root_branches(const CoverInstance& inst, const SolveOptions& opts) {
  std::vector<int> col_count(inst.columns.size(), 0);
  std::vector<char> col_taken(inst.columns.size(), 0);
  std::vector<char> row_dead(inst.rows.size(), 0);
  std::vector<int> forced = inst.forced_rows;
  if (opts.symmetry_break) {
    int r = symmetry_break_row(inst);
    if (r >= 0) forced.push_back(r);
  }
  for (int r : forced)
    for (int c : inst.row_columns[static_cast<std::size_t>(r)]) col_taken[c] = 1;
  for (std::size_t r = 0; r < inst.rows.size(); ++r) {
    for (int c : inst.row_columns[r])
      if (col_taken[c]) row_dead[r] = 1;
    if (std::find(forced.begin(), forced.end(), static_cast<int>(r)) != forced.end())
      row_dead[r] = 1;
    if (!row_dead[r])
      for (int c : inst.row_columns[r]) ++col_count[c];
  }
  int best = -1;
  for (std::size_t c = 0; c < inst.columns.size(); ++c) {
    if (col_taken[c]) continue;
    if (best < 0 || col_count[c] < col_count[static_cast<std::size_t>(best)])
      best = static_cast<int>(c);
  }
  std::vector<int> rows;
  if (best < 0) return rows;
  for (std::size_t r = 0; r < inst.rows.size(); ++r) {
    if (row_dead[r]) continue;
    const auto& cols = inst.row_columns[r];
    if (std::find(cols.begin(), cols.end(), best) != cols.end())
      rows.push_back(static_cast<int>(r));
  }
  return rows;
}

}  // namespace

std::optional<Tiling> solve_first(const CoverInstance& inst, const SolveOptions& opts) {
  if (opts.fast_fail && !inst.area_satisfiable) return std::nullopt;
  std::optional<Tiling> out;
  enumerate_solutions(
      inst, 1,
      [&out](const Tiling& t) {
        out = t;
        return false;
      },
      opts);
  return out;
}

std::int64_t count_solutions(const CoverInstance& inst, const SolveOptions& opts) {
  if (opts.fast_fail && !inst.area_satisfiable) return 0;
  int threads = std::max(1, opts.threads);
  if (threads == 1) {
    PreparedSearch p = prepare(inst, opts);
    if (!p.feasible) return 0;
    std::int64_t n = 0;
    p.cover.search([&n](const std::vector<int>&) {
      ++n;
      return true;
    });
    return n;
  }

  std::vector<int> branches = root_branches(inst, opts);
  if (branches.empty()) {
    // Nothing left to branch on: delegate to the sequential path.
    SolveOptions seq = opts;
    seq.threads = 1;
    return count_solutions(inst, seq);
  }
  std::vector<std::int64_t> partial(branches.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= branches.size()) return;
      PreparedSearch p = prepare(inst, opts, branches[i]);
      if (!p.feasible) continue;
      std::int64_t n = 0;
      p.cover.search([&n](const std::vector<int>&) {
        ++n;
        return true;
      });
      partial[i] = n;
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  std::int64_t total = 0;
  for (std::int64_t n : partial) total += n;
  return total;
}

EnumerateResult enumerate_solutions(const CoverInstance& inst, std::int64_t limit,
                                    const std::function<bool(const Tiling&)>& fn,
                                    const SolveOptions& opts) {
  EnumerateResult res;
  if (opts.fast_fail && !inst.area_satisfiable) {
    res.exhausted = true;
    return res;
  }
  PreparedSearch p = prepare(inst, opts);
  if (!p.feasible) {
    res.exhausted = true;
    return res;
  }
  bool stopped_by_sink = false;
  res.exhausted = p.cover.search([&](const std::vector<int>& rows) {
    if (res.emitted >= limit) return false;
    ++res.emitted;
    if (!fn(tiling_from_rows(inst, rows))) {
      stopped_by_sink = true;
      return false;
    }
    return true;
  });
  if (stopped_by_sink) res.exhausted = false;
  return res;
}

}  // namespace pentatile
