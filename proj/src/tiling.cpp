#include "pentatile/tiling.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pentatile {

Domain Domain::torus(TorusBasis b) {
  if (b.det() == 0) throw std::invalid_argument("degenerate torus basis");
  return {b};
}

std::size_t Domain::wedge_count() const {
  if (const TorusBasis* b = torus_basis()) return static_cast<std::size_t>(6 * std::abs(b->det()));
  return region()->wedge_count();
}

std::string Violation::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case ViolationKind::Overlap:
      os << "overlap " << wedge->tri.to_string() << "/e" << int(wedge->edge) << " units " << unit_a
         << " " << unit_b;
      break;
    case ViolationKind::Gap:
      os << "gap " << wedge->tri.to_string() << "/e" << int(wedge->edge);
      break;
    case ViolationKind::OutOfDomain:
      os << "out-of-domain unit " << unit_a;
      break;
  }
  return os.str();
}

VerifyResult verify(const Tiling& t) {
  VerifyResult res;
  const TorusBasis* torus = t.domain.torus_basis();
  const Region* region = t.domain.region();

  std::map<Wedge, std::vector<int>> cover;
  for (std::size_t i = 0; i < t.units.size(); ++i) {
    bool inside = true;
    for (const Wedge& w : t.units[i].wedges()) {
      if (torus) {
        cover[torus->reduce(w)].push_back(static_cast<int>(i));
      } else if (region->contains(w.tri)) {
        cover[w].push_back(static_cast<int>(i));
      } else {
        inside = false;
      }
    }
    if (!inside)
      res.violations.push_back({ViolationKind::OutOfDomain, std::nullopt, static_cast<int>(i), -1});
  }

  std::vector<Wedge> domain_wedges;
  if (torus) {
    for (Tri t2 : torus->cell())
      for (std::uint8_t e = 0; e < 3; ++e) domain_wedges.push_back({t2, e});
  } else {
    domain_wedges = region->wedges();
  }
  for (const Wedge& w : domain_wedges) {
    auto it = cover.find(w);
    std::size_t n = it == cover.end() ? 0 : it->second.size();
    if (n == 0) {
      res.violations.push_back({ViolationKind::Gap, w, -1, -1});
    } else if (n > 1) {
      res.violations.push_back({ViolationKind::Overlap, w, it->second[0], it->second[1]});
    }
  }
  return res;
}

std::int64_t TilingStats::unit_total() const {
  return units[0][0] + units[0][1] + units[1][0] + units[1][1];
}

TilingStats stats(const Tiling& t) {
  TilingStats s;
  s.domain_wedges = static_cast<std::int64_t>(t.domain.wedge_count());
  for (const UnitPlacement& u : t.units) {
    ++s.units[static_cast<int>(u.kind)][static_cast<int>(u.chirality)];
    for (Lean l : u.leans()) ++s.pentagons[l == Lean::L ? 0 : 1];
  }
  return s;
}

ParseError::ParseError(int line_, int col_, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " +
                         msg),
      line(line_),
      col(col_) {}

namespace {

struct Token {
  std::string text;
  int col = 0;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::int64_t parse_int(const Token& tok, int line) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok.text, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, tok.col, "expected integer, got '" + tok.text + "'");
  }
  if (pos != tok.text.size())
    throw ParseError(line, tok.col, "expected integer, got '" + tok.text + "'");
  return v;
}

Orient parse_orient(const Token& tok, int line) {
  if (tok.text == "U") return Orient::U;
  if (tok.text == "D") return Orient::D;
  throw ParseError(line, tok.col, "expected U or D, got '" + tok.text + "'");
}

void expect_count(const std::vector<Token>& toks, std::size_t n, int line, const char* what) {
  if (toks.size() != n)
    throw ParseError(line, toks.empty() ? 1 : toks.back().col,
                     std::string("malformed ") + what + " line");
}

std::string unit_line(const UnitPlacement& u) {
  std::ostringstream os;
  os << "unit " << to_string(u.kind) << " " << to_char(u.chirality) << " " << u.anchor.x << " "
     << u.anchor.y << " " << (u.anchor.o == Orient::U ? "U" : "D") << " 0";
  if (u.kind == UnitKind::Ship) os << " " << int(u.spin);
  return os.str();
}

}  // namespace

Tiling parse_tiling(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  std::optional<Domain> domain;
  std::vector<UnitPlacement> units;
  bool saw_header = false;
  bool in_region = false;
  std::vector<Tri> region_tris;

  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<Token> toks = tokenize(raw);
    if (toks.empty()) continue;
    const Token& head = toks[0];

    if (!saw_header) {
      expect_count(toks, 2, lineno, "header");
      if (head.text != "pentatile" || toks[1].text != "1")
        throw ParseError(lineno, head.col, "expected 'pentatile 1' header");
      saw_header = true;
      continue;
    }

    if (in_region) {
      if (head.text == "end") {
        expect_count(toks, 1, lineno, "end");
        domain = Domain::finite(Region(std::move(region_tris)));
        region_tris.clear();
        in_region = false;
      } else if (head.text == "tri") {
        expect_count(toks, 4, lineno, "tri");
        region_tris.push_back(
            {parse_int(toks[1], lineno), parse_int(toks[2], lineno), parse_orient(toks[3], lineno)});
      } else {
        throw ParseError(lineno, head.col, "expected 'tri' or 'end' inside region block");
      }
      continue;
    }

    if (head.text == "domain") {
      if (domain || !region_tris.empty())
        throw ParseError(lineno, head.col, "duplicate domain");
      if (toks.size() >= 2 && toks[1].text == "torus") {
        expect_count(toks, 6, lineno, "domain torus");
        TorusBasis b{parse_int(toks[2], lineno), parse_int(toks[3], lineno),
                     parse_int(toks[4], lineno), parse_int(toks[5], lineno)};
        if (b.det() == 0)
          throw ParseError(lineno, toks[2].col, "torus basis has zero determinant");
        domain = Domain::torus(b);
      } else if (toks.size() >= 2 && toks[1].text == "region") {
        expect_count(toks, 2, lineno, "domain region");
        in_region = true;
      } else {
        throw ParseError(lineno, toks.size() > 1 ? toks[1].col : head.col,
                         "expected 'torus' or 'region'");
      }
      continue;
    }

    if (head.text == "unit") {
      if (!domain) throw ParseError(lineno, head.col, "unit before domain");
      if (toks.size() < 7)
        throw ParseError(lineno, head.col, "malformed unit line");
      UnitPlacement u;
      if (toks[1].text == "windmill") u.kind = UnitKind::Windmill;
      else if (toks[1].text == "ship") u.kind = UnitKind::Ship;
      else throw ParseError(lineno, toks[1].col, "unknown unit kind '" + toks[1].text + "'");
      if (toks[2].text == "A") u.chirality = Chirality::Anterior;
      else if (toks[2].text == "P") u.chirality = Chirality::Posterior;
      else throw ParseError(lineno, toks[2].col, "expected A or P, got '" + toks[2].text + "'");
      u.anchor = {parse_int(toks[3], lineno), parse_int(toks[4], lineno),
                  parse_orient(toks[5], lineno)};
      std::int64_t rot = parse_int(toks[6], lineno);
      if (rot < 0 || rot > 5) throw ParseError(lineno, toks[6].col, "rot must be in 0..5");
      if (u.kind == UnitKind::Ship) {
        expect_count(toks, 8, lineno, "ship unit");
        std::int64_t spin = parse_int(toks[7], lineno);
        if (spin < 0 || spin > 2) throw ParseError(lineno, toks[7].col, "spin must be in 0..2");
        // rot turns the unit's internal edge labels by 120 degree steps.
        u.spin = static_cast<std::uint8_t>((spin + rot) % 3);
      } else {
        expect_count(toks, 7, lineno, "windmill unit");
        u.spin = 0;
      }
      units.push_back(u);
      continue;
    }

    throw ParseError(lineno, head.col, "unknown statement '" + head.text + "'");
  }

  if (!saw_header) throw ParseError(1, 1, "empty input");
  if (in_region) throw ParseError(lineno, 1, "unterminated region block");
  if (!domain) throw ParseError(lineno, 1, "missing domain");
  return Tiling{std::move(*domain), std::move(units)};
}

std::string serialize_tiling(const Tiling& t) {
  std::ostringstream os;
  os << "pentatile 1\n";
  if (const TorusBasis* b = t.domain.torus_basis()) {
    os << "domain torus " << b->v1x << " " << b->v1y << " " << b->v2x << " " << b->v2y << "\n";
  } else {
    os << "domain region\n";
    for (const Tri& tri : t.domain.region()->tris())
      os << "tri " << tri.x << " " << tri.y << " " << (tri.o == Orient::U ? "U" : "D") << "\n";
    os << "end\n";
  }
  std::vector<std::string> lines;
  lines.reserve(t.units.size());
  for (UnitPlacement u : t.units) {
    if (const TorusBasis* b = t.domain.torus_basis()) {
      Tri reduced = b->reduce(u.anchor);
      EPoint d{3 * (reduced.x - u.anchor.x), 3 * (reduced.y - u.anchor.y)};
      u = apply(Isometry::translation(d), u);
    }
    lines.push_back(unit_line(u));
  }
  std::sort(lines.begin(), lines.end());
  for (const std::string& l : lines) os << l << "\n";
  return os.str();
}

Tiling transform(const Tiling& t, const Isometry& g) {
  Tiling out;
  if (const TorusBasis* b = t.domain.torus_basis()) {
    if (!b->point_group_preserves(g))
      throw std::invalid_argument("isometry does not preserve the torus lattice");
    out.domain = t.domain;
  } else {
    Region img = apply(g, *t.domain.region());
    if (!(img == *t.domain.region()))
      throw std::invalid_argument("isometry does not preserve the region");
    out.domain = t.domain;
  }
  out.units.reserve(t.units.size());
  for (const UnitPlacement& u : t.units) out.units.push_back(apply(g, u));
  return out;
}

Tiling lift(const Tiling& t, int m, int n) {
  const TorusBasis* torus = t.domain.torus_basis();
  if (!torus) throw std::invalid_argument("lift expects a torus tiling");
  if (m < 1 || n < 1) throw std::invalid_argument("lift needs positive cell counts");
  // Unroll over the Gauss-reduced basis so the block is compact rather than
  // a Hermite sliver.
  TorusBasis b = torus->reduced();
  Tiling out;
  std::vector<Tri> tris;
  for (const UnitPlacement& u : t.units) {
    UnitPlacement base = u;
    Tri reduced = b.reduce(u.anchor);
    EPoint d{3 * (reduced.x - u.anchor.x), 3 * (reduced.y - u.anchor.y)};
    base = apply(Isometry::translation(d), base);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        EPoint shift{3 * (i * b.v1x + j * b.v2x), 3 * (i * b.v1y + j * b.v2y)};
        UnitPlacement placed = apply(Isometry::translation(shift), base);
        out.units.push_back(placed);
        Region foot = placed.footprint();
        for (Tri tri : foot.tris()) tris.push_back(tri);
      }
    }
  }
  out.domain = Domain::finite(Region(std::move(tris)));
  return out;
}

}  // namespace pentatile
