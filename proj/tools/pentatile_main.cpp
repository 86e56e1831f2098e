#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pentatile/catalog.hpp"
#include "pentatile/render.hpp"
#include "pentatile/reversal.hpp"
#include "pentatile/solver.hpp"

namespace {

using namespace pentatile;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::vector<std::int64_t> split_ints(const std::string& s) {
  std::vector<std::int64_t> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stoll(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

Region parse_region_file(const std::string& path) {
  std::string text = read_file(path);
  if (text.rfind("pentatile", 0) == 0) {
    Tiling t = parse_tiling(text);
    if (t.domain.is_torus()) throw std::runtime_error(path + " holds a torus domain, not a region");
    return *t.domain.region();
  }
  std::vector<Tri> tris;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line.substr(0, line.find('#')));
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "end") break;
    if (head != "tri") throw ParseError(lineno, 1, "expected 'tri <x> <y> <U|D>'");
    std::int64_t x, y;
    std::string o;
    if (!(ls >> x >> y >> o) || (o != "U" && o != "D"))
      throw ParseError(lineno, 1, "expected 'tri <x> <y> <U|D>'");
    tris.push_back({x, y, o == "U" ? Orient::U : Orient::D});
  }
  return Region(std::move(tris));
}

Domain parse_domain_spec(const std::string& spec) {
  if (spec.rfind("torus:", 0) == 0) {
    std::vector<std::int64_t> v = split_ints(spec.substr(6));
    if (v.size() != 4) throw std::runtime_error("torus domain needs v1x,v1y,v2x,v2y");
    return Domain::torus({v[0], v[1], v[2], v[3]});
  }
  if (spec.rfind("region:@", 0) == 0) return Domain::finite(parse_region_file(spec.substr(8)));
  throw std::runtime_error("domain must be torus:<v1x,v1y,v2x,v2y> or region:@<file>");
}

PieceSet parse_pieces(const std::string& spec) {
  if (spec == "all") return PieceSet::all();
  PieceSet out;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto colon = item.find(':');
    std::string kind = item.substr(0, colon);
    std::string chi = colon == std::string::npos ? "" : item.substr(colon + 1);
    UnitKind k;
    if (kind == "windmill") k = UnitKind::Windmill;
    else if (kind == "ship") k = UnitKind::Ship;
    else throw std::runtime_error("unknown piece '" + item + "'");
    if (chi == "A") out.add(k, Chirality::Anterior);
    else if (chi == "P") out.add(k, Chirality::Posterior);
    else if (chi.empty()) out.add(k, Chirality::Anterior).add(k, Chirality::Posterior);
    else throw std::runtime_error("piece chirality must be A or P in '" + item + "'");
  }
  if (out.empty()) throw std::runtime_error("empty piece set");
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Tiling load_tiling(const std::string& path) { return parse_tiling(read_file(path)); }

Tiling finite_view(const Tiling& t, std::ostream& log) {
  if (!t.domain.is_torus()) return t;
  log << "# torus input lifted to a 3x3 block\n";
  return lift(t, 3, 3);
}

std::string describe_region(std::size_t idx, const ReversibleRegion& r) {
  std::ostringstream os;
  os << "region " << idx << ": pentagons=" << r.filling.size() << " units=[";
  for (std::size_t i = 0; i < r.unit_indices.size(); ++i)
    os << (i ? "," : "") << r.unit_indices[i];
  os << "] sigma=rot" << r.sigma.rot << (r.sigma.reflect ? "+mirror" : "") << " shift("
     << r.sigma.shift.tp << "," << r.sigma.shift.tq << ") outline=";
  for (const EPoint& p : r.outline) os << "(" << p.tp << "," << p.tq << ")";
  return os.str();
}

std::string census_text(const CnSideCensus& c) {
  std::ostringstream os;
  os << c.complete_windmills << "w+" << c.complete_ships << "s+" << c.partial_pentagons << "p";
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"exact engine for TH-pentagon tilings built from windmill and ship units"};
  app.require_subcommand(1);
  app.fallthrough();

  int threads = 1;
  std::uint64_t seed = 0;
  bool deterministic = true;
  app.add_option("--threads", threads, "worker threads for counting")->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized commands")->capture_default_str();
  app.add_flag("--deterministic,!--no-deterministic", deterministic,
               "fixed the output ordering (always on; flag kept for scripts)");

  // enumerate-heptiamonds
  auto* cmd_hept = app.add_subcommand("enumerate-heptiamonds", "count free n-triangle shapes");
  int hept_n = 7;
  cmd_hept->add_option("-n,--size", hept_n, "polyiamond size")->capture_default_str();

  // solve
  auto* cmd_solve = app.add_subcommand("solve", "exact-cover search over a domain");
  std::string solve_domain, solve_pieces = "all", solve_mode = "first", solve_out;
  std::int64_t solve_limit = 1000;
  bool solve_symbreak = false, solve_fastfail = false;
  cmd_solve->add_option("--domain", solve_domain, "torus:<v1x,v1y,v2x,v2y> or region:@<file>")
      ->required();
  cmd_solve->add_option("--pieces", solve_pieces, "e.g. ship:A,ship:P or all")
      ->capture_default_str();
  cmd_solve->add_option("--mode", solve_mode, "first | count | enumerate")->capture_default_str();
  cmd_solve->add_option("--limit", solve_limit, "enumeration cap")->capture_default_str();
  cmd_solve->add_flag("--symmetry-break", solve_symbreak, "pin the least row on the least column");
  cmd_solve->add_flag("--fast-fail", solve_fastfail, "skip search when the area test fails");
  cmd_solve->add_option("-o,--output", solve_out, "output path (default stdout)");

  // catalog
  auto* cmd_catalog = app.add_subcommand("catalog", "reconstructions of the tiling families");
  auto* cat_preset = cmd_catalog->add_subcommand("preset", "emit a stored witness tiling");
  std::string preset_name, preset_out;
  cat_preset->add_option("name", preset_name, "one of: windmill-min, rice1995-like, flower-lattice")
      ->required();
  cat_preset->add_option("-o,--output", preset_out, "output path (default stdout)");
  auto* cat_sweep = cmd_catalog->add_subcommand("sweep", "census of small periodic tilings");
  std::string sweep_pieces = "all", sweep_out;
  std::int64_t sweep_max_det = 14;
  bool sweep_uniform = false, sweep_c2 = false;
  cat_sweep->add_option("--pieces", sweep_pieces)->capture_default_str();
  cat_sweep->add_option("--max-det", sweep_max_det)->capture_default_str();
  cat_sweep->add_flag("--uniform-chirality", sweep_uniform);
  cat_sweep->add_flag("--c2-pair", sweep_c2);
  cat_sweep->add_option("-o,--output", sweep_out);
  auto* cat_pairs = cmd_catalog->add_subcommand("pairs", "two-ship patches tiling by translation");
  std::string pairs_out;
  cat_pairs->add_option("-o,--output", pairs_out);
  auto* cat_flowers = cmd_catalog->add_subcommand("flowers", "60-degree unit orbits about a vertex");
  std::string flowers_kind = "ship", flowers_out;
  int flowers_radius = 4;
  cat_flowers->add_option("--kind", flowers_kind, "ship | windmill")->capture_default_str();
  cat_flowers->add_option("--radius", flowers_radius)->capture_default_str();
  cat_flowers->add_option("-o,--output", flowers_out);
  auto* cat_shape = cmd_catalog->add_subcommand("shape", "emit a unit outline as a region file");
  std::string shape_kind = "windmill", shape_out;
  cat_shape->add_option("kind", shape_kind, "windmill | ship")->required();
  cat_shape->add_option("-o,--output", shape_out);

  // verify / stats
  auto* cmd_verify = app.add_subcommand("verify", "exact coverage check");
  std::string verify_in;
  cmd_verify->add_option("input", verify_in)->required();
  auto* cmd_stats = app.add_subcommand("stats", "unit and pentagon counts");
  std::string stats_in;
  cmd_stats->add_option("input", stats_in)->required();

  // find-cn
  auto* cmd_findcn = app.add_subcommand("find-cn", "convex-nonagon reversible regions");
  std::string findcn_in;
  int findcn_max_units = 4;
  cmd_findcn->add_option("input", findcn_in)->required();
  cmd_findcn->add_option("--max-units", findcn_max_units)->capture_default_str();

  // cn-patterns
  auto* cmd_patterns = app.add_subcommand("cn-patterns", "free-standing pattern census");
  int patterns_max_units = 4;
  std::string patterns_out;
  cmd_patterns->add_option("--max-units", patterns_max_units)->capture_default_str();
  cmd_patterns->add_option("-o,--output-dir", patterns_out, "directory for pattern files");

  // flip
  auto* cmd_flip = app.add_subcommand("flip", "reverse one reversible region");
  std::string flip_in, flip_out;
  int flip_region = 0, flip_max_units = 6;
  bool flip_cn = false;
  cmd_flip->add_option("input", flip_in)->required();
  cmd_flip->add_option("--region", flip_region, "index from find-cn / detection order")
      ->capture_default_str();
  cmd_flip->add_option("--max-units", flip_max_units)->capture_default_str();
  cmd_flip->add_flag("--cn", flip_cn, "flip a convex-nonagon region instead of a unit subset");
  cmd_flip->add_option("-o,--output", flip_out);

  // flip-walk
  auto* cmd_walk = app.add_subcommand("flip-walk", "seeded random flip sequence");
  std::string walk_in, walk_out;
  int walk_steps = 10, walk_max_units = 6;
  cmd_walk->add_option("input", walk_in)->required();
  cmd_walk->add_option("--steps", walk_steps)->capture_default_str();
  cmd_walk->add_option("--max-units", walk_max_units)->capture_default_str();
  cmd_walk->add_option("-o,--output", walk_out, "file prefix (default stdout stream)");

  // render
  auto* cmd_render = app.add_subcommand("render", "emit an SVG image");
  std::string render_in, render_out, render_color = "chirality";
  double render_scale = 40.0;
  int render_precision = 6, render_cells = 3, render_highlight = -1;
  bool render_cn = false, render_invalid = false;
  cmd_render->add_option("input", render_in)->required();
  cmd_render->add_option("-o,--output", render_out);
  cmd_render->add_option("--color-by", render_color, "chirality | kind | unit-parity")
      ->capture_default_str();
  cmd_render->add_option("--scale", render_scale)->capture_default_str();
  cmd_render->add_option("--precision", render_precision)->capture_default_str();
  cmd_render->add_option("--cells", render_cells, "torus block size")->capture_default_str();
  cmd_render->add_option("--highlight", render_highlight, "reversible region index to outline");
  cmd_render->add_flag("--cn", render_cn, "highlight uses convex-nonagon detection");
  cmd_render->add_flag("--allow-invalid", render_invalid, "render violations instead of refusing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cmd_hept->parsed()) {
    std::cout << enumerate_polyiamonds(hept_n).size() << "\n";
    return 0;
  }

  if (cmd_solve->parsed()) {
    CoverInstance inst = build_instance(parse_domain_spec(solve_domain), parse_pieces(solve_pieces));
    SolveOptions opts;
    opts.threads = threads;
    opts.symmetry_break = solve_symbreak;
    opts.fast_fail = solve_fastfail;
    if (solve_mode == "count") {
      write_output(solve_out, std::to_string(count_solutions(inst, opts)) + "\n");
    } else if (solve_mode == "first") {
      auto t = solve_first(inst, opts);
      write_output(solve_out, t ? serialize_tiling(*t) : "UNSATISFIABLE\n");
    } else if (solve_mode == "enumerate") {
      std::ostringstream os;
      std::int64_t i = 0;
      EnumerateResult res = enumerate_solutions(
          inst, solve_limit,
          [&](const Tiling& t) {
            os << "# solution " << i++ << "\n" << serialize_tiling(t);
            return true;
          },
          opts);
      os << "# " << res.emitted << " solution(s), "
         << (res.exhausted ? "search exhausted" : "limit reached") << "\n";
      write_output(solve_out, os.str());
    } else {
      throw std::runtime_error("mode must be first, count or enumerate");
    }
    return 0;
  }

  if (cat_preset->parsed()) {
    write_output(preset_out, serialize_tiling(preset(preset_name)));
    return 0;
  }
  if (cat_sweep->parsed()) {
    PeriodicFilters filters{sweep_uniform, sweep_c2};
    std::ostringstream os;
    for (const PeriodicEntry& e : enumerate_periodic(parse_pieces(sweep_pieces), sweep_max_det,
                                                     filters)) {
      os << "basis " << e.basis.v1x << " " << e.basis.v1y << " " << e.basis.v2x << " "
         << e.basis.v2y << " det=" << e.basis.det() << " units=" << e.tiling.units.size()
         << " tags=";
      for (std::size_t i = 0; i < e.tags.size(); ++i)
        os << (i ? "," : "") << to_string(e.tags[i].label);
      os << "\n";
    }
    write_output(sweep_out, os.str());
    return 0;
  }
  if (cat_pairs->parsed()) {
    std::ostringstream os;
    std::vector<PairClass> classes = find_pair_classes();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const PairClass& pc = classes[i];
      os << "P" << i + 1 << " symmetry=" << to_string(pc.symmetry) << " key="
         << hex16(fnv1a(pc.key)) << " basis " << pc.witness.domain.torus_basis()->v1x << " "
         << pc.witness.domain.torus_basis()->v1y << " " << pc.witness.domain.torus_basis()->v2x
         << " " << pc.witness.domain.torus_basis()->v2y << "\n";
    }
    os << "# " << classes.size() << " class(es); labels are canonical-order names\n";
    write_output(pairs_out, os.str());
    return 0;
  }
  if (cat_flowers->parsed()) {
    UnitKind kind = flowers_kind == "windmill" ? UnitKind::Windmill : UnitKind::Ship;
    std::ostringstream os;
    std::vector<FlowerAssembly> flowers = find_flowers(kind, flowers_radius);
    for (std::size_t i = 0; i < flowers.size(); ++i) {
      os << "flower " << i << " tiles-torus=" << (flowers[i].lattice_tiling ? "yes" : "no")
         << "\n";
    }
    os << "# " << flowers.size() << " assembly(ies)\n";
    write_output(flowers_out, os.str());
    return 0;
  }
  if (cat_shape->parsed()) {
    UnitKind kind = shape_kind == "windmill" ? UnitKind::Windmill : UnitKind::Ship;
    UnitPlacement u{kind, Chirality::Anterior, Tri{0, 0, Orient::U}, 0};
    std::ostringstream os;
    Region foot = u.footprint();
    for (const Tri& t : foot.tris())
      os << "tri " << t.x << " " << t.y << " " << (t.o == Orient::U ? "U" : "D") << "\n";
    os << "end\n";
    write_output(shape_out, os.str());
    return 0;
  }

  if (cmd_verify->parsed()) {
    Tiling t = load_tiling(verify_in);
    VerifyResult res = verify(t);
    std::cout << (res.valid() ? "VALID" : "INVALID") << "\n";
    for (const Violation& v : res.violations) std::cout << v.to_string() << "\n";
    return 0;
  }
  if (cmd_stats->parsed()) {
    Tiling t = load_tiling(stats_in);
    TilingStats s = stats(t);
    std::cout << "units " << s.unit_total() << "\n";
    std::cout << "windmill A " << s.unit_count(UnitKind::Windmill, Chirality::Anterior) << "\n";
    std::cout << "windmill P " << s.unit_count(UnitKind::Windmill, Chirality::Posterior) << "\n";
    std::cout << "ship A " << s.unit_count(UnitKind::Ship, Chirality::Anterior) << "\n";
    std::cout << "ship P " << s.unit_count(UnitKind::Ship, Chirality::Posterior) << "\n";
    std::cout << "pentagons anterior " << s.pentagon_count(Chirality::Anterior) << "\n";
    std::cout << "pentagons posterior " << s.pentagon_count(Chirality::Posterior) << "\n";
    std::cout << "domain wedges " << s.domain_wedges << "\n";
    return 0;
  }

  if (cmd_findcn->parsed()) {
    Tiling t = finite_view(load_tiling(findcn_in), std::cout);
    std::vector<ReversibleRegion> regions = find_cn(t, findcn_max_units);
    for (std::size_t i = 0; i < regions.size(); ++i)
      std::cout << describe_region(i, regions[i]) << "\n";
    std::cout << "# " << regions.size() << " convex-nonagon region(s)\n";
    return 0;
  }

  if (cmd_patterns->parsed()) {
    std::vector<CnPattern> pats = enumerate_cn_patterns(patterns_max_units);
    if (!patterns_out.empty()) std::filesystem::create_directories(patterns_out);
    std::ostringstream index;
    for (std::size_t i = 0; i < pats.size(); ++i) {
      const CnPattern& p = pats[i];
      index << "P" << i + 1 << " key=" << hex16(fnv1a(p.key)) << " k=" << p.shape_k
            << " pentagons=" << p.filling_a.size() << " side_a=" << census_text(p.census_a)
            << " side_b=" << census_text(p.census_b)
            << " ship_only=" << (p.ship_only_both() ? 1 : 0) << "\n";
      if (!patterns_out.empty()) {
        char name[64];
        std::snprintf(name, sizeof name, "/pattern-%02zu", i + 1);
        write_output(patterns_out + name + "-a.ptt",
                     serialize_tiling(complete_filling(p.filling_a)));
        write_output(patterns_out + name + "-b.ptt",
                     serialize_tiling(complete_filling(p.filling_b)));
      }
    }
    index << "# " << pats.size() << " pattern(s)\n";
    if (!patterns_out.empty()) {
      write_output(patterns_out + "/index.txt", index.str());
    }
    std::cout << index.str();
    return 0;
  }

  if (cmd_flip->parsed()) {
    Tiling t = finite_view(load_tiling(flip_in), std::cout);
    std::vector<ReversibleRegion> regions =
        flip_cn ? find_cn(t, flip_max_units) : find_reversible(t, flip_max_units);
    if (flip_region < 0 || flip_region >= static_cast<int>(regions.size()))
      throw std::runtime_error("region index out of range; " + std::to_string(regions.size()) +
                               " region(s) detected");
    write_output(flip_out, serialize_tiling(flip(t, regions[static_cast<std::size_t>(flip_region)])));
    return 0;
  }

  if (cmd_walk->parsed()) {
    Tiling t = finite_view(load_tiling(walk_in), std::cout);
    std::vector<Tiling> walk = flip_walk(t, walk_steps, seed, walk_max_units);
    if (walk_out.empty()) {
      for (std::size_t i = 0; i < walk.size(); ++i)
        std::cout << "# step " << i << "\n" << serialize_tiling(walk[i]);
    } else {
      for (std::size_t i = 0; i < walk.size(); ++i) {
        char suffix[32];
        std::snprintf(suffix, sizeof suffix, "-%03zu.ptt", i);
        write_output(walk_out + suffix, serialize_tiling(walk[i]));
      }
      std::cout << "# wrote " << walk.size() << " tiling(s)\n";
    }
    return 0;
  }

  if (cmd_render->parsed()) {
    Tiling t = load_tiling(render_in);
    RenderOptions opts;
    opts.scale = render_scale;
    opts.precision = render_precision;
    opts.torus_cells_x = opts.torus_cells_y = render_cells;
    opts.allow_invalid = render_invalid;
    if (render_color == "chirality") opts.color_by = ColorBy::Chirality;
    else if (render_color == "kind") opts.color_by = ColorBy::Kind;
    else if (render_color == "unit-parity") opts.color_by = ColorBy::UnitParity;
    else throw std::runtime_error("color-by must be chirality, kind or unit-parity");
    if (render_highlight >= 0) {
      Tiling flat = t.domain.is_torus() ? lift(t, render_cells, render_cells) : t;
      std::vector<ReversibleRegion> regions =
          render_cn ? find_cn(flat, 4) : find_reversible(flat, 6);
      if (render_highlight >= static_cast<int>(regions.size()))
        throw std::runtime_error("highlight index out of range");
      opts.highlights.push_back(regions[static_cast<std::size_t>(render_highlight)].outline);
    }
    write_output(render_out, render_svg(t, opts));
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pentatile::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
