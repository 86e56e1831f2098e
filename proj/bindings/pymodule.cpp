#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pentatile/catalog.hpp"
#include "pentatile/render.hpp"
#include "pentatile/reversal.hpp"

namespace py = pybind11;
using namespace pentatile;

namespace {

PieceSet pieces_from_spec(const std::string& spec) {
  if (spec == "all" || spec.empty()) return PieceSet::all();
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
    else throw std::invalid_argument("unknown piece '" + item + "'");
    if (chi == "A") out.add(k, Chirality::Anterior);
    else if (chi == "P") out.add(k, Chirality::Posterior);
    else if (chi.empty()) out.add(k, Chirality::Anterior).add(k, Chirality::Posterior);
    else throw std::invalid_argument("piece chirality must be A or P in '" + item + "'");
  }
  return out;
}

CoverInstance torus_instance(std::int64_t v1x, std::int64_t v1y, std::int64_t v2x,
                             std::int64_t v2y, const std::string& pieces) {
  return build_instance(Domain::torus({v1x, v1y, v2x, v2y}), pieces_from_spec(pieces));
}

Tiling finite_input(const std::string& text) {
  Tiling t = parse_tiling(text);
  return t.domain.is_torus() ? lift(t, 3, 3) : t;
}

}  // namespace

PYBIND11_MODULE(_pentatile, m) {
  m.doc() = "Exact engine for TH-pentagon tilings built from windmill and ship units";

  m.def(
      "enumerate_heptiamonds",
      [](int n) { return enumerate_polyiamonds(n).size(); },
      py::arg("n") = 7, "Number of free polyiamonds with n triangles (n in 1..9).");

  m.def(
      "canonical",
      [](const std::string& text) { return serialize_tiling(parse_tiling(text)); },
      py::arg("text"), "Parse a tiling file and re-emit it in canonical form.");

  m.def(
      "verify",
      [](const std::string& text) {
        std::vector<std::string> out;
        for (const Violation& v : verify(parse_tiling(text)).violations)
          out.push_back(v.to_string());
        return out;
      },
      py::arg("text"), "Exact coverage check; returns violation strings (empty = valid).");

  m.def(
      "stats",
      [](const std::string& text) {
        TilingStats s = stats(parse_tiling(text));
        py::dict d;
        d["windmill_a"] = s.unit_count(UnitKind::Windmill, Chirality::Anterior);
        d["windmill_p"] = s.unit_count(UnitKind::Windmill, Chirality::Posterior);
        d["ship_a"] = s.unit_count(UnitKind::Ship, Chirality::Anterior);
        d["ship_p"] = s.unit_count(UnitKind::Ship, Chirality::Posterior);
        d["pentagons_anterior"] = s.pentagon_count(Chirality::Anterior);
        d["pentagons_posterior"] = s.pentagon_count(Chirality::Posterior);
        d["domain_wedges"] = s.domain_wedges;
        return d;
      },
      py::arg("text"));

  m.def(
      "count_tilings",
      [](std::int64_t v1x, std::int64_t v1y, std::int64_t v2x, std::int64_t v2y,
         const std::string& pieces, int threads) {
        SolveOptions opts;
        opts.threads = threads;
        return count_solutions(torus_instance(v1x, v1y, v2x, v2y, pieces), opts);
      },
      py::arg("v1x"), py::arg("v1y"), py::arg("v2x"), py::arg("v2y"), py::arg("pieces") = "all",
      py::arg("threads") = 1, "Exact tiling count on the torus spanned by v1 and v2.");

  m.def(
      "first_tiling",
      [](std::int64_t v1x, std::int64_t v1y, std::int64_t v2x, std::int64_t v2y,
         const std::string& pieces) -> py::object {
        auto t = solve_first(torus_instance(v1x, v1y, v2x, v2y, pieces));
        if (!t) return py::none();
        return py::str(serialize_tiling(*t));
      },
      py::arg("v1x"), py::arg("v1y"), py::arg("v2x"), py::arg("v2y"), py::arg("pieces") = "all");

  m.def("preset_names", &preset_names);
  m.def(
      "preset", [](const std::string& name) { return serialize_tiling(preset(name)); },
      py::arg("name"));

  m.def(
      "find_cn",
      [](const std::string& text, int max_units) {
        Tiling t = finite_input(text);
        py::list out;
        for (const ReversibleRegion& r : find_cn(t, max_units)) {
          py::dict d;
          d["pentagons"] = r.filling.size();
          d["units"] = r.unit_indices;
          py::list outline;
          for (const EPoint& p : r.outline) outline.append(py::make_tuple(p.tp, p.tq));
          d["outline"] = outline;
          out.append(d);
        }
        return out;
      },
      py::arg("text"), py::arg("max_units") = 4,
      "Convex nonagon regions of a tiling (torus input is lifted 3x3).");

  m.def(
      "flip_cn",
      [](const std::string& text, int index, int max_units) {
        Tiling t = finite_input(text);
        std::vector<ReversibleRegion> regions = find_cn(t, max_units);
        if (index < 0 || index >= static_cast<int>(regions.size()))
          throw std::out_of_range("region index");
        return serialize_tiling(flip(t, regions[static_cast<std::size_t>(index)]));
      },
      py::arg("text"), py::arg("index") = 0, py::arg("max_units") = 4);

  m.def(
      "flip_walk",
      [](const std::string& text, int steps, std::uint64_t seed, int max_units) {
        std::vector<std::string> out;
        for (const Tiling& t : flip_walk(finite_input(text), steps, seed, max_units))
          out.push_back(serialize_tiling(t));
        return out;
      },
      py::arg("text"), py::arg("steps") = 10, py::arg("seed") = 0, py::arg("max_units") = 6);

  m.def(
      "cn_pattern_index",
      [](int max_units) {
        std::ostringstream os;
        std::vector<CnPattern> pats = enumerate_cn_patterns(max_units);
        for (std::size_t i = 0; i < pats.size(); ++i) {
          const CnPattern& p = pats[i];
          os << "P" << i + 1 << " k=" << p.shape_k << " pentagons=" << p.filling_a.size()
             << " ship_only=" << (p.ship_only_both() ? 1 : 0) << "\n";
        }
        return os.str();
      },
      py::arg("max_units") = 4);

  m.def(
      "render_svg",
      [](const std::string& text, const std::string& color_by, double scale) {
        RenderOptions opts;
        opts.scale = scale;
        if (color_by == "chirality") opts.color_by = ColorBy::Chirality;
        else if (color_by == "kind") opts.color_by = ColorBy::Kind;
        else if (color_by == "unit-parity") opts.color_by = ColorBy::UnitParity;
        else throw std::invalid_argument("color_by must be chirality, kind or unit-parity");
        return render_svg(parse_tiling(text), opts);
      },
      py::arg("text"), py::arg("color_by") = "chirality", py::arg("scale") = 40.0);
}
