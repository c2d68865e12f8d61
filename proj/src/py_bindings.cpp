#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "unfold/forcing.hpp"
#include "unfold/heave.hpp"
#include "unfold/pattern.hpp"
#include "unfold/plmap.hpp"
#include "unfold/rational.hpp"
#include "unfold/report.hpp"
#include "unfold/rotation.hpp"
#include "unfold/sharkovsky.hpp"
#include "unfold/svg.hpp"
#include "unfold/unfolding.hpp"
#include "unfold/verify.hpp"

namespace py = pybind11;

namespace {

using namespace unfold;

// Rationals cross the boundary as "p/q" strings, mirroring the JSON/CSV
// convention.
py::dict rotation_dict(const RotationResult& r) {
  py::dict d;
  d["exact"] = r.exact;
  if (r.exact) d["value"] = to_string(r.value);
  d["lo"] = to_string(r.lo);
  d["hi"] = to_string(r.hi);
  return d;
}

py::list point_strings(const std::vector<Rat>& xs) {
  py::list out;
  for (const Rat& x : xs) out.append(to_string(x));
  return out;
}

Route route_from(const std::string& name) {
  if (name == "comb") return Route::Combinatorial;
  if (name == "heave") return Route::Heave;
  if (name == "both") return Route::Both;
  throw std::invalid_argument("route must be comb, heave or both");
}

PLMap graph_of(const Pattern& P, const std::string& which) {
  const PLMap f = p_linear_map(P);
  if (which == "f") return f;
  if (which == "g") return miniature(f).g;
  if (which == "F") return heaved(f).fundamental;
  if (which == "Fl") return pour_lower(heaved(f)).fundamental;
  if (which == "Fu") return pour_upper(heaved(f)).fundamental;
  throw std::invalid_argument("graph must be one of f, g, F, Fl, Fu");
}

py::dict suite_dict(const SuiteResult& r) {
  py::dict d;
  d["name"] = r.name;
  d["passed"] = r.passed;
  d["cases"] = r.cases;
  d["failures"] = r.failures;
  d["notes"] = r.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact unfolding invariants of interval-map cycles";

  py::register_exception<internal_error>(m, "InternalError");

  py::class_<Pattern>(m, "Pattern")
      .def(py::init([](const std::string& text) { return parse_pattern(text); }),
           py::arg("text"),
           "cycle notation \"(1,2,3)\" or a bare image list \"2,3,1\"")
      .def_static(
          "from_images",
          [](const std::vector<int>& images) { return Pattern(images); },
          py::arg("images"))
      .def_property_readonly("period", &Pattern::period)
      .def_property_readonly("images", &Pattern::images)
      .def_property_readonly("max_pos", &Pattern::max_pos)
      .def_property_readonly("min_pos", &Pattern::min_pos)
      .def("cycle_notation", &Pattern::cycle_notation)
      .def("reversed", &Pattern::reversed)
      .def("__repr__",
           [](const Pattern& p) {
             return "Pattern(\"" + p.cycle_notation() + "\")";
           })
      .def("__eq__", [](const Pattern& a, const Pattern& b) { return a == b; })
      .def("__hash__", [](const Pattern& p) {
        return py::hash(py::str(p.cycle_notation()));
      });

  m.def(
      "over_rotation_pair",
      [](const Pattern& P) {
        const OverRotationPair r = over_rotation_pair(P);
        return py::make_tuple(r.l, r.q);
      },
      py::arg("pattern"));
  m.def(
      "unfolding_pair",
      [](const Pattern& P) {
        const UnfoldingPair r = unfolding_pair(P);
        return py::make_tuple(r.p, r.q);
      },
      py::arg("pattern"), "combinatorial route: the index-set scan");
  m.def(
      "unfolding_pair_via_heave",
      [](const Pattern& P) {
        const UnfoldingPair r = unfolding_number_via_heave(P);
        return py::make_tuple(r.p, r.q);
      },
      py::arg("pattern"), "dynamical route: the heaved trajectory of 0");
  m.def("unfolding_index_set", &unfolding_index_set, py::arg("pattern"));
  m.def("modality", &modality, py::arg("pattern"));
  m.def("is_divergent", &is_divergent, py::arg("pattern"));
  m.def("is_convergent", &is_convergent, py::arg("pattern"));
  m.def("is_sheer", &is_sheer, py::arg("pattern"));

  m.def(
      "analyze_json",
      [](const std::string& pattern, const std::string& route, int max_den,
         bool timings) {
        return record_json(analyze_pattern(parse_pattern(pattern),
                                           route_from(route), max_den,
                                           timings));
      },
      py::arg("pattern"), py::arg("route") = "both", py::arg("max_den") = 64,
      py::arg("timings") = false,
      "full report as a JSON string; route 'both' cross-checks");

  m.def(
      "unfolding_interval",
      [](const Pattern& P, int max_den) {
        const UnfoldingInterval iv =
            unfolding_interval(p_linear_map(P), max_den);
        py::dict d;
        d["lower"] = rotation_dict(iv.lower);
        d["upper"] = rotation_dict(iv.upper);
        d["upper_is_half"] = iv.upper_is_half;
        return d;
      },
      py::arg("pattern"), py::arg("max_den") = 64);

  m.def(
      "mup_set",
      [](const Pattern& P, int max_period) {
        py::list out;
        for (const ModifiedPair& mp : mup_set(p_linear_map(P), max_period))
          out.append(py::make_tuple(to_string(mp.t), mp.m, mp.degenerate));
        return out;
      },
      py::arg("pattern"), py::arg("max_period"),
      "modified pairs (t, m, degenerate) of all cycles up to max_period");

  m.def(
      "realize_minimal",
      [](const Pattern& P, long long period_cap) {
        const RealizeResult r = realize_minimal(p_linear_map(P), period_cap);
        py::dict d;
        d["found"] = r.found;
        d["degenerate"] = r.degenerate;
        d["points"] = point_strings(r.points);
        d["period"] = r.period;
        d["pair"] = py::make_tuple(r.pair.gain.get_si(), r.pair.period);
        d["searched_cap"] = r.searched_cap;
        d["note"] = r.note;
        return d;
      },
      py::arg("pattern"), py::arg("period_cap") = 0,
      "smallest-period cycle whose unfolding number equals u_f");

  m.def(
      "forced_spectrum",
      [](const Pattern& P, int max_period) {
        py::list out;
        for (const SpectrumEntry& e : forced_spectrum(P, max_period)) {
          py::dict d;
          d["period"] = e.period;
          d["pattern"] = e.pattern.cycle_notation();
          d["isolated"] = e.isolated;
          d["orp"] = py::make_tuple(e.orp.l, e.orp.q);
          d["up"] = py::make_tuple(e.up.p, e.up.q);
          d["mup"] =
              py::make_tuple(to_string(e.mup.t), e.mup.m, e.mup.degenerate);
          out.append(d);
        }
        return out;
      },
      py::arg("pattern"), py::arg("max_period"));

  m.def(
      "divergent_realization",
      [](const Pattern& P, long long p, long long q) {
        const Realization w = divergent_realization(P, p, q);
        py::dict d;
        d["points"] = point_strings(w.points);
        d["pattern"] = w.pattern.cycle_notation();
        d["pair"] = py::make_tuple(w.pair.p, w.pair.q);
        return d;
      },
      py::arg("pattern"), py::arg("p"), py::arg("q"));

  m.def(
      "sharkovsky_ge",
      [](std::uint64_t a, std::uint64_t b) {
        const SharkValue va = a == 0 ? SharkValue::inf() : SharkValue::of(a);
        const SharkValue vb = b == 0 ? SharkValue::inf() : SharkValue::of(b);
        return sharkovsky_ge(va, vb);
      },
      py::arg("a"), py::arg("b"),
      "a forces b in the Sharkovsky order; 0 stands for 2^inf");

  m.def(
      "render_svg",
      [](const Pattern& P, const std::string& which) {
        return render_plmap_svg(graph_of(P, which),
                                P.cycle_notation() + " " + which);
      },
      py::arg("pattern"), py::arg("which") = "F",
      "deterministic 800x800 SVG of f, g, F, Fl or Fu");

  m.def(
      "verify_suite",
      [](const std::string& name, std::uint64_t seed, int max_period,
         int max_den) {
        if (name == "routes")
          return suite_dict(verify_routes(max_period > 0 ? max_period : 9));
        if (name == "pouring") return suite_dict(verify_pouring(200, seed));
        if (name == "rotation")
          return suite_dict(verify_rotation(max_den, 100, seed));
        if (name == "divergent")
          return suite_dict(verify_divergent(max_period > 0 ? max_period : 15));
        if (name == "interval")
          return suite_dict(
              verify_interval(7, max_period > 0 ? max_period : 10));
        if (name == "sharkovsky")
          return suite_dict(
              verify_sharkovsky(7, max_period > 0 ? max_period : 8, 64));
        throw std::invalid_argument("unknown suite: " + name);
      },
      py::arg("name"), py::arg("seed") = kDefaultVerifySeed,
      py::arg("max_period") = 0, py::arg("max_den") = 64);
}
