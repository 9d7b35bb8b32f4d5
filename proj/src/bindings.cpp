// Python bindings for the main operations: graphs and walks, even
// complexes and generators, homology and torsion tests, coloring bounds,
// walk homotopy, and circular covers.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "evencw/coloring.hpp"
#include "evencw/complex.hpp"
#include "evencw/errors.hpp"
#include "evencw/graph.hpp"
#include "evencw/homology.hpp"
#include "evencw/homotopy.hpp"
#include "evencw/io.hpp"

namespace py = pybind11;
using namespace evencw;

namespace {

std::string walk_repr(const Walk& w) {
  std::ostringstream out;
  out << "Walk([";
  for (size_t i = 0; i < w.vertices().size(); ++i)
    out << (i ? ", " : "") << w.vertices()[i];
  out << "])";
  return out.str();
}

// Invariant factors of an integer matrix given as nested lists. Entries are
// converted through Python ints, so no fixed-width limits apply on input;
// outputs are returned as Python ints via decimal strings.
py::list smith_diagonal(const std::vector<std::vector<long long>>& entries) {
  int rows = static_cast<int>(entries.size());
  int cols = rows == 0 ? 0 : static_cast<int>(entries[0].size());
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(entries[static_cast<size_t>(i)].size()) != cols)
      throw std::invalid_argument("ragged matrix");
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  SnfResult s = smith_normal_form(m);
  py::list out;
  py::object to_int = py::module_::import("builtins").attr("int");
  for (const Int& d : s.diag) {
    std::ostringstream text;
    text << d;
    out.append(to_int(text.str()));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Exact toolkit for CW complexes with even 2-skeleton";

  py::register_exception<resource_error>(mod, "ResourceError", PyExc_RuntimeError);
  py::register_exception<generation_error>(mod, "GenerationError", PyExc_ValueError);

  // ---- graphs and walks ----------------------------------------------------
  py::class_<Graph>(mod, "Graph")
      .def(py::init<>())
      .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("vertex_count"),
           py::arg("edges"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges", &Graph::edges)
      .def("neighbors", &Graph::neighbors, py::arg("v"))
      .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
      .def("degree", &Graph::degree, py::arg("v"))
      .def("__repr__", [](const Graph& g) {
        return "Graph(vertices=" + std::to_string(g.vertex_count()) +
               ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<Walk>(mod, "Walk")
      .def(py::init<std::vector<int>>(), py::arg("vertices"))
      .def_property_readonly("vertices", &Walk::vertices)
      .def_property_readonly("length", &Walk::length)
      .def_property_readonly("closed", &Walk::closed)
      .def("reversed", &Walk::reversed)
      .def("concatenated", &Walk::concatenated, py::arg("tail"))
      .def("__getitem__", [](const Walk& w, int i) { return w[i]; })
      .def("__len__", [](const Walk& w) { return w.vertices().size(); })
      .def("__eq__", [](const Walk& a, const Walk& b) { return a == b; })
      .def("__repr__", &walk_repr);

  py::class_<VertexMap>(mod, "VertexMap")
      .def(py::init([](std::vector<int> image) { return VertexMap{std::move(image)}; }),
           py::arg("image"))
      .def_readonly("image", &VertexMap::image)
      .def_property_readonly("domain_size", &VertexMap::domain_size)
      .def("__call__", [](const VertexMap& f, int v) { return f(v); })
      .def("__eq__", [](const VertexMap& a, const VertexMap& b) { return a == b; });

  py::class_<Bipartition>(mod, "Bipartition")
      .def_readonly("coloring", &Bipartition::coloring)
      .def_readonly("odd_walk", &Bipartition::odd_walk);

  mod.def("is_homomorphism", &is_homomorphism, py::arg("f"), py::arg("g"), py::arg("h"));
  mod.def("is_walk_in", &is_walk_in, py::arg("g"), py::arg("w"));
  mod.def("bipartition", &bipartition, py::arg("g"));
  mod.def("find_odd_closed_walk", &find_odd_closed_walk, py::arg("g"), py::arg("base"));
  mod.def("neighborhood", &neighborhood, py::arg("g"), py::arg("v"), py::arg("j"));
  mod.def("complete_graph", &complete_graph, py::arg("n"));
  mod.def("cycle_graph", &cycle_graph, py::arg("n"));
  mod.def("path_graph", &path_graph, py::arg("n"));
  mod.def("circular_complete_graph", &circular_complete_graph, py::arg("n"), py::arg("m"));
  mod.def("connected_components", &connected_components, py::arg("g"));

  // ---- complexes -----------------------------------------------------------
  py::class_<Violation>(mod, "Violation")
      .def_readonly("message", &Violation::message)
      .def_readonly("cell", &Violation::cell)
      .def("__repr__", [](const Violation& v) {
        return "Violation(" + v.message + ")";
      });

  py::class_<EvenComplex>(mod, "EvenComplex")
      .def(py::init<Graph, std::vector<std::vector<int>>>(), py::arg("skeleton"),
           py::arg("cells"))
      .def_property_readonly("skeleton", &EvenComplex::skeleton,
                             py::return_value_policy::reference_internal)
      .def_property_readonly("cells", &EvenComplex::cells)
      .def_property_readonly("cell_count", &EvenComplex::cell_count)
      .def("cell_walk", &EvenComplex::cell_walk, py::arg("index"))
      .def("__repr__", [](const EvenComplex& x) {
        return "EvenComplex(vertices=" + std::to_string(x.skeleton().vertex_count()) +
               ", edges=" + std::to_string(x.skeleton().edge_count()) +
               ", cells=" + std::to_string(x.cell_count()) + ")";
      });

  mod.def("validate", &validate, py::arg("x"));
  mod.def("canonical_cell", &canonical_cell, py::arg("cell"));
  mod.def("from_faces", &from_faces, py::arg("vertex_count"), py::arg("faces"));
  mod.def("sphere_grid", &sphere_grid, py::arg("m"), py::arg("n"));
  mod.def("torus_grid", &torus_grid, py::arg("m"), py::arg("n"));
  mod.def("klein_grid", &klein_grid, py::arg("m"), py::arg("n"));
  mod.def("projective_grid", &projective_grid, py::arg("m"), py::arg("n"));
  mod.def("k4_projective", &k4_projective);
  mod.def("cube_boundary", &cube_boundary, py::arg("d"));
  mod.def("cubical_rp", &cubical_rp, py::arg("d"));
  mod.def("generate", &generate, py::arg("family"), py::arg("params"));
  mod.def("family_names", &family_names);
  mod.def("even_walk_complex", &even_walk_complex, py::arg("g"), py::arg("k"),
          py::arg("max_cells") = 2'000'000);

  // ---- homology ------------------------------------------------------------
  py::enum_<Ring>(mod, "Ring").value("Z", Ring::Z).value("Z2", Ring::Z2);

  py::class_<H1Summary>(mod, "H1Summary")
      .def_readonly("free_rank", &H1Summary::free_rank)
      .def_readonly("torsion", &H1Summary::torsion)
      .def_readonly("ring", &H1Summary::ring)
      .def("trivial", &H1Summary::trivial)
      .def("__str__", &H1Summary::to_string)
      .def("__repr__", [](const H1Summary& s) { return "H1Summary(" + s.to_string() + ")"; })
      .def("__eq__", [](const H1Summary& a, const H1Summary& b) { return a == b; });

  mod.def("h1", &h1, py::arg("x"), py::arg("ring") = Ring::Z);
  mod.def("is_torsion_class", &is_torsion_class, py::arg("x"), py::arg("walk"));
  mod.def("z2_class_nonzero", &z2_class_nonzero, py::arg("x"), py::arg("walk"));
  mod.def("find_odd_torsion_walk", &find_odd_torsion_walk, py::arg("x"));
  mod.def("smith_diagonal", &smith_diagonal, py::arg("entries"),
          "Invariant factors of an integer matrix given as nested lists");

  py::class_<SimplicialComplex2>(mod, "SimplicialComplex2")
      .def_readonly("vertex_count", &SimplicialComplex2::vertex_count)
      .def_readonly("edges", &SimplicialComplex2::edges)
      .def_readonly("triangles", &SimplicialComplex2::triangles);
  mod.def("neighborhood_complex", &neighborhood_complex, py::arg("g"), py::arg("j"));
  mod.def("h1_simplicial", &h1_simplicial, py::arg("s"), py::arg("ring") = Ring::Z);

  // ---- coloring --------------------------------------------------------------
  py::class_<SearchLimits>(mod, "SearchLimits")
      .def(py::init<>())
      .def_readwrite("max_nodes", &SearchLimits::max_nodes)
      .def_readwrite("jobs", &SearchLimits::jobs);

  py::class_<ColoringCertificate>(mod, "ColoringCertificate")
      .def(py::init([](int colors, std::vector<int> assignment) {
             return ColoringCertificate{colors, VertexMap{std::move(assignment)}};
           }),
           py::arg("colors"), py::arg("assignment"))
      .def_readonly("colors", &ColoringCertificate::colors)
      .def_readonly("assignment", &ColoringCertificate::assignment);

  py::class_<RationalBound> rational_bound(mod, "RationalBound");
  py::enum_<RationalBound::Kind>(rational_bound, "Kind")
      .value("lower", RationalBound::Kind::lower)
      .value("upper", RationalBound::Kind::upper)
      .value("exact", RationalBound::Kind::exact);
  rational_bound.def_readonly("num", &RationalBound::num)
      .def_readonly("den", &RationalBound::den)
      .def_readonly("kind", &RationalBound::kind)
      .def("__repr__", [](const RationalBound& b) {
        return std::to_string(b.num) + "/" + std::to_string(b.den);
      });

  py::class_<RefutationLog>(mod, "RefutationLog")
      .def_readonly("colors", &RefutationLog::colors)
      .def_readonly("nodes", &RefutationLog::nodes)
      .def_readonly("exhausted", &RefutationLog::exhausted)
      .def_readonly("trace", &RefutationLog::trace);

  py::class_<ChromaticResult>(mod, "ChromaticResult")
      .def_readonly("chi", &ChromaticResult::chi)
      .def_readonly("certificate", &ChromaticResult::certificate)
      .def_readonly("refutation", &ChromaticResult::refutation);

  py::enum_<HomStatus>(mod, "HomStatus")
      .value("found", HomStatus::found)
      .value("none", HomStatus::none)
      .value("budget", HomStatus::budget);

  py::class_<HomResult>(mod, "HomResult")
      .def_readonly("status", &HomResult::status)
      .def_readonly("map", &HomResult::map)
      .def_readonly("nodes", &HomResult::nodes);

  py::class_<CircularLowerBound>(mod, "CircularLowerBound")
      .def_readonly("bound", &CircularLowerBound::bound)
      .def_readonly("witness", &CircularLowerBound::witness)
      .def_readonly("max_half_length", &CircularLowerBound::max_half_length);

  py::class_<CircularChromaticResult>(mod, "CircularChromaticResult")
      .def_readonly("num", &CircularChromaticResult::num)
      .def_readonly("den", &CircularChromaticResult::den)
      .def_readonly("lower_num", &CircularChromaticResult::lower_num)
      .def_readonly("lower_den", &CircularChromaticResult::lower_den)
      .def_readonly("exact", &CircularChromaticResult::exact)
      .def_readonly("witness_n", &CircularChromaticResult::witness_n)
      .def_readonly("witness_m", &CircularChromaticResult::witness_m)
      .def_readonly("witness", &CircularChromaticResult::witness)
      .def_readonly("nodes", &CircularChromaticResult::nodes);

  mod.def("is_proper_coloring", &is_proper_coloring, py::arg("g"), py::arg("assignment"));
  mod.def("chromatic_number", &chromatic_number, py::arg("g"),
          py::arg("limits") = SearchLimits{});
  mod.def("find_homomorphism", &find_homomorphism, py::arg("g"), py::arg("h"),
          py::arg("limits") = SearchLimits{});
  mod.def("circular_lower_bound", &circular_lower_bound, py::arg("x"));
  mod.def("circular_chromatic", &circular_chromatic, py::arg("g"), py::arg("max_den"),
          py::arg("limits") = SearchLimits{});
  mod.def("rainbow_faces",
          py::overload_cast<const EvenComplex&, const std::vector<int>&>(&rainbow_faces),
          py::arg("x"), py::arg("assignment"));
  mod.def(
      "enumerate_colorings",
      [](const Graph& g, int max_colors,
         const std::function<bool(const std::vector<int>&)>& visitor,
         const SearchLimits& limits) {
        return enumerate_colorings(g, max_colors, visitor, limits);
      },
      py::arg("g"), py::arg("max_colors"), py::arg("visitor") = nullptr,
      py::arg("limits") = SearchLimits{});

  // ---- walk homotopy and covers ---------------------------------------------
  py::class_<KHomotopyMove> move(mod, "KHomotopyMove");
  py::enum_<KHomotopyMove::Kind>(move, "Kind")
      .value("insert_backtrack", KHomotopyMove::Kind::insert_backtrack)
      .value("delete_backtrack", KHomotopyMove::Kind::delete_backtrack)
      .value("substitute", KHomotopyMove::Kind::substitute);
  move.def(py::init([](KHomotopyMove::Kind kind, int position, int vertex,
                       std::vector<int> replacement) {
            return KHomotopyMove{kind, position, vertex, std::move(replacement)};
          }),
          py::arg("kind"), py::arg("position"), py::arg("vertex") = -1,
          py::arg("replacement") = std::vector<int>{})
      .def_readonly("kind", &KHomotopyMove::kind)
      .def_readonly("position", &KHomotopyMove::position)
      .def_readonly("vertex", &KHomotopyMove::vertex)
      .def_readonly("replacement", &KHomotopyMove::replacement)
      .def("__eq__", [](const KHomotopyMove& a, const KHomotopyMove& b) { return a == b; });

  mod.def("apply_move", &apply_move, py::arg("g"), py::arg("walk"), py::arg("move"),
          py::arg("k"));
  mod.def("serialize_moves", &serialize_moves, py::arg("moves"));
  mod.def("parse_moves", &parse_moves, py::arg("text"));
  mod.def("walk_parity", &walk_parity, py::arg("walk"));

  py::class_<KHomotopyOptions>(mod, "KHomotopyOptions")
      .def(py::init<>())
      .def_readwrite("length_slack", &KHomotopyOptions::length_slack)
      .def_readwrite("max_states", &KHomotopyOptions::max_states)
      .def_readwrite("circular", &KHomotopyOptions::circular)
      .def_readwrite("use_z2_invariant", &KHomotopyOptions::use_z2_invariant)
      .def_readwrite("xk_cell_budget", &KHomotopyOptions::xk_cell_budget);

  py::class_<KHomotopyOutcome> outcome(mod, "KHomotopyOutcome");
  py::enum_<KHomotopyOutcome::Verdict>(outcome, "Verdict")
      .value("yes", KHomotopyOutcome::Verdict::yes)
      .value("no", KHomotopyOutcome::Verdict::no)
      .value("unknown", KHomotopyOutcome::Verdict::unknown);
  outcome.def_readonly("verdict", &KHomotopyOutcome::verdict)
      .def_readonly("moves", &KHomotopyOutcome::moves)
      .def_readonly("separating_invariant", &KHomotopyOutcome::separating_invariant)
      .def_readonly("states_explored", &KHomotopyOutcome::states_explored);

  mod.def("k_homotopic", &k_homotopic, py::arg("g"), py::arg("w1"), py::arg("w2"),
          py::arg("k"), py::arg("options") = KHomotopyOptions{});
  mod.def("k_fundamental_abelianization", &k_fundamental_abelianization, py::arg("g"),
          py::arg("k"), py::arg("max_cells") = 2'000'000);

  py::class_<KCoveringWitness> witness(mod, "KCoveringWitness");
  py::enum_<KCoveringWitness::Kind>(witness, "Kind")
      .value("not_surjective", KCoveringWitness::Kind::not_surjective)
      .value("not_injective", KCoveringWitness::Kind::not_injective);
  witness.def_readonly("kind", &KCoveringWitness::kind)
      .def_readonly("vertex", &KCoveringWitness::vertex)
      .def_readonly("a", &KCoveringWitness::a)
      .def_readonly("b", &KCoveringWitness::b)
      .def_readonly("missing", &KCoveringWitness::missing)
      .def_readonly("level", &KCoveringWitness::level);

  py::class_<KCoveringResult>(mod, "KCoveringResult")
      .def_readonly("ok", &KCoveringResult::ok)
      .def_readonly("witness", &KCoveringResult::witness);

  mod.def(
      "is_k_covering",
      [](const Graph& cover, const Graph& base, const VertexMap& p, int k,
         const std::optional<std::vector<int>>& tests) {
        return is_k_covering(cover, base, p, k, tests ? &*tests : nullptr);
      },
      py::arg("cover"), py::arg("base"), py::arg("p"), py::arg("k"),
      py::arg("tests") = std::nullopt);

  py::class_<CoverLine> cover_line(mod, "CoverLine");
  py::class_<CoverLine::Vertex>(cover_line, "Vertex")
      .def(py::init([](long long q, int eps) {
             return CoverLine::Vertex{q, eps};
           }),
           py::arg("q"), py::arg("eps"))
      .def_readonly("q", &CoverLine::Vertex::q)
      .def_readonly("eps", &CoverLine::Vertex::eps)
      .def("__eq__",
           [](const CoverLine::Vertex& a, const CoverLine::Vertex& b) { return a == b; })
      .def("__repr__", [](const CoverLine::Vertex& v) {
        return "Vertex(q=" + std::to_string(v.q) + ", eps=" + std::to_string(v.eps) + ")";
      });
  py::class_<CoverLine::Window>(cover_line, "Window")
      .def_readonly("graph", &CoverLine::Window::graph)
      .def_readonly("projection", &CoverLine::Window::projection)
      .def_readonly("vertices", &CoverLine::Window::vertices)
      .def_readonly("interior", &CoverLine::Window::interior);
  cover_line.def(py::init<int, int>(), py::arg("n"), py::arg("m"))
      .def_property_readonly("n", &CoverLine::n)
      .def_property_readonly("m", &CoverLine::m)
      .def_property_readonly("step_bound", &CoverLine::step_bound)
      .def_property_readonly("covering_order", &CoverLine::covering_order)
      .def("valid_vertex", &CoverLine::valid_vertex, py::arg("v"))
      .def("adjacent", &CoverLine::adjacent, py::arg("a"), py::arg("b"))
      .def("project", &CoverLine::project, py::arg("v"))
      .def("canonical_lift", &CoverLine::canonical_lift, py::arg("base"))
      .def("deck", &CoverLine::deck, py::arg("v"), py::arg("shifts"))
      .def("window", &CoverLine::window, py::arg("radius"), py::arg("margin_steps"));

  mod.def("lift_walk", &lift_walk, py::arg("cover"), py::arg("base_walk"),
          py::arg("start"));
  mod.def("winding", &winding, py::arg("cover"), py::arg("closed_walk"));
  mod.def("check_cover_window", &check_cover_window, py::arg("cover"), py::arg("k"),
          py::arg("radius"));

  // ---- text formats ----------------------------------------------------------
  mod.def("format_graph", &io::format_graph, py::arg("g"));
  mod.def("parse_graph", &io::parse_graph, py::arg("text"));
  mod.def("format_complex", &io::format_complex, py::arg("x"));
  mod.def("parse_complex", &io::parse_complex, py::arg("text"));
  mod.def("format_coloring", &io::format_coloring, py::arg("c"));
  mod.def("parse_coloring", &io::parse_coloring, py::arg("text"));
}
