#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orideal/errors.hpp"
#include "orideal/serialize.hpp"
#include "orideal/theorems.hpp"

namespace py = pybind11;
using namespace orideal;

namespace {

// nlohmann::json <-> Python objects through the json module; the payloads are small.
py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_py(const py::handle& obj) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

VertexSet vertex_set(const WeightedOrientedGraph& g, const std::vector<std::string>& names) {
  return g.vertices_by_name(names);
}

py::list sets_to_py(const WeightedOrientedGraph& g, const std::vector<VertexSet>& sets) {
  py::list out;
  for (const auto& s : sets) out.append(py::cast(g.names_of(s)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Edge ideals of weighted oriented graphs";

  // Translators run newest first, so the base class is registered first.
  auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<ExponentOverflow>(m, "ExponentOverflow", base.ptr());
  py::register_exception<VerificationFailure>(m, "VerificationFailure", base.ptr());

  py::class_<MonomialIdeal>(m, "Ideal")
      .def(py::init([](std::vector<std::string> variables, const std::vector<std::string>& generators) {
             RingPtr ring = make_ring(std::move(variables));
             std::vector<Monomial> gens;
             for (const auto& g : generators) gens.push_back(parse_monomial(g, *ring));
             return minimalize(ring, std::move(gens));
           }),
           py::arg("variables"), py::arg("generators"))
      .def_property_readonly("variables", [](const MonomialIdeal& a) { return a.ring().names(); })
      .def_property_readonly("generators", &generator_strings)
      .def("__len__", &MonomialIdeal::size)
      .def("__contains__", [](const MonomialIdeal& a, const std::string& mono) {
        return a.contains(parse_monomial(mono, a.ring()));
      })
      .def("contains", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a.contains(b); })
      .def("__add__", &ideal_sum)
      .def("__mul__", &ideal_product)
      .def("__pow__", &ideal_power)
      .def("__and__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return ideal_intersection(a, b); })
      .def("intersect", [](const MonomialIdeal& a, const MonomialIdeal& b) { return ideal_intersection(a, b); })
      .def("saturate", [](const MonomialIdeal& a, const std::vector<std::string>& vars) {
        std::vector<VarIndex> idx;
        for (const auto& v : vars) idx.push_back(a.ring().index(v));
        return saturate_by_variables(a, idx);
      })
      .def("__eq__", &ideal_equal)
      .def("__repr__", [](const MonomialIdeal& a) { return "Ideal(" + to_string(a) + ")"; });

  py::class_<WeightedOrientedGraph>(m, "Graph")
      .def(py::init([](std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges,
                       const std::map<std::string, Weight>& weights) {
             return WeightedOrientedGraph::from_names(std::move(vertices), edges, weights);
           }),
           py::arg("vertices"), py::arg("edges"), py::arg("weights") = std::map<std::string, Weight>{})
      .def_static("from_dict", [](const py::dict& d) { return graph_from_json(from_py(d)); })
      .def_static("load", [](const std::string& path) { return load_graph(path); })
      .def_static("line", &oriented_line, py::arg("n"), py::arg("weights"))
      .def_static("cycle", &oriented_cycle, py::arg("n"), py::arg("weights"))
      .def_static("broom", &forest_broom, py::arg("w_y"), py::arg("w_z"), py::arg("tree"), py::arg("w_x") = 2)
      .def_property_readonly("vertices", &WeightedOrientedGraph::names)
      .def_property_readonly("edges",
                             [](const WeightedOrientedGraph& g) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(g.name(e.tail), g.name(e.head));
                               return out;
                             })
      .def("weight", [](const WeightedOrientedGraph& g, const std::string& v) { return g.weight(g.index(v)); })
      .def("to_dict", [](const WeightedOrientedGraph& g) { return to_py(graph_to_json(g)); })
      .def("__eq__", &WeightedOrientedGraph::operator==)
      .def("__repr__", [](const WeightedOrientedGraph& g) { return "Graph(" + describe(g) + ")"; });

  m.def("rooted_tree", &rooted_tree, py::arg("parent_of"), py::arg("root"),
        py::arg("weights") = std::map<std::string, Weight>{});
  m.def("edge_ideal", py::overload_cast<const WeightedOrientedGraph&>(&edge_ideal));

  m.def("is_vertex_cover", [](const WeightedOrientedGraph& g, const std::vector<std::string>& c) {
    return is_vertex_cover(g, vertex_set(g, c));
  });
  m.def("is_strong_cover", [](const WeightedOrientedGraph& g, const std::vector<std::string>& c) {
    return is_strong_cover(g, vertex_set(g, c));
  });
  m.def("cover_partition", [](const WeightedOrientedGraph& g, const std::vector<std::string>& c) {
    return to_py(partition_to_json(g, cover_partition(g, vertex_set(g, c))));
  });
  m.def("strong_covers", [](const WeightedOrientedGraph& g) { return sets_to_py(g, enumerate_strong_covers(g)); });
  m.def("maximal_strong_covers",
        [](const WeightedOrientedGraph& g) { return sets_to_py(g, maximal_strong_covers(g)); });
  m.def("minimal_vertex_covers",
        [](const WeightedOrientedGraph& g) { return sets_to_py(g, minimal_vertex_covers(g)); });

  m.def(
      "irreducible_ideal",
      [](const WeightedOrientedGraph& g, const std::vector<std::string>& c, bool literal) {
        return irreducible_ideal(g, vertex_set(g, c), literal ? ComponentReading::literal : ComponentReading::adopted)
            .ideal;
      },
      py::arg("graph"), py::arg("cover"), py::arg("literal") = false);
  m.def(
      "decompose",
      [](const WeightedOrientedGraph& g, bool literal) {
        DecompositionOptions opts;
        opts.reading = literal ? ComponentReading::literal : ComponentReading::adopted;
        return to_py(decomposition_to_json(g, irreducible_decomposition(g, opts)));
      },
      py::arg("graph"), py::arg("literal") = false);

  m.def("ordinary_power", [](const WeightedOrientedGraph& g, unsigned s) { return ideal_power(edge_ideal(g), s); });
  m.def(
      "symbolic_power",
      [](const WeightedOrientedGraph& g, unsigned s, bool all_primes) {
        SymbolicOptions opts;
        opts.all_primes = all_primes;
        return symbolic_power(g, s, opts);
      },
      py::arg("graph"), py::arg("s"), py::arg("all_primes") = false);
  m.def("symbolic_power_oracle", &symbolic_power_oracle);
  m.def("compare_powers", [](const WeightedOrientedGraph& g, unsigned s_max) {
    return to_py(report_to_json(compare_powers(g, s_max)));
  });

  m.def("line_condition", &line_condition);
  m.def(
      "check_line_theorem",
      [](const std::vector<Weight>& w, unsigned s_max) { return to_py(verdict_to_json(check_line_theorem(w, s_max))); },
      py::arg("weights"), py::arg("s_max") = kDefaultSMax);
  m.def(
      "check_cycle_corollary",
      [](std::size_t n, const std::vector<Weight>& w, unsigned s_max) {
        return to_py(verdict_to_json(check_cycle_corollary(n, w, s_max)));
      },
      py::arg("n"), py::arg("weights"), py::arg("s_max") = kDefaultSMax);
  m.def(
      "check_forest_theorem",
      [](const WeightedOrientedGraph& tree, Weight w_y, Weight w_z, unsigned s_max) {
        return to_py(verdict_to_json(check_forest_theorem(tree, w_y, w_z, s_max)));
      },
      py::arg("tree"), py::arg("w_y"), py::arg("w_z"), py::arg("s_max") = kDefaultSMax);
  m.def(
      "check_source_lemma",
      [](const WeightedOrientedGraph& g, unsigned s_max) { return to_py(verdict_to_json(check_source_lemma(g, s_max))); },
      py::arg("graph"), py::arg("s_max") = kDefaultSMax);
  m.def("check_3rdsym_lemma", [](std::size_t n, const std::vector<Weight>& w, std::size_t i) {
    return to_py(verdict_to_json(check_3rdsym_lemma(n, w, i)));
  });
  m.def("check_jideal_structure",
        [](const std::vector<Weight>& w) { return to_py(verdict_to_json(check_jideal_structure(w))); });
  m.def(
      "random_regression",
      [](std::uint64_t seed, std::size_t trials, std::size_t max_vertices, Weight max_weight, unsigned s_max) {
        RegressionOptions opts{max_vertices, max_weight, s_max};
        return to_py(regression_to_json(random_regression(seed, trials, opts)));
      },
      py::arg("seed") = 42, py::arg("trials") = 50, py::arg("max_vertices") = 7, py::arg("max_weight") = 3,
      py::arg("s_max") = kDefaultSMax);
}
