// Python bindings. Labelings cross the boundary as dicts keyed by vertex id
// ("u1", "v3", "x1"), graphs as an opaque Graph object.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oddgraceful/constructor.hpp"
#include "oddgraceful/graph_spec.hpp"
#include "oddgraceful/io.hpp"
#include "oddgraceful/search.hpp"
#include "oddgraceful/verifier.hpp"

namespace py = pybind11;
namespace og = oddgraceful;

namespace {

using LabelDict = std::map<std::string, og::Label>;

LabelDict to_dict(const og::GraphTopology& topology, const og::Labeling& labeling) {
  LabelDict out;
  for (og::VertexId v : topology.vertices()) {
    if (auto value = labeling.get(v)) out.emplace(og::to_string(v), *value);
  }
  return out;
}

og::Labeling from_dict(const LabelDict& labels) {
  og::Labeling labeling;
  for (const auto& [id, value] : labels) {
    const auto v = og::parse_vertex_id(id);
    if (!v) throw py::value_error("bad vertex id: " + id);
    labeling.set(*v, value);
  }
  return labeling;
}

og::ConstructionParams params_for(int m, int n, bool force) {
  return force ? og::force_params(m, n) : og::validate_params(m, n);
}

py::dict report_dict(const og::VerificationReport& report, const og::GraphTopology& topology) {
  py::list violations;
  for (const og::Violation& v : report.violations) {
    py::dict item;
    item["kind"] = std::string(og::to_string(v.kind));
    std::vector<std::string> ids;
    for (og::VertexId id : v.vertices) ids.push_back(og::to_string(id));
    item["vertices"] = ids;
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t e : v.edges) {
      const og::Edge& edge = topology.edges()[e];
      edges.emplace_back(og::to_string(edge.first), og::to_string(edge.second));
    }
    item["edges"] = edges;
    item["values"] = v.values;
    item["message"] = og::describe(v, topology);
    violations.append(item);
  }
  py::dict out;
  out["odd_graceful"] = report.is_odd_graceful;
  out["violations"] = violations;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Odd graceful labelings of C_m + P_n";

  py::register_exception<og::ParamError>(mod, "ParamError", PyExc_ValueError);
  py::register_exception<og::SpecError>(mod, "SpecError", PyExc_ValueError);
  py::register_exception<og::GraphError>(mod, "GraphError", PyExc_ValueError);
  py::register_exception<og::DocumentError>(mod, "DocumentError", PyExc_ValueError);
  py::register_exception<og::MissingVertexLabel>(mod, "MissingVertexLabel", PyExc_ValueError);

  py::class_<og::GraphTopology>(mod, "Graph")
      .def_static("union", &og::build_union_graph, py::arg("m"), py::arg("n"), "The disjoint union C_m + P_n")
      .def_static(
          "from_spec", [](const std::string& spec) { return og::spec_topology(og::parse_graph_spec(spec)); },
          py::arg("spec"), "Build from a spec string such as C8+P12 or C3")
      .def_static(
          "from_edges",
          [](const std::vector<std::pair<int, int>>& edges) { return og::build_free_graph(edges); },
          py::arg("edges"), "Build from (a, b) pairs of 1-based vertex numbers")
      .def_property_readonly("q", &og::GraphTopology::size)
      .def_property_readonly("order", &og::GraphTopology::order)
      .def_property_readonly("m", &og::GraphTopology::cycle_length)
      .def_property_readonly("n", &og::GraphTopology::path_length)
      .def_property_readonly("vertices",
                             [](const og::GraphTopology& t) {
                               std::vector<std::string> ids;
                               for (og::VertexId v : t.vertices()) ids.push_back(og::to_string(v));
                               return ids;
                             })
      .def_property_readonly("edges",
                             [](const og::GraphTopology& t) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const og::Edge& e : t.edges())
                                 out.emplace_back(og::to_string(e.first), og::to_string(e.second));
                               return out;
                             })
      .def("__eq__", [](const og::GraphTopology& a, const og::GraphTopology& b) { return a == b; })
      .def("__repr__", [](const og::GraphTopology& t) {
        return "<Graph order=" + std::to_string(t.order()) + " q=" + std::to_string(t.size()) + ">";
      });

  mod.def("min_path_length", &og::min_path_length, py::arg("m"));
  mod.def(
      "validate_params",
      [](int m, int n) {
        const og::ConstructionParams p = og::validate_params(m, n);
        return py::dict(py::arg("m") = p.m(), py::arg("n") = p.n(), py::arg("q") = p.q(), py::arg("k") = p.k());
      },
      py::arg("m"), py::arg("n"));
  mod.def(
      "markers",
      [](int m, int n) {
        const og::Markers mk = og::init_markers(og::validate_params(m, n));
        return std::make_pair(mk.active_vertex_label, mk.double_jump_edge_label);
      },
      py::arg("m"), py::arg("n"), "(active vertex label, skipped edge label)");

  mod.def(
      "closed_form",
      [](int m, int n, bool force) {
        return to_dict(og::build_union_graph(m, n), og::closed_form_labeling(params_for(m, n, force)));
      },
      py::arg("m"), py::arg("n"), py::arg("force") = false);
  mod.def(
      "algorithmic",
      [](int m, int n, bool force, bool concurrent) {
        const auto exec = concurrent ? og::PassExecution::Concurrent : og::PassExecution::Sequential;
        og::ConstructionParams p = params_for(m, n, force);
        og::Labeling labeling;
        {
          py::gil_scoped_release release;
          labeling = og::algorithmic_labeling(p, exec);
        }
        return to_dict(og::build_union_graph(m, n), labeling);
      },
      py::arg("m"), py::arg("n"), py::arg("force") = false, py::arg("concurrent") = false);

  mod.def(
      "verify",
      [](const og::GraphTopology& graph, const LabelDict& labels) {
        return report_dict(og::verify_odd_graceful(graph, from_dict(labels)), graph);
      },
      py::arg("graph"), py::arg("labels"));
  mod.def(
      "complement",
      [](const og::GraphTopology& graph, const LabelDict& labels) {
        return to_dict(graph, og::complement_labeling(graph, from_dict(labels)));
      },
      py::arg("graph"), py::arg("labels"));

  mod.def(
      "search",
      [](const og::GraphTopology& graph, std::uint64_t max_nodes, std::optional<std::uint64_t> timeout_ms,
         bool symmetry) {
        og::SearchBudget budget;
        budget.max_nodes = max_nodes;
        budget.timeout_ms = timeout_ms;
        og::SearchOutcome outcome;
        {
          py::gil_scoped_release release;
          outcome = og::exhaustive_search(graph, budget,
                                          symmetry ? og::SymmetryBreaking::Complement : og::SymmetryBreaking::None);
        }
        py::dict out;
        out["status"] = std::string(og::to_string(outcome.status));
        out["labels"] = outcome.labeling ? py::cast(to_dict(graph, *outcome.labeling)) : py::none();
        out["nodes_expanded"] = outcome.stats.nodes_expanded;
        out["assignments_tried"] = outcome.stats.assignments_tried;
        return out;
      },
      py::arg("graph"), py::arg("max_nodes") = og::SearchBudget{}.max_nodes, py::arg("timeout_ms") = py::none(),
      py::arg("symmetry") = true);

  mod.def(
      "to_json",
      [](const og::GraphTopology& graph, const LabelDict& labels) { return og::to_json(graph, from_dict(labels)); },
      py::arg("graph"), py::arg("labels"));
  mod.def(
      "from_json",
      [](const std::string& text) {
        og::LabeledGraph doc = og::parse_labeling_json(text);
        LabelDict labels = to_dict(doc.topology, doc.labeling);
        return std::make_pair(std::move(doc.topology), std::move(labels));
      },
      py::arg("text"), "Parse a labeling document into (Graph, labels)");
}
