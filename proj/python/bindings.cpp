#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "planedeg/analysis.hpp"
#include "planedeg/degeneracy.hpp"
#include "planedeg/reducer.hpp"
#include "planedeg/structure.hpp"
#include "planedeg/toolkit.hpp"

namespace py = pybind11;
using namespace planedeg;

namespace {

py::dict solution_dict(const Solution& s) {
    py::dict d;
    d["kept"] = s.kept;
    d["order"] = s.order;
    d["k"] = s.k;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "induced 2-degenerate subgraphs of triangle-free plane graphs";

    py::register_exception<Error>(m, "PlanedegError");

    py::class_<PlaneGraph>(m, "PlaneGraph")
        .def_static("from_rotation", &PlaneGraph::from_rotation, py::arg("rotation"),
                    "Build from clockwise neighbor lists; validates the embedding.")
        .def_static("from_json", &PlaneGraph::from_json, py::arg("text"))
        .def("to_json", &PlaneGraph::to_json)
        .def_property_readonly("n", &PlaneGraph::n)
        .def_property_readonly("m", &PlaneGraph::m)
        .def_property_readonly("rotation", &PlaneGraph::rotation)
        .def("degree", &PlaneGraph::degree, py::arg("v"))
        .def("adjacent", &PlaneGraph::adjacent, py::arg("u"), py::arg("v"))
        .def("face_count", &PlaneGraph::face_count)
        .def("faces",
             [](const PlaneGraph& g) {
                 std::vector<std::vector<int>> walks;
                 for (const Face& f : g.faces()) walks.push_back(f.walk);
                 return walks;
             },
             "Boundary walks, one vertex sequence per face.")
        .def("is_triangle_free", &PlaneGraph::is_triangle_free)
        .def("component_count", &PlaneGraph::component_count)
        .def("face_distance",
             [](const PlaneGraph& g, int f1, int f2) { return face_distance(g, f1, f2); },
             py::arg("f1"), py::arg("f2"))
        .def("face_vertex_distance",
             [](const PlaneGraph& g, int f, int v) { return face_vertex_distance(g, f, v); },
             py::arg("f"), py::arg("v"))
        .def("delete_vertices",
             [](const PlaneGraph& g, const std::vector<int>& x) {
                 auto r = delete_vertices(g, x);
                 return py::make_tuple(r.graph, r.kept_ids, r.removed_edges, r.components);
             },
             py::arg("vertices"),
             "Returns (graph, kept_ids, removed_edges, components).")
        .def("contract_edge",
             [](const PlaneGraph& g, int u, int v) {
                 auto r = contract_edge(g, u, v);
                 return py::make_tuple(r.graph, r.merged, r.orig_of, r.result_triangle_free);
             },
             py::arg("u"), py::arg("v"),
             "Returns (graph, merged_vertex, orig_of, triangle_free).");

    m.def("certify_k_degenerate",
          [](const PlaneGraph& g, int k) {
              auto r = certify_k_degenerate(g.skeleton(), k);
              py::dict d;
              d["ok"] = r.ok;
              d["solution"] = solution_dict(r.solution);
              d["core_witness"] = r.core_witness;
              return d;
          },
          py::arg("graph"), py::arg("k"));
    m.def("degeneracy", [](const PlaneGraph& g) { return degeneracy(g.skeleton()); },
          py::arg("graph"));
    m.def("max_induced_kdeg_exact",
          [](const PlaneGraph& g, int k, std::uint64_t budget) {
              auto r = max_induced_kdeg_exact(g.skeleton(), k, budget);
              py::dict d;
              d["size"] = r.best.size();
              d["optimal"] = r.optimal;
              d["nodes"] = r.nodes;
              d["solution"] = solution_dict(r.best);
              return d;
          },
          py::arg("graph"), py::arg("k") = 2, py::arg("budget") = kDefaultExactBudget);
    m.def("brute_force_oracle",
          [](const PlaneGraph& g, int k) { return brute_force_oracle(g.skeleton(), k); },
          py::arg("graph"), py::arg("k") = 2);

    m.def("count_difficult",
          [](const PlaneGraph& g) {
              auto r = count_difficult(g.skeleton());
              py::dict d;
              d["lambda"] = r.lambda;
              d["components"] = r.components;
              std::vector<bool> flags(r.component_difficult.begin(),
                                      r.component_difficult.end());
              d["component_difficult"] = flags;
              return d;
          },
          py::arg("graph"));
    m.def("find_special_vertex",
          [](const PlaneGraph& g) -> py::object {
              auto v = find_special_vertex(g);
              if (!v) return py::none();
              return py::int_(*v);
          },
          py::arg("graph"));

    m.def("bound_value",
          [](long long n, long long m_, long long lam) {
              return bound_value(n, m_, lam).str();
          },
          py::arg("n"), py::arg("m"), py::arg("lam"));
    m.def("construct_2degenerate",
          [](const PlaneGraph& g) {
              auto r = construct_2degenerate(g);
              py::dict d;
              d["solution"] = solution_dict(r.solution);
              d["size"] = r.solution.size();
              d["steps"] = r.trace.ledger.size();
              d["fallback_lifts"] = r.trace.fallback_lifts;
              d["trace_json"] = r.trace.to_json();
              return d;
          },
          py::arg("graph"));

    m.def("threefaces_exact",
          [](const PlaneGraph& g) {
              auto r = threefaces_exact(g);
              py::dict d;
              d["rho3"] = r.rho3;
              d["witness"] = r.witness;
              d["optimal"] = r.optimal;
              return d;
          },
          py::arg("graph"));
    m.def("degree3_census",
          [](const PlaneGraph& g) { return degree3_census(g.skeleton()); }, py::arg("graph"));
    m.def("layer_profile",
          [](const PlaneGraph& g, int face, int depth) {
              return layer_profile(g, face, depth).to_json();
          },
          py::arg("graph"), py::arg("face") = 0, py::arg("depth") = 9,
          "Returns the profile as a JSON string.");
    m.def("cylgrid_solution",
          [](int c, int k) { return solution_dict(cylgrid_solution(c, k)); }, py::arg("c"),
          py::arg("k"));
    m.def("discharge_section2",
          [](const PlaneGraph& g, int outer) { return discharge_section2(g, outer).to_json(); },
          py::arg("graph"), py::arg("outer_face") = 0);
    m.def("discharge_section3",
          [](const PlaneGraph& g, const std::vector<int>& faces) {
              return discharge_section3(g, faces).to_json();
          },
          py::arg("graph"), py::arg("faces"));
    m.def("bigO_bound_report",
          [](const PlaneGraph& g) { return bigO_bound_report(g).to_json(); }, py::arg("graph"));

    m.def("gen_cube", &gen_cube);
    m.def("gen_cylindrical_grid", &gen_cylindrical_grid, py::arg("c"), py::arg("k"));
    m.def("gen_quadrangulation", &gen_quadrangulation, py::arg("seed"), py::arg("target_n"));
    m.def("gen_difficult",
          [](const std::string& spec) { return gen_difficult(DifficultSpec::parse(spec)); },
          py::arg("spec"));
    m.def("parse_planar_code",
          [](py::bytes data) {
              std::string s = data;
              return parse_planar_code(std::vector<std::uint8_t>(s.begin(), s.end()));
          },
          py::arg("data"));
    m.def("write_planar_code",
          [](const std::vector<PlaneGraph>& graphs) {
              auto bytes = write_planar_code(graphs);
              return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
          },
          py::arg("graphs"));

    m.attr("BIGO_COEFFICIENT") = kBigOCoefficient;
    m.attr("SEPARATOR_THRESHOLD") = kSeparatorThreshold;
}
