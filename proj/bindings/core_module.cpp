// Python bindings for the core operations: graph6 parsing, classification,
// the heuristic and exact Frank number 2 procedures, the flow-based
// orientation constructions, certificate verification, and the small
// brute-force oracle.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frankno/error.hpp"
#include "frankno/exact.hpp"
#include "frankno/flows.hpp"
#include "frankno/graph.hpp"
#include "frankno/heuristic.hpp"
#include "frankno/oracle.hpp"
#include "frankno/orientation.hpp"
#include "frankno/topology.hpp"

namespace py = pybind11;
using namespace frankno;

namespace {

std::string direction_bits(const Orientation& o) {
  std::string bits(o.size(), '0');
  for (int e = 0; e < o.size(); ++e) {
    if (o.reversed(e)) bits[e] = '1';
  }
  return bits;
}

const char* witness_kind_name(WitnessKind k) {
  return k == WitnessKind::two_odd ? "two-odd" : "two-odd-one-even";
}

const char* group_name(FlowGroup g) {
  return g == FlowGroup::z2xz2 ? "Z2xZ2" : "Z2xZ3";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Frank number 2 decision procedures and orientation certificates for "
      "3-edge-connected cubic graphs";

  static py::exception<error> frankno_error(m, "FranknoError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const error& e) {
      // what() already starts with the errc name, e.g. "PreconditionViolated:
      // ...", so the kind stays machine-readable across the language border.
      PyErr_SetString(frankno_error.ptr(), e.what());
    }
  });

  py::class_<Graph>(m, "Graph",
                    "Immutable simple undirected graph; edges are indexed "
                    "lexicographically by their (u, v) endpoints with u < v.")
      .def(py::init<>())
      .def_static("from_edges", &Graph::from_edges, py::arg("n"),
                  py::arg("edges"))
      .def_property_readonly("n", &Graph::n, "vertex count")
      .def_property_readonly("m", &Graph::m, "edge count")
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             out.reserve(g.m());
             for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("edge_index", &Graph::edge_index, py::arg("u"), py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("degree", &Graph::degree, py::arg("v"))
      .def("neighbors", &Graph::neighbors, py::arg("v"))
      .def("is_cubic", &Graph::is_cubic)
      .def(
          "__eq__",
          [](const Graph& a, const Graph& b) { return a == b; },
          py::is_operator())
      .def("__repr__", [](const Graph& g) {
        return "Graph(graph6=\"" + write_graph6(g) + "\")";
      });

  m.def("parse_graph6", &parse_graph6, py::arg("line"),
        "Parse one graph6 line (an optional >>graph6<< header is skipped).");
  m.def("write_graph6", &write_graph6, py::arg("g"));

  py::class_<InstanceClass>(m, "InstanceClass")
      .def_readonly("is_cubic", &InstanceClass::is_cubic)
      .def_readonly("is_connected", &InstanceClass::is_connected)
      .def_readonly("is_3_edge_connected", &InstanceClass::is_3_edge_connected)
      .def_readonly("is_cyclically_4_edge_connected",
                    &InstanceClass::is_cyclically_4_edge_connected)
      .def_readonly("is_3_edge_colourable",
                    &InstanceClass::is_3_edge_colourable,
                    "None unless the graph is cubic");
  m.def("classify", &classify, py::arg("g"));

  py::class_<Orientation>(m, "Orientation",
                          "Total orientation; edge e with endpoints u < v "
                          "points u->v when reversed(e) is False.")
      .def(py::init<int>(), py::arg("m"))
      .def("__len__", &Orientation::size)
      .def("reversed", &Orientation::reversed, py::arg("e"))
      .def("set_reversed", &Orientation::set_reversed, py::arg("e"),
           py::arg("r"))
      .def("tail", &Orientation::tail, py::arg("g"), py::arg("e"))
      .def("head", &Orientation::head, py::arg("g"), py::arg("e"))
      .def("directions", &direction_bits,
           "Direction bits in edge-index order, as in certificate JSON.")
      .def(
          "__eq__",
          [](const Orientation& a, const Orientation& b) { return a == b; },
          py::is_operator());
  m.def("reverse", &reverse, py::arg("o"));
  m.def("is_strong", &is_strong, py::arg("g"), py::arg("o"));
  m.def("is_deletable", &is_deletable, py::arg("g"), py::arg("o"),
        py::arg("e"),
        "True iff the arc can be removed with the orientation staying "
        "strongly connected.");
  m.def("deletable_edges", &deletable_edges, py::arg("g"), py::arg("o"));

  py::class_<FrankCertificate>(m, "FrankCertificate")
      .def_readonly("method", &FrankCertificate::method)
      .def_readonly("orientations", &FrankCertificate::orientations)
      .def_readonly("deletable", &FrankCertificate::deletable);

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("ok", &VerifyReport::ok)
      .def_readonly("first_uncovered_edge", &VerifyReport::first_uncovered_edge)
      .def_readonly("reason", &VerifyReport::reason)
      .def("__bool__", [](const VerifyReport& r) { return r.ok; });
  m.def("verify_certificate", &verify_certificate, py::arg("g"),
        py::arg("cert"),
        "Recompute every deletable set and check the union covers all edges.");
  m.def("certificate_to_json", &certificate_to_json, py::arg("g"),
        py::arg("cert"));
  m.def("certificate_from_json", &certificate_from_json, py::arg("text"),
        "Returns (graph, certificate).");

  // --- topology ------------------------------------------------------------
  m.def("edge_connectivity_at_least", &edge_connectivity_at_least,
        py::arg("g"), py::arg("k"));
  m.def("cyclic_edge_connectivity_at_least",
        &cyclic_edge_connectivity_at_least, py::arg("g"), py::arg("k"),
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "three_edge_colouring",
      [](const Graph& g) { return three_edge_colouring(g); }, py::arg("g"),
      "First proper 3-edge-colouring (colour per edge index), or None.");
  m.def(
      "oddness", [](const Graph& g) { return oddness(g); }, py::arg("g"),
      py::call_guard<py::gil_scoped_release>());

  // --- heuristic -------------------------------------------------------------
  py::class_<HeuristicWitness>(m, "HeuristicWitness")
      .def_property_readonly(
          "kind",
          [](const HeuristicWitness& w) { return witness_kind_name(w.kind); })
      .def_readonly("f", &HeuristicWitness::f,
                    "perfect matching whose complement is the 2-factor")
      .def_readonly("n1", &HeuristicWitness::n1)
      .def_readonly("n2", &HeuristicWitness::n2)
      .def_readonly("w", &HeuristicWitness::w)
      .def_readonly("x1", &HeuristicWitness::x1)
      .def_readonly("x2", &HeuristicWitness::x2)
      .def_readonly("y1", &HeuristicWitness::y1)
      .def_readonly("y2", &HeuristicWitness::y2);
  m.def("heuristic_frank2", &heuristic_frank2, py::arg("g"),
        py::call_guard<py::gil_scoped_release>(),
        "Scan 2-factors for a certified configuration; None on a miss. "
        "Requires a cubic, cyclically 4-edge-connected graph.");
  m.def("certificate_from_witness", &certificate_from_witness, py::arg("g"),
        py::arg("witness"));

  // --- exact -----------------------------------------------------------------
  py::class_<ExactStats>(m, "ExactStats")
      .def_readonly("orientations_scanned", &ExactStats::orientations_scanned)
      .def_readonly("strong_orientations", &ExactStats::strong_orientations)
      .def_readonly("searches_run", &ExactStats::searches_run)
      .def_readonly("nodes", &ExactStats::nodes)
      .def_readonly("propagations", &ExactStats::propagations);
  py::class_<ExactResult>(m, "ExactResult")
      .def_readonly("frank2", &ExactResult::frank2)
      .def_readonly("certificate", &ExactResult::certificate)
      .def_readonly("stats", &ExactResult::stats)
      .def("__bool__", [](const ExactResult& r) { return r.frank2; });
  m.def(
      "exact_frank2",
      [](const Graph& g, long long max_nodes, long long timeout_ms) {
        return exact_frank2(g, ExactOptions{max_nodes, timeout_ms});
      },
      py::arg("g"), py::arg("max_nodes") = 0, py::arg("timeout_ms") = 0,
      py::call_guard<py::gil_scoped_release>(),
      "Decide whether two orientations cover every edge; requires a cubic "
      "3-edge-connected graph.  Budgets of 0 mean unlimited.");

  // --- flows -----------------------------------------------------------------
  py::class_<IntFlow>(m, "IntFlow")
      .def_readonly("orientation", &IntFlow::orientation)
      .def_readonly("value", &IntFlow::value);
  py::class_<GroupFlow>(m, "GroupFlow")
      .def_property_readonly(
          "group", [](const GroupFlow& f) { return group_name(f.group); })
      .def_readonly("orientation", &GroupFlow::orientation)
      .def_readonly("value", &GroupFlow::value);
  py::enum_<FlowEdgeClass>(m, "FlowEdgeClass")
      .value("d_only", FlowEdgeClass::d_only)
      .value("a_only", FlowEdgeClass::a_only)
      .value("a_same", FlowEdgeClass::a_same)
      .value("a_opposite", FlowEdgeClass::a_opposite)
      .value("b_only", FlowEdgeClass::b_only)
      .value("b_same", FlowEdgeClass::b_same)
      .value("b_opposite", FlowEdgeClass::b_opposite)
      .value("c_only", FlowEdgeClass::c_only)
      .value("c_same", FlowEdgeClass::c_same)
      .value("c_opposite", FlowEdgeClass::c_opposite);

  m.def("find_z2z2_flow", &find_z2z2_flow, py::arg("g"),
        py::call_guard<py::gil_scoped_release>(),
        "Nowhere-zero (Z2 x Z2)-flow, or None.");
  m.def("find_z2z3_flow", &find_z2z3_flow, py::arg("g"),
        py::call_guard<py::gil_scoped_release>(),
        "Nowhere-zero (Z2 x Z3)-flow, or None; exists for every "
        "3-edge-connected graph.");
  m.def("verify_flow",
        [](const Graph& g, const IntFlow& fl) { return verify_flow(g, fl); },
        py::arg("g"), py::arg("flow"));
  m.def("is_nowhere_zero",
        [](const IntFlow& fl) { return is_nowhere_zero(fl); },
        py::arg("flow"));
  m.def("is_all_positive", &is_all_positive, py::arg("flow"));
  m.def("flow_guaranteed_deletable", &flow_guaranteed_deletable, py::arg("g"),
        py::arg("flow"),
        "Edges an all-positive nowhere-zero flow guarantees deletable: "
        "value-1 edges and strong 2-edges.");
  m.def(
      "orientations_from_4flow",
      [](const Graph& g, const GroupFlow& gf) {
        std::vector<IntFlow> flows;
        FrankCertificate c = orientations_from_4flow(g, gf, &flows);
        return py::make_tuple(c, flows);
      },
      py::arg("g"), py::arg("flow"),
      "Two-orientation certificate from a nowhere-zero (Z2 x Z2)-flow; "
      "returns (certificate, [flow1, flow2]).");
  m.def(
      "four_orientations",
      [](const Graph& g, const GroupFlow& gf) {
        std::vector<IntFlow> flows;
        std::vector<FlowEdgeClass> classes;
        FrankCertificate c = four_orientations(g, gf, &flows, &classes);
        return py::make_tuple(c, flows, classes);
      },
      py::arg("g"), py::arg("flow"),
      "Four-orientation certificate from a nowhere-zero (Z2 x Z3)-flow; "
      "returns (certificate, flows, per-edge classes).");

  // --- brute-force oracle ------------------------------------------------------
  m.def("deletable_by_definition", &deletable_by_definition, py::arg("g"),
        py::arg("o"), py::arg("e"),
        "Deletability by dropping the edge and re-testing strong "
        "connectivity; independent of is_deletable.");
  m.def("frank_number_bruteforce", &frank_number_bruteforce, py::arg("g"),
        py::arg("kmax"), py::call_guard<py::gil_scoped_release>(),
        "Smallest k <= kmax whose orientations cover everything, else "
        "kmax + 1.  Desk-sized graphs only (hard edge caps).");
}
