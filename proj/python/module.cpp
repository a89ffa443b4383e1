#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hgspec/canonical.hpp"
#include "hgspec/constructions.hpp"
#include "hgspec/enumeration.hpp"
#include "hgspec/errors.hpp"
#include "hgspec/io.hpp"
#include "hgspec/spectral.hpp"

namespace py = pybind11;
using namespace hgspec;

namespace {

SolverConfig make_config(int restarts, std::size_t max_iters,
                         std::uint64_t seed) {
  SolverConfig cfg;
  cfg.restarts = restarts;
  cfg.max_iters = max_iters;
  cfg.seed = seed;
  return cfg;
}

std::vector<double> values(const VertexVector &x) { return x.data(); }

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Least H-eigenvalues of even-uniform hypergraphs";
  m.attr("__version__") = "0.1.0";

  auto domain = py::register_exception<DomainError>(m, "DomainError",
                                                    PyExc_ValueError);
  py::register_exception<UnsupportedUniformity>(m, "UnsupportedUniformity",
                                                domain.ptr());
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError",
                                            PyExc_RuntimeError);

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<std::size_t, int, std::vector<Edge>>(), py::arg("n"),
           py::arg("k"), py::arg("edges"))
      .def_property_readonly("n", &Hypergraph::num_vertices)
      .def_property_readonly("k", &Hypergraph::uniformity)
      .def_property_readonly("edges", &Hypergraph::edges)
      .def("num_edges", &Hypergraph::num_edges)
      .def("degree", [](const Hypergraph &g, Vertex v) { return degree(g, v); })
      .def("is_connected", [](const Hypergraph &g) { return is_connected(g); })
      .def("is_hypertree", [](const Hypergraph &g) { return is_hypertree(g); })
      .def("__eq__", [](const Hypergraph &a, const Hypergraph &b) { return a == b; })
      .def("__repr__", [](const Hypergraph &g) {
        return "Hypergraph(n=" + std::to_string(g.num_vertices()) +
               ", k=" + std::to_string(g.uniformity()) +
               ", m=" + std::to_string(g.num_edges()) + ")";
      });

  py::class_<EigenResult>(m, "EigenResult")
      .def_readonly("value", &EigenResult::lambda)
      .def_property_readonly("vector",
                             [](const EigenResult &r) { return values(r.vector); })
      .def_readonly("residual", &EigenResult::residual)
      .def_readonly("converged", &EigenResult::converged)
      .def_readonly("restarts_used", &EigenResult::restarts_used)
      .def_readonly("iterations", &EigenResult::iterations);

  m.def("hyperstar", [](std::size_t edges, int k) { return hyperstar(edges, k).graph; },
        py::arg("m"), py::arg("k"));
  m.def("complete_hypergraph", &complete_hypergraph, py::arg("n"), py::arg("k"));
  m.def("kth_power_of_graph", &kth_power_of_graph, py::arg("edges"), py::arg("k"));
  m.def("blowup_power", &blowup_power, py::arg("edges"), py::arg("k"));
  m.def("cycle_graph", &cycle_graph, py::arg("length"));

  m.def("least_h_eigenvalue",
        [](const Hypergraph &g, int restarts, std::size_t max_iters,
           std::uint64_t seed) {
          py::gil_scoped_release release;
          return least_h_eigenvalue(g, make_config(restarts, max_iters, seed));
        },
        py::arg("g"), py::arg("restarts") = SolverConfig{}.restarts,
        py::arg("max_iters") = SolverConfig{}.max_iters, py::arg("seed") = 0);
  m.def("spectral_radius",
        [](const Hypergraph &g) {
          py::gil_scoped_release release;
          return spectral_radius(g);
        },
        py::arg("g"));
  m.def("rayleigh",
        [](const Hypergraph &g, std::vector<double> x) {
          return rayleigh(g, VertexVector(std::move(x)));
        },
        py::arg("g"), py::arg("x"));
  m.def("tensor_apply",
        [](const Hypergraph &g, std::vector<double> x) {
          return values(tensor_apply(g, VertexVector(std::move(x))));
        },
        py::arg("g"), py::arg("x"));

  m.def("find_odd_bipartition",
        [](const Hypergraph &g) -> std::optional<std::vector<int>> {
          if (auto b = find_odd_bipartition(g))
            return b->side;
          return std::nullopt;
        },
        py::arg("g"), "Side (0/1) per vertex, or None.");
  m.def("are_isomorphic", &are_isomorphic);
  m.def("canonical_edges",
        [](const Hypergraph &g) { return canonical_form(g).edges; });
  m.def("enumerate_hypertrees", &enumerate_hypertrees, py::arg("m"), py::arg("k"));
  m.def("enumerate_family", &enumerate_family, py::arg("g0"), py::arg("m"));

  m.def("parse_hypergraph",
        [](const std::string &text) { return parse_hypergraph(text); });
  m.def("format_hypergraph", &format_hypergraph);
}
