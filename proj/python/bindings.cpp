#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sspec/closed_forms.hpp"
#include "sspec/cohomology.hpp"
#include "sspec/errors.hpp"
#include "sspec/generators.hpp"
#include "sspec/graph6.hpp"
#include "sspec/report.hpp"
#include "sspec/spectra.hpp"

namespace py = pybind11;
using namespace sspec;

namespace {

IntMatrix laplacian(const Graph& g, int dim, const std::string& kind) {
  CliqueComplex x(g, kind == "down" ? dim : dim + 1);
  if (kind == "up") return up_laplacian(x, dim);
  if (kind == "down") return down_laplacian(x, dim);
  if (kind == "total") return total_laplacian(x, dim);
  throw InputError("laplacian must be up, down or total");
}

// Results cross the boundary as JSON text; the Python wrapper decodes them.
std::string spectrum_json(const Graph& g, int dim, const std::string& kind) {
  return to_json(certified_spectrum(laplacian(g, dim, kind))).dump();
}

std::string h1_json(const Graph& g, std::size_t max_cycle_len) {
  H1Report h = h1_dimension(CliqueComplex(g, 2));
  CycleSearchLimits lim;
  lim.max_len = max_cycle_len;
  h.checker_verdicts = run_checkers(g, lim);
  return to_json(h).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Clique-complex Laplacian spectra and first cohomology";
  m.attr("__version__") = kToolVersion;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def_static("from_edges",
                  [](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("is_connected", &Graph::is_connected)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "<Graph " + write_graph6(g) + ">"; });

  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
  m.def("write_graph6", &write_graph6);
  m.def("generate", [](const std::string& spec) { return generate(spec); });
  m.def("complement", &complement);

  m.def("coboundary", [](const Graph& g, int i) { return coboundary(CliqueComplex(g, std::max(i + 1, 0)), i).to_dense(); });
  m.def("laplacian", [](const Graph& g, int dim, const std::string& kind) { return laplacian(g, dim, kind).to_dense(); },
        py::arg("graph"), py::arg("dim") = 1, py::arg("kind") = "up");
  m.def("_spectrum_json", &spectrum_json);
  m.def("_h1_json", &h1_json);
  m.def("_predict_triangular_L1", [](int n) { return to_json(predict_triangular_L1(n)).dump(); });
  m.def("cycle_vector", [](const Graph& g, const std::vector<Vertex>& verts) {
    CliqueComplex x(g, 2);
    return cycle_vector(x, OrderedCycle::make(g, verts)).to_dense(x.count(1));
  });
}
