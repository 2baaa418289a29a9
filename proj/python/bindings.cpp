#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blockbetti/binomial_betti.hpp"
#include "blockbetti/classify.hpp"
#include "blockbetti/errors.hpp"
#include "blockbetti/groebner.hpp"
#include "blockbetti/harness.hpp"
#include "blockbetti/json_io.hpp"
#include "blockbetti/monomial_betti.hpp"

namespace py = pybind11;
using namespace blockbetti;

namespace {

// Results cross the boundary as JSON text; the Python side decodes them.
std::string dump(const Json& j) { return j.dump(); }

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<int, int>> zero_based;
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n) throw PreconditionError("edge endpoint outside 1.." + std::to_string(n));
    zero_based.emplace_back(u - 1, v - 1);
  }
  return Graph(n, zero_based);
}

Graph fixture(const std::string& name) { return named_graph(name); }

std::string betti(const Graph& g, const std::string& side, std::uint32_t p) {
  if (side != "monomial" && side != "binomial" && side != "both")
    throw PreconditionError("side must be monomial, binomial or both");
  Json out;
  out["graph"] = graph_json(g);
  if (side != "binomial") {
    out["monomial"] = table_json(betti_monomial(initial_ideal(g), p));
  }
  if (side != "monomial") {
    BinomialBetti b = betti_binomial(g, p);
    out["binomial"] = table_json(b.table);
    out["binomial"]["mode"] = b.support == SupportMode::kExhaustive ? "exhaustive" : "initial-support";
  }
  return dump(out);
}

std::vector<std::string> verify(const std::string& corpus, const std::vector<std::string>& checks, std::uint64_t seed,
                                int threads) {
  HarnessConfig c;
  c.seed = seed;
  c.threads = threads;
  SuiteResult r = run_suite(corpus, checks, c);
  std::vector<std::string> lines;
  for (const auto& rep : r.reports) lines.push_back(dump(rep.to_json()));
  return lines;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Block graphs, binomial edge ideals and graded Betti tables (JSON-returning core).";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"), "Vertices 1..n; edges as 1-based pairs.")
      .def_static("named", &fixture, py::arg("name"))
      .def_static("parse", [](const std::string& text) { return parse_graph(text); }, py::arg("text"))
      .def_static("from_graph6", [](const std::string& line) { return parse_graph6(line); }, py::arg("line"))
      .def_property_readonly("order", &Graph::order)
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def("__repr__", [](const Graph& g) { return "<Graph " + to_graph6(g) + ">"; });

  m.def("analyze", [](const Graph& g) { return dump(analysis_json(g)); }, py::arg("graph"));
  m.def("classify", [](const Graph& g) { return dump(verdict_json(classify(g))); }, py::arg("graph"));
  m.def("groebner", [](const Graph& g) { return dump(groebner_json(g, initial_ideal(g))); }, py::arg("graph"));
  m.def("initial_equals_buchberger", [](const Graph& g) { return initial_ideal(g) == buchberger_initial_ideal(g); },
        py::arg("graph"));
  m.def("betti", &betti, py::arg("graph"), py::arg("side") = "both", py::arg("p") = 2);
  m.def("verify", &verify, py::arg("corpus"), py::arg("checks"), py::arg("seed") = 0, py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("known_checks", &known_checks);
}
