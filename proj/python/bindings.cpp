#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tristeiner/analytic.hpp"
#include "tristeiner/errors.hpp"
#include "tristeiner/evolve.hpp"
#include "tristeiner/oracle.hpp"

namespace py = pybind11;
using namespace tristeiner;

namespace {

std::string kind_name(const TriangleClass& c) {
  if (const auto* w = std::get_if<WideAngle>(&c)) {
    return "wide_" + std::string(vertex_name(w->vertex));
  }
  return "interior";
}

py::dict phase_dict(const Phase& p) {
  py::dict d;
  d["tag"] = p.tag();
  d["kind"] = phase_tag(p.kind);
  if (p.kind == PhaseKind::TwoAnchor) d["pinned"] = std::string(vertex_name(p.pinned));
  if (p.kind == PhaseKind::OneAnchor) {
    d["pinned_pair"] = py::make_tuple(std::string(vertex_name(p.pinned_pair[0])),
                                      std::string(vertex_name(p.pinned_pair[1])));
  }
  if (p.kind == PhaseKind::BelowTree) d["sides"] = p.sides;
  return d;
}

TerminalTriangle make_triangle(const std::array<std::array<double, 2>, 3>& v) {
  return TerminalTriangle({v[0][0], v[0][1]}, {v[1][0], v[1][1]}, {v[2][0], v[2][1]});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Budget-constrained Steiner networks over three terminals";

  py::register_exception<DegenerateGeometry>(m, "DegenerateGeometry", PyExc_ValueError);
  py::register_exception<OutOfRange>(m, "OutOfRange", PyExc_ValueError);
  py::register_exception<RootFindingFailure>(m, "RootFindingFailure", PyExc_RuntimeError);
  py::register_exception<NoConvergence>(m, "NoConvergence", PyExc_RuntimeError);

  py::class_<Point>(m, "Point")
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def_readwrite("x", &Point::x)
      .def_readwrite("y", &Point::y)
      .def("__iter__", [](const Point& p) { return py::iter(py::make_tuple(p.x, p.y)); })
      .def("__repr__", [](const Point& p) {
        return "Point(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
      });

  py::class_<TerminalTriangle>(m, "TerminalTriangle")
      .def(py::init<Point, Point, Point>(), py::arg("a"), py::arg("b"), py::arg("c"))
      .def(py::init(&make_triangle), py::arg("vertices"))
      .def_property_readonly("a", &TerminalTriangle::a)
      .def_property_readonly("b", &TerminalTriangle::b)
      .def_property_readonly("c", &TerminalTriangle::c)
      .def("angle", [](const TerminalTriangle& t, int i) { return t.angle(vertex(i)); })
      .def("perimeter", &TerminalTriangle::perimeter)
      .def("shortest_side", &TerminalTriangle::shortest_side);

  py::class_<Network>(m, "Network")
      .def_property_readonly("anchors", &Network::anchors)
      .def_property_readonly("edges", &Network::edges)
      .def_property_readonly("anchor_count", &Network::anchor_count)
      .def("total_length", [](const Network& n) { return total_length(n); })
      .def("objective", [](const Network& n) { return evaluate(n).j; })
      .def("distances", [](const Network& n) {
        const Objective o = evaluate(n);
        return py::make_tuple(o.d_ab, o.d_bc, o.d_ac);
      })
      .def("violations", [](const Network& n, double tol) {
        std::vector<std::string> out;
        for (const Violation& v : validate(n, tol)) out.emplace_back(violation_name(v.kind));
        return out;
      }, py::arg("tol") = 1e-9)
      .def_property_readonly("structure",
                             [](const Network& n) { return phase_tag(structure_of(n)); });

  m.def("classify", [](const TerminalTriangle& t) { return kind_name(classify(t)); });

  m.def("steiner_point", [](const TerminalTriangle& t) {
    const SteinerInfo s = steiner_info(t);
    return py::make_tuple(s.point, s.l_st);
  }, "Steiner point and Steiner-tree length.");

  m.def("thresholds", [](const TerminalTriangle& t) {
    const Thresholds th = thresholds(t);
    py::dict d;
    d["l_min_edge"] = th.l_min_edge;
    d["l_st"] = th.l_st;
    d["l1"] = th.l1 ? py::cast(*th.l1) : py::none();
    d["l2"] = th.l2;
    d["l3"] = th.l3;
    d["first_pinned"] = std::string(vertex_name(th.first_pinned));
    d["second_pinned"] = std::string(vertex_name(th.second_pinned));
    d["last"] = std::string(vertex_name(th.last));
    return d;
  });

  m.def("solve", [](const TerminalTriangle& t, double budget) {
    const SolveResult r = solve(t, budget);
    py::dict d;
    d["network"] = r.network;
    d["phase"] = phase_dict(r.phase);
    d["l_used"] = r.l_used;
    d["j"] = r.objective.j;
    d["slope"] = r.slope;
    return d;
  }, py::arg("triangle"), py::arg("budget"));

  m.def("sweep", [](const TerminalTriangle& t, double l_from, double l_to, int n) {
    const EvolutionTrace trace = sweep(t, l_from, l_to, n);
    py::list rows;
    for (const SweepSample& s : trace.samples) {
      rows.append(py::make_tuple(s.l, s.j, s.phase.tag(), s.slope));
    }
    return rows;
  }, py::arg("triangle"), py::arg("l_from"), py::arg("l_to"), py::arg("samples"),
     "Rows of (l, j, phase, slope).");

  m.def("oracle_solve", [](const TerminalTriangle& t, double budget, int seed) {
    const oracle::OracleResult r = oracle::solve(t, budget, seed);
    py::dict d;
    d["network"] = r.best;
    d["j"] = r.j;
    d["topology"] = r.topology.name();
    d["feasible"] = r.feasible;
    return d;
  }, py::arg("triangle"), py::arg("budget"), py::arg("seed") = 0);
}
