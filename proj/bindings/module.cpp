#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conepack/hypgeom.hpp"
#include "conepack/json_io.hpp"
#include "conepack/layout.hpp"
#include "conepack/limit.hpp"
#include "conepack/mesh.hpp"
#include "conepack/solver.hpp"

namespace py = pybind11;
using namespace conepack;

PYBIND11_MODULE(_core, m) {
  m.doc() = "hyperbolic circle packings with prescribed cone angles";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<SolveFailure>(m, "SolveError", PyExc_RuntimeError);

  py::class_<Triangulation>(m, "Triangulation")
      .def(py::init<>())
      .def_readwrite("vertices", &Triangulation::vertices)
      .def_readwrite("faces", &Triangulation::faces)
      .def_readwrite("marks", &Triangulation::marks)
      .def_readwrite("mark_angles", &Triangulation::mark_angles)
      .def_readwrite("declared_genus", &Triangulation::declared_genus)
      .def("has_vertex", &Triangulation::has_vertex)
      .def("is_marked", &Triangulation::is_marked)
      .def("__repr__", [](const Triangulation& t) {
        return "<Triangulation: " + std::to_string(t.vertices.size()) +
               " vertices, " + std::to_string(t.faces.size()) + " faces, " +
               std::to_string(t.marks.size()) + " marks>";
      });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("violations", &ValidationReport::violations)
      .def_readonly("genus", &ValidationReport::genus)
      .def_readonly("max_degree", &ValidationReport::max_degree)
      .def_readonly("num_edges", &ValidationReport::num_edges)
      .def("valid", &ValidationReport::valid)
      .def("summary", &ValidationReport::summary)
      .def("__bool__", &ValidationReport::valid);

  py::class_<PeripheralLoop>(m, "PeripheralLoop")
      .def(py::init<>())
      .def_readwrite("mark", &PeripheralLoop::mark)
      .def_readwrite("cycle", &PeripheralLoop::cycle);

  py::class_<AngleSpec>(m, "AngleSpec")
      .def(py::init<>())
      .def(py::init([](const std::map<int, double>& targets) {
             AngleSpec s;
             s.targets = targets;
             return s;
           }),
           py::arg("targets"))
      .def_readwrite("targets", &AngleSpec::targets)
      .def("target", &AngleSpec::target)
      .def_static("from_marks", &AngleSpec::from_marks)
      .def_static("uniform", &AngleSpec::uniform);

  py::class_<SolveConfig>(m, "SolveConfig")
      .def(py::init<>())
      .def_readwrite("tol_angle", &SolveConfig::tol_angle)
      .def_readwrite("max_iters", &SolveConfig::max_iters)
      .def_readwrite("radius_min", &SolveConfig::radius_min)
      .def_readwrite("radius_max", &SolveConfig::radius_max);

  py::class_<Label>(m, "Label")
      .def(py::init<>())
      .def_readwrite("radii", &Label::radii)
      .def_readwrite("residual", &Label::residual)
      .def_readwrite("iterations", &Label::iterations);

  py::class_<FeasibilityVerdict::ExcessEntry>(m, "ExcessEntry")
      .def_readonly("vertex", &FeasibilityVerdict::ExcessEntry::vertex)
      .def_readonly("excess", &FeasibilityVerdict::ExcessEntry::excess);

  py::class_<FeasibilityVerdict>(m, "FeasibilityVerdict")
      .def_readonly("orbchar", &FeasibilityVerdict::orbchar)
      .def_readonly("orbchar_ok", &FeasibilityVerdict::orbchar_ok)
      .def_readonly("singleton_violations", &FeasibilityVerdict::singleton_violations)
      .def_readonly("star_violations", &FeasibilityVerdict::star_violations)
      .def("feasible", &FeasibilityVerdict::feasible)
      .def("__bool__", &FeasibilityVerdict::feasible);

  py::class_<ExhaustionFamily>(m, "ExhaustionFamily")
      .def(py::init<>())
      .def_readwrite("base", &ExhaustionFamily::base)
      .def_readwrite("depths", &ExhaustionFamily::depths)
      .def_readwrite("theta", &ExhaustionFamily::theta);

  py::class_<LimitConfig>(m, "LimitConfig")
      .def(py::init<>())
      .def_readwrite("solve", &LimitConfig::solve)
      .def_readwrite("tol_limit", &LimitConfig::tol_limit)
      .def_readwrite("collapse_floor", &LimitConfig::collapse_floor)
      .def_readwrite("allow_large_angles", &LimitConfig::allow_large_angles)
      .def_readwrite("threads", &LimitConfig::threads);

  py::class_<DepthSolve>(m, "DepthSolve")
      .def_readonly("depth", &DepthSolve::depth)
      .def_readonly("complex", &DepthSolve::complex)
      .def_readonly("label", &DepthSolve::label)
      .def_readonly("core_vertices", &DepthSolve::core_vertices);

  py::class_<ExhaustionReport>(m, "ExhaustionReport")
      .def_readonly("stages", &ExhaustionReport::stages)
      .def_readonly("deltas", &ExhaustionReport::deltas)
      .def_readonly("min_radius", &ExhaustionReport::min_radius)
      .def_readonly("loop_lengths", &ExhaustionReport::loop_lengths)
      .def_readonly("verdict", &ExhaustionReport::verdict)
      .def_readonly("puncture_ids", &ExhaustionReport::puncture_ids)
      .def_readonly("note", &ExhaustionReport::note);

  py::class_<EdgePath>(m, "EdgePath")
      .def(py::init<>())
      .def(py::init([](const std::vector<int>& vertices, bool closed) {
             return EdgePath{vertices, closed};
           }),
           py::arg("vertices"), py::arg("closed") = false)
      .def_readwrite("vertices", &EdgePath::vertices)
      .def_readwrite("closed", &EdgePath::closed);

  py::class_<LimitLabel>(m, "LimitLabel")
      .def_readonly("radii", &LimitLabel::radii)
      .def_readonly("stability_band", &LimitLabel::stability_band)
      .def_readonly("new_vertices", &LimitLabel::new_vertices);

  py::class_<DevelopedCircle>(m, "DevelopedCircle")
      .def_readonly("vertex", &DevelopedCircle::vertex)
      .def_readonly("copy", &DevelopedCircle::copy)
      .def_readonly("center", &DevelopedCircle::center)
      .def_readonly("hyp_radius", &DevelopedCircle::hyp_radius)
      .def_readonly("euc_center", &DevelopedCircle::euc_center)
      .def_readonly("euc_radius", &DevelopedCircle::euc_radius);

  py::class_<LayoutConfig>(m, "LayoutConfig")
      .def(py::init<>())
      .def_readwrite("root_face", &LayoutConfig::root_face)
      .def_readwrite("fail_residual", &LayoutConfig::fail_residual);

  py::class_<PackingLayout>(m, "PackingLayout")
      .def_readonly("circles", &PackingLayout::circles)
      .def_readonly("face_circles", &PackingLayout::face_circles)
      .def_readonly("tree_edges", &PackingLayout::tree_edges)
      .def_readonly("max_residual", &PackingLayout::max_residual)
      .def_readonly("root_face", &PackingLayout::root_face);

  py::class_<LayoutVerification::Closure>(m, "Closure")
      .def_readonly("vertex", &LayoutVerification::Closure::vertex)
      .def_readonly("developed", &LayoutVerification::Closure::developed)
      .def_readonly("target", &LayoutVerification::Closure::target);

  py::class_<LayoutVerification>(m, "LayoutVerification")
      .def_readonly("max_residual", &LayoutVerification::max_residual)
      .def_readonly("closures", &LayoutVerification::closures)
      .def_readonly("max_closure_error", &LayoutVerification::max_closure_error)
      .def_readonly("euclidean_radii_ok", &LayoutVerification::euclidean_radii_ok);

  // mesh
  m.def("generate", &generate, py::arg("name"));
  m.def("generator_names", &generator_names);
  m.def("validate", &validate, py::arg("triangulation"));
  m.def("star_faces", &star_faces, py::arg("triangulation"), py::arg("subset"));
  m.def("barycentric_subdivide", &barycentric_subdivide, py::arg("triangulation"));
  m.def(
      "puncture_refine",
      [](const Triangulation& t, int depth) {
        RefinementResult r = puncture_refine(t, depth);
        return py::make_tuple(r.tri, r.levels);
      },
      py::arg("triangulation"), py::arg("depth"),
      "Returns (triangulation, peripheral systems per level).");
  m.def("cone_off", &cone_off, py::arg("triangulation"), py::arg("system"));
  m.def("isomorphic", &isomorphic, py::arg("a"), py::arg("b"),
        py::arg("respect_marks") = false);

  // angle spec
  m.def("orbifold_char", &orbifold_char, py::arg("triangulation"), py::arg("spec"));
  m.def("face_excess", &face_excess, py::arg("triangulation"), py::arg("spec"),
        py::arg("subset"));

  // hyperbolic kernel
  m.def("tangency_angle", &tangency_angle, py::arg("x"), py::arg("y"), py::arg("z"));
  m.def(
      "angle_sum",
      [](const Triangulation& t, const std::map<int, double>& radii, int v) {
        SurfaceIndex s(t);
        return angle_sum(s, radii, v);
      },
      py::arg("triangulation"), py::arg("radii"), py::arg("vertex"));
  m.def("triangle_area", &triangle_area, py::arg("a1"), py::arg("a2"), py::arg("a3"));
  m.def("ring_bound_H", &ring_bound_H, py::arg("k"));
  m.def("max_completed_degree", &max_completed_degree, py::arg("k"), py::arg("theta"));
  m.def("hyp_to_euc_radius", &hyp_to_euc_radius, py::arg("R"));
  m.def("euc_to_hyp_radius", &euc_to_hyp_radius, py::arg("r"));

  // solver
  m.def("check_feasible", &check_feasible, py::arg("triangulation"), py::arg("spec"));
  m.def("solve", &solve, py::arg("triangulation"), py::arg("spec"),
        py::arg("config") = SolveConfig{});
  m.def("metric_area", &metric_area, py::arg("triangulation"), py::arg("label"));

  // exhaustion
  m.def("run_exhaustion", &run_exhaustion, py::arg("family"),
        py::arg("config") = LimitConfig{});
  m.def("edge_path_length", &edge_path_length, py::arg("triangulation"),
        py::arg("radii"), py::arg("path"));
  m.def("limit_label", &limit_label, py::arg("report"));

  // layout
  m.def("develop", &develop, py::arg("triangulation"), py::arg("label"),
        py::arg("config") = LayoutConfig{});
  m.def("verify_layout", &verify_layout, py::arg("layout"), py::arg("triangulation"),
        py::arg("label"), py::arg("spec"));
  m.def(
      "export_svg",
      [](const PackingLayout& layout, const std::string& path, bool draw_edges) {
        SvgStyle style;
        style.draw_edges = draw_edges;
        export_svg(layout, path, style);
      },
      py::arg("layout"), py::arg("path"), py::arg("draw_edges") = false);
  m.def(
      "svg_string",
      [](const PackingLayout& layout, bool draw_edges) {
        SvgStyle style;
        style.draw_edges = draw_edges;
        return svg_string(layout, style);
      },
      py::arg("layout"), py::arg("draw_edges") = false);

  // json
  m.def("triangulation_to_json",
        [](const Triangulation& t) { return triangulation_to_json(t).dump(2); });
  m.def("triangulation_from_json", [](const std::string& text) {
    return triangulation_from_json(nlohmann::json::parse(text));
  });
  m.def("label_to_json", [](const Label& l) { return label_to_json(l).dump(2); });
  m.def("label_from_json", [](const std::string& text) {
    return label_from_json(nlohmann::json::parse(text));
  });
  m.def("family_from_json", [](const std::string& text) {
    return family_from_json(nlohmann::json::parse(text));
  });
  m.def("report_to_json",
        [](const ExhaustionReport& r) { return report_to_json(r).dump(2); });
  m.def("parse_angle", &parse_angle, py::arg("text"));

  m.attr("__version__") = "0.1.0";
}
