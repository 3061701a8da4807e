#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>

#include "sl2r/sl2r.hpp"

namespace py = pybind11;
using namespace sl2r;

namespace {

std::array<double, 3> to_array(Vec3 v) { return {v.x, v.y, v.z}; }

std::array<std::array<double, 3>, 3> to_rows(const MetricTensor& t) { return t.g.m; }

Mat4 from_rows(const std::array<std::array<double, 4>, 4>& rows) {
    Mat4 m;
    m.m = rows;
    return m;
}

}  // namespace

PYBIND11_MODULE(_sl2r, m) {
    m.doc() = "projective-model computations for the twisted H2xR geometry";
    m.attr("__version__") = kVersion;

    py::register_exception<chart_error>(m, "ChartError");
    py::register_exception<solver_error>(m, "SolverError");
    py::register_exception<degenerate_error>(m, "DegenerateError");

    py::class_<ProjectivePoint>(m, "ProjectivePoint")
        .def(py::init<double, double, double, double>(), py::arg("x0"), py::arg("x1"),
             py::arg("x2"), py::arg("x3"))
        .def_readwrite("x0", &ProjectivePoint::x0)
        .def_readwrite("x1", &ProjectivePoint::x1)
        .def_readwrite("x2", &ProjectivePoint::x2)
        .def_readwrite("x3", &ProjectivePoint::x3)
        .def_static("origin", &ProjectivePoint::origin)
        .def("__repr__", [](const ProjectivePoint& p) {
            return "ProjectivePoint(" + std::to_string(p.x0) + ", " + std::to_string(p.x1) +
                   ", " + std::to_string(p.x2) + ", " + std::to_string(p.x3) + ")";
        });

    py::class_<ModelPoint>(m, "ModelPoint")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("x", &ModelPoint::x)
        .def_readwrite("y", &ModelPoint::y)
        .def_readwrite("z", &ModelPoint::z)
        .def("__repr__", [](const ModelPoint& p) {
            return "ModelPoint(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ", " +
                   std::to_string(p.z) + ")";
        });

    py::class_<HyperboloidCoords>(m, "HyperboloidCoords")
        .def(py::init<double, double, double>(), py::arg("r"), py::arg("theta"), py::arg("phi"))
        .def_readwrite("r", &HyperboloidCoords::r)
        .def_readwrite("theta", &HyperboloidCoords::theta)
        .def_readwrite("phi", &HyperboloidCoords::phi);

    py::enum_<Regime>(m, "Regime")
        .value("H2Like", Regime::H2Like)
        .value("LightLike", Regime::LightLike)
        .value("FibreLike", Regime::FibreLike);

    py::class_<Direction>(m, "Direction")
        .def(py::init(&Direction::of), py::arg("lam"), py::arg("alpha"))
        .def_readonly("lam", &Direction::lambda)
        .def_readonly("alpha", &Direction::alpha)
        .def_readonly("regime", &Direction::regime);

    py::class_<GeodesicArc>(m, "GeodesicArc")
        .def_readonly("dir", &GeodesicArc::dir)
        .def_readonly("s", &GeodesicArc::s)
        .def_readonly("residual", &GeodesicArc::residual);

    py::class_<TranslationArc>(m, "TranslationArc")
        .def_readonly("dir", &TranslationArc::dir)
        .def_readonly("s", &TranslationArc::s);

    py::class_<PolarState>(m, "PolarState")
        .def_readonly("r", &PolarState::r)
        .def_readonly("theta", &PolarState::theta)
        .def_readonly("phi", &PolarState::phi);

    py::class_<IsometryMatrix>(m, "IsometryMatrix")
        .def_property_readonly("rows", [](const IsometryMatrix& t) { return t.m.m; });

    py::enum_<TriangleKind>(m, "TriangleKind")
        .value("Geodesic", TriangleKind::Geodesic)
        .value("Translation", TriangleKind::Translation);

    py::enum_<TriangleClass>(m, "TriangleClass")
        .value("FibreLike", TriangleClass::FibreLike)
        .value("HyperbolicLike", TriangleClass::HyperbolicLike)
        .value("General", TriangleClass::General);

    py::class_<Triangle>(m, "Triangle")
        .def(py::init<ProjectivePoint, ProjectivePoint, ProjectivePoint>(), py::arg("a1"),
             py::arg("a2"), py::arg("a3"))
        .def_readwrite("a1", &Triangle::a1)
        .def_readwrite("a2", &Triangle::a2)
        .def_readwrite("a3", &Triangle::a3);

    py::class_<TriangleReport>(m, "TriangleReport")
        .def_readonly("omega1", &TriangleReport::omega1)
        .def_readonly("omega2", &TriangleReport::omega2)
        .def_readonly("omega3", &TriangleReport::omega3)
        .def_readonly("angle_sum", &TriangleReport::angle_sum)
        .def_readonly("side_lengths", &TriangleReport::side_lengths)
        .def_readonly("kind", &TriangleReport::kind)
        .def_readonly("classification", &TriangleReport::classification)
        .def_readonly("alpha23", &TriangleReport::alpha23);

    py::class_<PiSearchResult>(m, "PiSearchResult")
        .def_readonly("t", &PiSearchResult::t)
        .def_readonly("triangle", &PiSearchResult::triangle)
        .def_readonly("report", &PiSearchResult::report);

    m.def("quadratic_form", &quadratic_form, py::arg("p"));
    m.def("is_interior", &is_interior, py::arg("p"));
    m.def("eq_projective", &eq_projective, py::arg("p"), py::arg("q"), py::arg("tol") = kEps);
    m.def("lift", &lift, py::arg("m"));
    m.def("projective_to_inhomogeneous", &projective_to_inhomogeneous, py::arg("p"));
    m.def("hyperboloid_to_projective", &hyperboloid_to_projective, py::arg("h"));
    m.def("inhomogeneous_to_hyperboloid", &inhomogeneous_to_hyperboloid, py::arg("m"));
    m.def("normalize_angle", &normalize_angle, py::arg("t"));

    m.def("translation_to", &translation_to, py::arg("x"));
    m.def("translation_to_inverse", &translation_to_inverse, py::arg("x"));
    m.def("apply", &apply, py::arg("t"), py::arg("p"));
    m.def("fibre_translate", &fibre_translate, py::arg("phi"));
    m.def(
        "is_isometry",
        [](const std::array<std::array<double, 4>, 4>& rows, double tol) {
            return is_isometry(from_rows(rows), tol);
        },
        py::arg("rows"), py::arg("tol") = 1e-9);

    m.def(
        "metric_polar", [](double r) { return to_rows(metric_polar(r)); }, py::arg("r"));
    m.def(
        "metric_inhomogeneous",
        [](const ModelPoint& p) { return to_rows(metric_inhomogeneous(p)); }, py::arg("m"));
    m.def(
        "angle_between",
        [](std::array<double, 3> u, std::array<double, 3> v, const ModelPoint& at) {
            return angle_between({{u[0], u[1], u[2]}}, {{v[0], v[1], v[2]}}, at);
        },
        py::arg("u"), py::arg("v"), py::arg("at"));

    m.def("regime_of", &regime_of, py::arg("alpha"));
    m.def("geodesic_polar", &geodesic_polar, py::arg("s"), py::arg("alpha"));
    m.def("geodesic_point", &geodesic_point, py::arg("s"), py::arg("dir"));
    m.def(
        "geodesic_tangent_at_origin",
        [](const Direction& d) { return to_array(geodesic_tangent_at_origin(d)); },
        py::arg("dir"));
    m.def(
        "integrate_geodesic",
        [](const Direction& d, double s_end, double h) {
            std::vector<std::array<double, 4>> out;
            for (const PathSample& p : integrate_geodesic(d, s_end, h))
                out.push_back({p.s, p.state.r, p.state.theta, p.state.phi});
            return out;
        },
        py::arg("dir"), py::arg("s_end"), py::arg("h") = 1e-4);
    m.def("solve_geodesic_to", &solve_geodesic_to, py::arg("target"));
    m.def("geodesic_distance", &geodesic_distance, py::arg("p"), py::arg("q"));

    m.def("translation_curve_point", &translation_curve_point, py::arg("s"), py::arg("dir"));
    m.def("solve_translation_to", &solve_translation_to, py::arg("target"));
    m.def("translation_distance", &translation_distance, py::arg("p"), py::arg("q"));
    m.def("is_straight_chord", &is_straight_chord, py::arg("p"), py::arg("q"),
          py::arg("samples") = 16, py::arg("tol") = 1e-10);

    m.def(
        "translated_vertices",
        [](const Triangle& t, int vertex_index) {
            const TranslatedVertices tv = translated_vertices(t, vertex_index);
            return std::array<ModelPoint, 3>{tv.image[0], tv.image[1], tv.image[2]};
        },
        py::arg("t"), py::arg("vertex_index"));
    m.def("antipodal_check", &antipodal_check, py::arg("p"), py::arg("q"),
          py::arg("tol") = 1e-10);
    m.def("geodesic_triangle_report", &geodesic_triangle_report, py::arg("t"));
    m.def("translation_triangle_report", &translation_triangle_report, py::arg("t"));
    m.def(
        "plane_normal", [](const Triangle& t) { return to_array(plane_normal(t).v); },
        py::arg("t"));
    m.def(
        "is_lightlike",
        [](std::array<double, 3> v, double tol) {
            return is_lightlike(PlaneNormal{{v[0], v[1], v[2]}}, tol);
        },
        py::arg("v"), py::arg("tol") = 1e-9);
    m.def("spherical_projection_arcs", &spherical_projection_arcs, py::arg("t"));
    m.def("find_pi_sum_triangle", &find_pi_sum_triangle, py::arg("a2"), py::arg("a3_start"),
          py::arg("a3_end"), py::arg("tol") = 1e-10, py::arg("max_iterations") = 200);
    m.def("classify", &classify, py::arg("t"), py::arg("eps") = kEps);
}
