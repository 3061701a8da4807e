import math

import pytest

import sl2r


def test_version():
    assert sl2r.__version__ == "1.0.0"


def test_quadratic_form_at_origin():
    assert sl2r.quadratic_form(sl2r.ProjectivePoint.origin()) == -1.0


def test_distance_along_the_base_plane():
    d = sl2r.geodesic_distance(sl2r.ModelPoint(0.0, 0.0, 0.0), sl2r.ModelPoint(0.0, 0.5, 0.0))
    assert d == pytest.approx(math.atanh(0.5), abs=1e-10)


def test_fibre_family_report():
    t = sl2r.Triangle(
        sl2r.ProjectivePoint.origin(),
        sl2r.ProjectivePoint(1.0, 0.0, 0.5, 0.0),
        sl2r.ProjectivePoint(1.0, 0.2, 0.0, 0.0),
    )
    rep = sl2r.geodesic_triangle_report(t)
    assert rep.classification == sl2r.TriangleClass.FibreLike
    assert rep.alpha23 == pytest.approx(0.3170, abs=5e-4)
    assert rep.side_lengths[0] == pytest.approx(0.5809, abs=5e-4)
    assert rep.angle_sum == pytest.approx(3.1806, abs=5e-4)
    assert rep.angle_sum > math.pi


def test_translation_report_lower_bound():
    t = sl2r.Triangle(
        sl2r.ProjectivePoint.origin(),
        sl2r.lift(sl2r.ModelPoint(0.0, 0.5, 0.0)),
        sl2r.lift(sl2r.ModelPoint(0.0, 0.0, 0.5)),
    )
    rep = sl2r.translation_triangle_report(t)
    assert rep.angle_sum >= math.pi - 1e-9


def test_geodesics_do_not_exceed_translation_curves():
    p = sl2r.ModelPoint(0.1, 0.2, -0.1)
    q = sl2r.ModelPoint(-0.2, 0.1, 0.3)
    assert sl2r.geodesic_distance(p, q) <= sl2r.translation_distance(p, q) + 1e-9


def test_chart_errors_surface_as_exceptions():
    with pytest.raises(sl2r.ChartError):
        sl2r.translation_curve_point(1.6, sl2r.Direction(0.0, math.pi / 2))
