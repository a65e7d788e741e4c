import pytest

from unirat.expr import parse_poly
from unirat.sing import IndependenceError, SingularityError, chart_blowup_linear

RING = ("x", "y", "z", "t")


def _center():
    return parse_poly("x", RING), parse_poly("y - t", RING)


def test_quadric_strict_transform(fixture):
    charts = chart_blowup_linear(fixture.B6, _center(), names=("x", "u"))
    assert charts.change.target.names == ("x", "u", "z", "t")
    chart = charts.charts[1]
    assert chart.ring.names == ("v", "u", "z", "t")
    assert chart.total == parse_poly("u*(v*z - u)", chart.ring)
    assert chart.strict == parse_poly("v*z - u", chart.ring)
    assert chart.multiplicity == 1
    assert charts.exceptional_multiplicity == 1


def test_plane_misses_one_chart(fixture):
    charts = chart_blowup_linear(fixture.B1, _center(), names=("x", "u"))
    first, second = charts.charts
    assert first.total == parse_poly("x", first.ring)
    assert first.strict == parse_poly("1", first.ring)
    assert second.total == parse_poly("v*u", second.ring)
    assert second.strict == parse_poly("v", second.ring)


def test_product_has_exceptional_multiplicity_two(fixture):
    charts = chart_blowup_linear(fixture.B1 * fixture.B3 * fixture.B6, _center(), names=("x", "u"))
    assert charts.exceptional_multiplicity == 2
    assert charts.to_dict()["exceptional_multiplicity"] == 2


def test_default_names(fixture):
    charts = chart_blowup_linear(fixture.branch, _center())
    assert charts.change.target.names == ("xh", "uh", "z", "t")
    assert charts.exceptional_multiplicity == 2


def test_default_names_avoid_ring_variables():
    ring = ("a", "b", "xh", "v")
    p = parse_poly("a*xh + b*v", ring)
    center = parse_poly("a", ring), parse_poly("b", ring)
    charts = chart_blowup_linear(p, center)
    assert charts.change.target.names == ("xh1", "uh", "xh", "v")
    assert charts.charts[0].ring.names == ("xh1", "v1", "xh", "v")
    assert charts.charts[0].strict == parse_poly("xh + v1*v", charts.charts[0].ring)
    assert charts.exceptional_multiplicity == 1


def test_explicit_names_must_not_clash(fixture):
    with pytest.raises(SingularityError):
        chart_blowup_linear(fixture.B6, _center(), names=("z", "u"))


@pytest.mark.parametrize(
    "first, second",
    [("x", "2*x"), ("x^2", "y"), ("x + 1", "y"), ("0", "y")],
)
def test_bad_centers(fixture, first, second):
    with pytest.raises(IndependenceError):
        chart_blowup_linear(fixture.B6, (parse_poly(first, RING), parse_poly(second, RING)))
