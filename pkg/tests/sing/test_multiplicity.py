import pytest

from unirat.config import settings
from unirat.sing import (
    LEDGER_CENTERS,
    DegenerateSliceError,
    blowup_ledger,
    curve_by_label,
    curve_catalog,
    ledger_chart_check,
    mult_along_curve,
    sample_parameters,
    vanishes_on,
)
from unirat.workflows.expectations import load_expectations


def test_sample_points_skip_special_points():
    assert sample_parameters(curve_by_label("B_{1,6}"), 3) == [2, 3, 4]


def test_branch_along_double_line(fixture):
    orders = mult_along_curve(fixture.components, curve_by_label("B_{1,6}"), seed=7)
    assert orders.as_dict() == {"B_1": 1, "B_2": 0, "B_3": 0, "B_4": 0, "B_5": 0, "B_6": 1}
    assert orders.total == 2
    assert orders.agree
    assert len(orders.samples) == 3


def test_branch_along_coordinate_line(fixture):
    orders = mult_along_curve(fixture.components, curve_by_label("B_{1,2}"))
    assert orders.as_dict()["B_1"] == 1 and orders.as_dict()["B_2"] == 1
    assert orders.total == 2


def test_tangent_quadric_has_order_one(fixture):
    orders = mult_along_curve([fixture.B6], curve_by_label("B_{1,6}"))
    assert orders.total == 1


def test_order_positive_iff_surface_contains_curve(fixture):
    for curve in curve_catalog():
        orders = mult_along_curve(fixture.components, curve).as_dict()
        for label, poly in fixture.components.items():
            assert (orders[label] >= 1) == vanishes_on(poly, curve), (curve.label, label)


def test_blowup_ledger_totals():
    entries = blowup_ledger()
    assert [entry.center for entry in entries] == list(LEDGER_CENTERS)
    expected = load_expectations().ledger_totals
    for entry in entries:
        assert entry.total == expected[entry.center]
        assert entry.is_even
    assert dict(entries[1].orders) == {"B_1": 0, "B_2": 1, "B_3": 0, "B_4": 0, "B_5": 1, "B_6": 0}
    assert dict(entries[2].orders)["B_5"] == 1 and dict(entries[2].orders)["B_6"] == 1


def test_ledger_agrees_with_charts():
    report = ledger_chart_check()
    assert report.ok, report.failures
    assert len(report.checks) == 4


def test_degenerate_planes_exhaust_retries(fixture, monkeypatch):
    monkeypatch.setattr(settings.sampling, "coordinate_range", 0)
    monkeypatch.setattr(settings.sampling, "max_attempts", 2)
    with pytest.raises(DegenerateSliceError):
        mult_along_curve(fixture.components, curve_by_label("B_{1,2}"))
