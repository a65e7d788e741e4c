import pytest

from unirat.sing import (
    TABLE1_POINTS,
    SingularityError,
    curve_by_label,
    curve_catalog,
    incidence_table,
    node_check,
    reduction_collisions,
    split_identities,
)
from unirat.workflows.expectations import load_expectations


def test_catalog_has_18_verified_curves():
    curves = curve_catalog()
    assert len(curves) == 18
    assert len({curve.label for curve in curves}) == 18
    assert all(curve.verify() for curve in curves)
    kinds = [curve.kind for curve in curves]
    assert kinds.count("line") == 12 and kinds.count("conic") == 6


def test_split_lines_meet_at_node():
    first, second = curve_by_label("B_{3,6}^1"), curve_by_label("B_{3,6}^2")
    assert first.contains((0, 1, 0, 1)) and second.contains((0, 1, 0, 1))
    assert first.kind == "line" and first.is_linear
    assert curve_by_label("B_{1,2}").point_at(3) == (0, 0, 3, 1)


def test_conic_split_meets_at_published_points():
    for label in ("B_{5,6}^1", "B_{5,6}^2"):
        curve = curve_by_label(label)
        assert curve.kind == "conic"
        assert curve.contains((1, 1, 0, 1)) and curve.contains((1, 1, 4, 3))


def test_unknown_curve():
    with pytest.raises(SingularityError):
        curve_by_label("B_{7,8}")


def test_split_identities_and_nodes():
    assert split_identities().ok
    report = node_check()
    assert report.ok, report.failures
    assert len(report.checks) == 4


def test_incidence_table_matches_published_rows():
    expected = load_expectations().table1
    rows = incidence_table()
    assert len(rows) == 16
    for row, want in zip(rows, expected):
        assert row == want, row.label


def test_incidence_examples():
    rows = {row.point: row for row in incidence_table()}
    corner = rows[(0, 0, 0, 1)]
    assert corner.multiplicity == 4
    assert corner.surfaces == ("B_1", "B_2", "B_3", "B_4")
    assert rows[(1, 1, 0, 1)].curves == ("B_{5,6}^1", "B_{5,6}^2")

    generic = incidence_table(points=[(1, 2, 3, 5)])[0]
    assert generic.multiplicity == 0
    assert generic.surfaces == () and generic.curves == ()
    assert generic.to_dict()["point"] == [1, 2, 3, 5]


def test_reduction_collisions_at_3():
    groups = dict(reduction_collisions(TABLE1_POINTS, 3))
    assert set(groups[(1, 1, 1, 0)]) == {(1, 1, 1, 0), (1, 1, 4, 3), (1, 4, 1, 3), (4, 1, 1, 3)}


def test_no_collisions_for_large_prime():
    assert reduction_collisions(TABLE1_POINTS, 101) == []
