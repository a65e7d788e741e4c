from unirat.alphabet import verify_involutions, verify_sigma, verify_symmetries
from unirat.expr import divide_exact, parse_poly

RING = ("x", "y", "z", "t")


def test_symmetries_hold(fixture):
    report = verify_symmetries(fixture)
    assert report.ok, report.failures
    names = [check.name for check in report.checks]
    assert "swap: f3 -> f4" in names
    assert "swap: f5 fixed" in names
    assert "shift: f1 fixed" in names


def test_involutions_hold(fixture):
    report = verify_involutions(fixture)
    assert report.ok, report.failures
    assert len(report.checks) == 12


def test_sigma_identities_hold(fixture):
    report = verify_sigma(fixture)
    assert report.ok, report.failures
    assert report.to_dict()["ok"] is True


def test_pullback_constant_is_256(fixture):
    pullback = fixture.sigma(fixture.f)
    quotient = divide_exact(pullback, parse_poly("x^3*y^3*z^4", RING))
    expected = parse_poly("(x-z)*(y-z)*(y*z-(x-t)^2)*(x*z-(y-t)^2)", RING)
    assert quotient == 256 * expected


def test_broken_fixture_is_reported(fixture):
    from dataclasses import replace

    broken = replace(fixture, f4=fixture.f4 + parse_poly("x", RING))
    report = verify_symmetries(broken)
    assert not report.ok
    assert {check.name for check in report.failures} == {"swap: f3 -> f4", "swap: f4 -> f3"}
