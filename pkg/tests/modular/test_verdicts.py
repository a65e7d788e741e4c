import pytest
from sympy import primerange

from unirat.count import count_range, restrict_primes
from unirat.expr import parse_poly
from unirat.models import Convention, ModelKind, PointCountRecord, VarietyModel, VerdictKind
from unirat.modular import (
    BUILTIN_FORMS,
    FitError,
    VerdictError,
    congruence_match,
    esnault_guess,
    exact_cy3_fit,
    fit_verdict,
    lefschetz_trace,
    weil_bound_check,
)

WEIGHT4 = BUILTIN_FORMS["level6_weight4"]


def _hypersurface(text, variables):
    return VarietyModel(
        name="H",
        variables=variables,
        weights=(1,) * len(variables),
        kind=ModelKind.HYPERSURFACE,
        polynomial=parse_poly(text, variables),
    )


@pytest.fixture(scope="module")
def k3_records(models):
    return {name: count_range(models[name], 100, jobs=1) for name in ("Q", "S", "fermat")}


def test_x_is_not_unirational_guess(x_records):
    verdict = esnault_guess(x_records)
    assert verdict.kind is VerdictKind.NOT_UNIRATIONAL_GUESS
    assert len(verdict.sigma) == 23 and 3 not in verdict.sigma
    assert len(verdict.sigma0) == 23
    assert verdict.threshold_met
    data = verdict.to_dict()
    assert set(data) == {"kind", "sigma", "sigma0", "threshold_met", "details", "caveat"}
    assert data["kind"] == "not_unirational_guess"


def test_hyperplane_is_inconclusive():
    records = count_range(_hypersurface("x", ("x", "y", "z", "t")), 50, jobs=1)
    verdict = esnault_guess(records)
    assert verdict.kind is VerdictKind.INCONCLUSIVE
    assert verdict.sigma0 == () and not verdict.threshold_met


def test_verdicts_are_monotone(x_records):
    seen_guess = False
    for n in range(1, len(x_records) + 1):
        kind = esnault_guess(x_records[:n]).kind
        if seen_guess:
            assert kind is VerdictKind.NOT_UNIRATIONAL_GUESS
        seen_guess = kind is VerdictKind.NOT_UNIRATIONAL_GUESS


def test_esnault_requires_records():
    with pytest.raises(VerdictError):
        esnault_guess([])


def test_x_matches_weight4_form(x_records):
    verdict = congruence_match(x_records, WEIGHT4, Convention.WEIGHT4)
    assert verdict.kind is VerdictKind.CONGRUENCE_PASS
    assert verdict.threshold_met
    assert [detail["p"] for detail in verdict.details][:2] == [5, 7]
    assert verdict.details[0]["b_p"] == 6


def test_x_fails_weight3_form(x_records):
    verdict = congruence_match(x_records, BUILTIN_FORMS["level16_weight3"], Convention.WEIGHT3)
    assert verdict.kind is VerdictKind.CONGRUENCE_FAIL
    assert any(not detail["holds"] for detail in verdict.details)


def test_k3_surfaces_match_their_forms(k3_records):
    for name, form in (("Q", "level16_weight3"), ("S", "level8_weight3")):
        verdict = congruence_match(k3_records[name], BUILTIN_FORMS[form], Convention.WEIGHT3)
        assert verdict.kind is VerdictKind.CONGRUENCE_PASS, name
        assert verdict.threshold_met


def test_prime_classes_can_hide_evidence(k3_records):
    s_records = k3_records["S"]
    assert esnault_guess(s_records).kind is VerdictKind.NOT_UNIRATIONAL_GUESS
    assert esnault_guess(restrict_primes(s_records, 8, (5, 7))).kind is VerdictKind.INCONCLUSIVE
    fermat = restrict_primes(k3_records["fermat"], 4, (3,))
    assert esnault_guess(fermat).kind is VerdictKind.INCONCLUSIVE


def test_congruence_needs_good_primes():
    records = [PointCountRecord(p=3, count=46, zeros=10, good_reduction=False)]
    with pytest.raises(VerdictError):
        congruence_match(records, WEIGHT4, Convention.WEIGHT4)


def test_exact_fit(x_records):
    fit = exact_cy3_fit(x_records, WEIGHT4)
    assert (fit.c1, fit.c2) == (-8, 4)
    assert fit.ok
    assert fit.basis_primes == (89, 97)
    assert list(fit.verified_primes) == list(primerange(5, 100))
    assert fit_verdict(fit, x_records).kind is VerdictKind.EXACT_FIT


def test_exact_fit_spot_check():
    assert 1 - 8 * 5 + 4 * 25 + 125 - 180 == 6


def test_exact_fit_breaks_at_3(x_records):
    fit = exact_cy3_fit(x_records, WEIGHT4, bad_primes=frozenset())
    assert not fit.ok
    assert fit.inconsistent_prime == 3
    assert fit.verified_primes == ()
    assert fit_verdict(fit, x_records).kind is VerdictKind.CONGRUENCE_FAIL


def test_exact_fit_needs_three_primes(x_records):
    with pytest.raises(FitError):
        exact_cy3_fit(x_records[1:3], WEIGHT4)


def test_weil_bound():
    primes = list(primerange(2, 100))
    assert weil_bound_check(WEIGHT4, 2, 3, primes) == []
    assert (-16) ** 2 <= 4 * 7**3
    violations = weil_bound_check(WEIGHT4, 0, 3, [2, 3, 5])
    assert [v["p"] for v in violations] == [2, 3, 5]
    with pytest.raises(VerdictError):
        weil_bound_check(WEIGHT4, 1, 0, [5])


def test_supersingular_curve_traces():
    curve = _hypersurface("y^2*z - x^3 + x*z^2", ("x", "y", "z"))
    for record in count_range(curve, 50, jobs=1):
        if record.p % 4 == 3:
            assert lefschetz_trace(record, "curve") == 0


def test_trace_shapes():
    record = PointCountRecord(p=5, count=31, zeros=31)
    assert lefschetz_trace(record, "k3") == 31 - 1 - 25
    assert lefschetz_trace(record, "cy3", k_p=2) == 1 + 30 * 2 + 125 - 31
    with pytest.raises(VerdictError):
        lefschetz_trace(record, "surface")
