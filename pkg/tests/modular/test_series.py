import random

import pytest

from unirat.modular import (
    EtaQuotientError,
    EtaQuotientSpec,
    ModularError,
    QSeries,
    TruncationError,
    eta_quotient,
    euler_product,
    naive_product,
)


def _prefix(series, n):
    return list(series.coefficients[1 : n + 1])


def test_euler_product_small():
    assert euler_product(12) == QSeries.from_terms({0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1}, 12)
    assert euler_product(1).coefficients == (1, -1)
    assert str(euler_product(5)) == "1 - q - q^2 + q^5 + O(q^6)"
    with pytest.raises(ModularError):
        euler_product(0)


def test_euler_product_matches_naive_product():
    for n in range(1, 51):
        assert euler_product(n) == naive_product([(k, 1) for k in range(1, n + 1)], n), n


def test_published_eta_quotients():
    weight4 = eta_quotient(EtaQuotientSpec(((1, 2), (2, 2), (3, 2), (6, 2))), 11)
    assert _prefix(weight4, 11) == [1, -2, -3, 4, 6, 6, -16, -8, 9, -12, 12]
    assert weight4[0] == 0

    level16 = eta_quotient(EtaQuotientSpec(((4, 6),)), 17)
    assert level16.nonzero_terms() == [(1, 1), (5, -6), (9, 9), (13, 10), (17, -30)]

    level8 = eta_quotient(EtaQuotientSpec.parse("1:2,2:1,4:1,8:2"), 12)
    assert _prefix(level8, 12) == [1, -2, -2, 4, 0, 4, 0, -8, -5, 0, 14, -8]


def test_negative_exponents_match_dense_inversion():
    spec = EtaQuotientSpec(((2, 15), (1, -6)))
    assert spec.q_shift == 1
    factors = [(2 * n, 15) for n in range(1, 21)] + [(n, -6) for n in range(1, 21)]
    assert eta_quotient(spec, 20) == naive_product(factors, 20).shift(1)


def test_spec_validation_and_metadata():
    spec = EtaQuotientSpec.parse("1:2, 2:2, 3:2, 6:2")
    assert spec.weight == 4 and spec.q_shift == 1
    assert spec.to_text() == "1:2,2:2,3:2,6:2"
    for bad in ("1:1", "1:-24", "0:24", "1:2,2:x", "1-2", ""):
        with pytest.raises(EtaQuotientError):
            EtaQuotientSpec.parse(bad)


def test_truncation_rules():
    a = QSeries.from_terms([1, 2, 3, 4, 5, 6], 5)
    b = QSeries.from_terms([1, 1, 1, 1], 3)
    assert (a * b).truncation == 3
    assert (a + b).truncation == 3
    with pytest.raises(TruncationError):
        b[4]
    assert a.shift(2).coefficients == (0, 0, 1, 2, 3, 4)
    with pytest.raises(ModularError):
        QSeries.from_terms([2, 1], 3).inverse()


def test_ring_laws_on_random_series():
    rng = random.Random(20240601)

    def draw(n, unit=False):
        coeffs = [rng.randint(-5, 5) for _ in range(n + 1)]
        if unit:
            coeffs[0] = 1
        return QSeries(tuple(coeffs))

    for _ in range(1000):
        n = rng.randint(1, 8)
        a, b, c = draw(n), draw(n), draw(n)
        assert (a * b) * c == a * (b * c)
        assert a * QSeries.one(n) == a
        assert a * (b + c) == a * b + a * c
        s = draw(n, unit=True)
        assert s * s.inverse() == QSeries.one(n)
