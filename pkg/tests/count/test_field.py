import pytest

from unirat.count import NONSQUARE, SQUARE, ZERO, CountError, make_ctx, projective_size


def test_small_square_tables():
    assert make_ctx(7).nonzero_squares == {1, 2, 4}
    assert make_ctx(5).nonzero_squares == {1, 4}
    assert make_ctx(3).nonzero_squares == {1}


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 97, 101])
def test_square_table_properties(p):
    ctx = make_ctx(p)
    assert ctx.flag(0) == ZERO
    assert len(ctx.nonzero_squares) == (p - 1) // 2
    for a in range(1, p):
        for b in range(1, p):
            assert ctx.flag(a * b) == ctx.flag(a) * ctx.flag(b)
    assert ctx.flag(-1) == (SQUARE if p % 4 == 1 else NONSQUARE)


def test_table_is_read_only():
    ctx = make_ctx(11)
    with pytest.raises(ValueError):
        ctx.square_flags[1] = 0


@pytest.mark.parametrize("p", [2, 9, 1, 0, -3])
def test_rejects_non_odd_primes(p):
    with pytest.raises(CountError):
        make_ctx(p)


def test_projective_size():
    assert projective_size(2, 5) == 31
    assert projective_size(3, 3) == 40
