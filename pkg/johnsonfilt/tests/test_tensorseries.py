import itertools

import numpy as np
import pytest

from johnsonfilt import (
    RankMismatchError,
    Series,
    degree_component,
    series_add,
    series_mul,
    series_sub,
)


def X(i, rank=2, trunc=3):
    return Series.generator(rank, trunc, i)


def one(rank=2, trunc=3):
    return Series.one(rank, trunc)


def test_series_init_prunes():

    s = Series(2, 2, {(): 1, (1,): 0, (1, 2): 3, (1, 2, 1): 5})

    assert s.coeffs == {(): 1, (1, 2): 3}
    assert len(s) == 2
    assert s[(1, 2)] == 3
    assert s[(2, 1)] == 0


def test_series_init_invalid():

    with pytest.raises(ValueError, match=r"'variable' must be in 1..2"):
        Series(2, 2, {(3,): 1})

    with pytest.raises(ValueError, match="'trunc' must be at least 0"):
        Series(2, -1)


def test_series_iter_order():

    s = Series(2, 3, {(2, 1): -1, (1, 2): 3, (): 1, (2,): 2})
    assert list(s) == [((), 1), ((2,), 2), ((1, 2), 3), ((2, 1), -1)]


@pytest.mark.parametrize(
    "coeffs, expected",
    [
        [{(1, 2): 3, (2, 1): -1, (): 1}, "3*X1X2 - X2X1 + 1"],
        [{}, "0"],
        [{(1,): -1}, "-X1"],
        [{(): -2, (2, 2): 1}, "X2X2 - 2"],
    ],
)
def test_format_series(coeffs, expected):
    assert str(Series(2, 3, coeffs)) == expected


def test_repr():

    s = X(1) - X(2)
    assert repr(s) == "<johnsonfilt.Series rank=2 D=3: X1 - X2>"


@pytest.mark.parametrize(
    "a, b, expected",
    [
        [{(): 1, (1,): 1}, {(): -1, (1,): 1}, {(1,): 2}],
        [{(1, 2): 1}, {}, {(1, 2): 1}],
        [{(1, 2): 1}, {(1, 2): -1}, {}],
    ],
)
def test_series_add(a, b, expected):

    result = series_add(Series(2, 3, a), Series(2, 3, b))
    assert result == Series(2, 3, expected)


def test_series_sub_neg():

    a = Series(2, 3, {(1,): 2, (2,): 1})
    b = Series(2, 3, {(1,): 2})

    assert series_sub(a, b) == X(2)
    assert a - a == Series.zero(2, 3)
    assert -a == a.scale(-1)
    assert 3 * a == a * 3 == a + a + a
    assert 0 * a == Series.zero(2, 3)


def test_series_mul_examples():

    # (1 + X1)(1 - X1 + X1^2) = 1 + X1^3
    a = Series(1, 2, {(): 1, (1,): 1})
    b = Series(1, 2, {(): 1, (1,): -1, (1, 1): 1})
    assert series_mul(a, b) == Series.one(1, 2)

    assert series_mul(X(1), X(2)) == Series.monomial(2, 3, (1, 2))
    assert series_mul(X(1), Series.zero(2, 3)).is_zero()
    assert X(1) * X(2) - X(2) * X(1) == Series(2, 3, {(1, 2): 1, (2, 1): -1})


def test_series_mul_truncates():

    a = Series.monomial(2, 3, (1, 2))
    assert (a * a).is_zero()
    assert (a * X(1)).coeffs == {(1, 2, 1): 1}


@pytest.mark.parametrize("func", [series_add, series_sub, series_mul])
def test_series_mismatch(func):

    with pytest.raises(RankMismatchError, match="same rank and truncation"):
        func(X(1, rank=2), X(1, rank=3))

    with pytest.raises(RankMismatchError, match="same rank and truncation"):
        func(X(1, trunc=2), X(1, trunc=3))


@pytest.mark.parametrize(
    "coeffs, d, expected",
    [
        [{(): 1, (1,): 1, (1, 2): 1}, 2, {(1, 2): 1}],
        [{(): 1}, 0, {(): 1}],
        [{(1,): 1}, 2, {}],
    ],
)
def test_degree_component(coeffs, d, expected):

    result = degree_component(Series(2, 3, coeffs), d)
    assert result == Series(2, 3, expected)


def test_degree_component_out_of_range():

    with pytest.raises(ValueError, match=r"'d' must be in 0..3"):
        degree_component(X(1), 4)


def test_min_degree_homogeneous():

    s = Series(2, 3, {(): 1, (1, 2): 1, (2, 1): -1})

    assert s.min_degree() == 2
    assert s.min_degree(start=0) == 0
    assert s.min_degree(start=3) is None
    assert not s.is_homogeneous(2)
    assert degree_component(s, 2).is_homogeneous(2)


def test_truncate():

    s = Series(2, 3, {(): 1, (1,): 1, (1, 2, 1): 4})

    assert s.truncate(1) == Series(2, 1, {(): 1, (1,): 1})
    assert s.truncate(5).trunc == 5
    assert s.truncate(5)[(1, 2, 1)] == 4


def _random_series(rng, rank, trunc):

    coeffs = {}
    for degree in range(trunc + 1):
        for monomial in itertools.product(range(1, rank + 1), repeat=degree):
            if rng.random() < 0.3:
                coeffs[monomial] = int(rng.integers(-3, 4))
    return Series(rank, trunc, coeffs)


@pytest.mark.parametrize("rank, trunc", [(1, 5), (2, 4), (3, 3), (4, 2)])
def test_ring_axioms(rank, trunc):

    rng = np.random.default_rng(rank * 10 + trunc)

    unit = Series.one(rank, trunc)
    for _ in range(5):
        a, b, c = (_random_series(rng, rank, trunc) for _ in range(3))

        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c
        assert a * unit == a == unit * a


def test_truncation_is_multiplicative():

    rng = np.random.default_rng(7)
    a, b = _random_series(rng, 2, 4), _random_series(rng, 2, 4)

    for d in range(4):
        low = a.truncate(d) * b.truncate(d)
        assert degree_component(low, d).coeffs == degree_component(a * b, d).coeffs
