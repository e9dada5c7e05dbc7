import itertools
import json

import numpy as np
import pytest
from sympy.ntheory import divisors

from johnsonfilt import (
    LieElement,
    NotALieElementError,
    RankMismatchError,
    Series,
    bracketing,
    expand_to_tensor,
    format_bracket,
    is_lyndon,
    lie_bracket,
    lie_to_lyndon,
    lyndon_words,
    random_lie_element,
    witt_rank,
    witt_rank_moebius,
)
from johnsonfilt.core.lielyndon import _tree_leaves, tree_to_element
from johnsonfilt.tests.utils import SEED, brute_force_lyndon_count


@pytest.mark.parametrize(
    "q, s, expected",
    [
        [2, 1, [(1,), (2,)]],
        [2, 3, [(1, 1, 2), (1, 2, 2)]],
        [1, 2, []],
        [1, 1, [(1,)]],
        [3, 2, [(1, 2), (1, 3), (2, 3)]],
        [2, 4, [(1, 1, 1, 2), (1, 1, 2, 2), (1, 2, 2, 2)]],
    ],
)
def test_lyndon_words(q, s, expected):
    assert lyndon_words(q, s) == expected


def test_lyndon_words_sorted_and_lyndon():

    words = lyndon_words(3, 5)

    assert words == sorted(words)
    assert all(is_lyndon(w) for w in words)
    assert len(set(words)) == len(words)


@pytest.mark.parametrize("q, s", itertools.product(range(1, 5), range(1, 9)))
def test_lyndon_words_count(q, s):
    assert len(lyndon_words(q, s)) == witt_rank(q, s)


def test_witt_rank_table():

    result = [witt_rank(2, s) for s in range(1, 11)]
    expected = [2, 1, 2, 3, 6, 9, 18, 30, 56, 99]

    assert result == expected
    assert result == [brute_force_lyndon_count(2, s) for s in range(1, 11)]


@pytest.mark.parametrize("q", range(1, 9))
def test_witt_rank_degree_one(q):
    assert witt_rank(q, 1) == q


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("p, r", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_witt_rank_prime_power(q, p, r):

    s = p**r
    expected = (q**s - q ** (p ** (r - 1))) // s
    assert witt_rank(q, s) == expected


@pytest.mark.parametrize("q, s", itertools.product(range(1, 6), range(1, 11)))
def test_witt_recursion(q, s):

    assert q**s == sum(m * witt_rank(q, m) for m in divisors(s))
    assert witt_rank_moebius(q, s) == witt_rank(q, s)
    assert type(witt_rank_moebius(q, s)) is int


@pytest.mark.parametrize("func", [witt_rank, lyndon_words])
def test_witt_rank_invalid(func):

    with pytest.raises(ValueError, match="'s' must be at least 1"):
        func(2, 0)

    with pytest.raises(ValueError, match="'q' must be at least 1"):
        func(0, 2)


@pytest.mark.parametrize(
    "word, expected",
    [
        [(1, 1, 2), True],
        [(1, 2, 2), True],
        [(1, 2, 1), False],
        [(1, 1), False],
        [(2, 1), False],
        [(1,), True],
        [(), False],
    ],
)
def test_is_lyndon(word, expected):
    assert is_lyndon(word) is expected


@pytest.mark.parametrize(
    "word, expected",
    [
        [(1,), 1],
        [(1, 2), (1, 2)],
        [(1, 1, 2), (1, (1, 2))],
        [(1, 2, 2), ((1, 2), 2)],
        [(1, 3, 2), ((1, 3), 2)],
        [(1, 2, 3), (1, (2, 3))],
        [(1, 1, 2, 2), (1, ((1, 2), 2))],
    ],
)
def test_bracketing(word, expected):

    result = bracketing(word)

    assert result == expected
    assert _tree_leaves(result) == word


def test_bracketing_not_lyndon():

    with pytest.raises(ValueError, match="is not a Lyndon word"):
        bracketing((2, 1))


def test_format_bracket():

    assert format_bracket((1, (1, 2))) == "[x1,[x1,x2]]"
    assert format_bracket(3) == "x3"
    assert format_bracket((1, 2), leaf=lambda r: f"a(3,{r})") == "[a(3,1),a(3,2)]"


def test_lie_element_init():

    e = LieElement(2, 3, {(1, 1, 2): 1, (1, 2, 2): 0})

    assert e.coords == {(1, 1, 2): 1}
    assert e[(1, 1, 2)] == 1
    assert e[(1, 2, 2)] == 0
    assert e.to_vector() == [1, 0]


@pytest.mark.parametrize(
    "coords, match",
    [
        [{(1, 2): 1}, "does not have degree 3"],
        [{(1, 2, 1): 1}, "is not a Lyndon word"],
        [{(1, 1, 3): 1}, r"'letter' must be in 1..2"],
    ],
)
def test_lie_element_invalid(coords, match):

    with pytest.raises(ValueError, match=match):
        LieElement(2, 3, coords)


def test_lie_element_text():

    e = LieElement(2, 3, {(1, 1, 2): 1, (1, 2, 2): 3})
    assert str(e) == "1*[x1,[x1,x2]] + 3*[[x1,x2],x2]"

    e = LieElement(2, 3, {(1, 1, 2): -1, (1, 2, 2): -3})
    assert str(e) == "-1*[x1,[x1,x2]] - 3*[[x1,x2],x2]"

    assert str(LieElement.zero(2, 3)) == "0"
    assert repr(LieElement.generator(2, 1)) == "<johnsonfilt.LieElement q=2 s=1: 1*x1>"


def test_lie_element_arithmetic():

    a = LieElement(2, 3, {(1, 1, 2): 1})
    b = LieElement(2, 3, {(1, 1, 2): 2, (1, 2, 2): -1})

    assert a + b == LieElement(2, 3, {(1, 1, 2): 3, (1, 2, 2): -1})
    assert b - b == LieElement.zero(2, 3)
    assert -a == a.scale(-1)
    assert 2 * a == a + a
    assert (0 * a).is_zero()

    with pytest.raises(RankMismatchError, match="same alphabet and degree"):
        a + LieElement.generator(2, 1)


def test_lie_element_json():

    e = LieElement(2, 3, {(1, 1, 2): -1, (1, 2, 2): 10**30})

    data = json.loads(json.dumps(e.to_json()))
    assert data == [
        {"word": [1, 1, 2], "coeff": "-1"},
        {"word": [1, 2, 2], "coeff": str(10**30)},
    ]
    assert LieElement.from_json(2, 3, data) == e


def test_expand_to_tensor():

    result = expand_to_tensor(LieElement.basis_element(2, (1, 2)))
    assert result.coeffs == {(1, 2): 1, (2, 1): -1}

    assert expand_to_tensor(LieElement.zero(2, 3)).is_zero()

    result = expand_to_tensor(LieElement.basis_element(2, (1, 1, 2)))
    assert result.coeffs == {(1, 1, 2): 1, (1, 2, 1): -2, (2, 1, 1): 1}


def test_lie_to_lyndon():

    t = Series(2, 2, {(1, 2): 1, (2, 1): -1})
    assert lie_to_lyndon(t) == LieElement(2, 2, {(1, 2): 1})

    e = LieElement(2, 3, {(1, 1, 2): -1, (1, 2, 2): 3})
    assert lie_to_lyndon(expand_to_tensor(e)) == e


def test_lie_to_lyndon_not_lie():

    t = Series(2, 2, {(1, 2): 1, (2, 1): 1})
    with pytest.raises(NotALieElementError, match="not a Lie element"):
        lie_to_lyndon(t)

    with pytest.raises(NotALieElementError, match="not a Lie element"):
        lie_to_lyndon(Series(2, 2, {(1, 1): 1}))


def test_lie_to_lyndon_degree():

    assert lie_to_lyndon(Series.zero(2, 3), s=3) == LieElement.zero(2, 3)

    with pytest.raises(ValueError, match="Cannot infer the degree"):
        lie_to_lyndon(Series.zero(2, 3))

    with pytest.raises(ValueError, match="Cannot infer the degree"):
        lie_to_lyndon(Series(2, 3, {(1,): 1, (1, 2): 1}))

    with pytest.raises(ValueError, match="not homogeneous of degree 2"):
        lie_to_lyndon(Series(2, 3, {(1,): 1}), s=2)


def test_lie_to_lyndon_round_trip():

    rng = np.random.default_rng(SEED)
    for _ in range(100):
        q = int(rng.integers(1, 4))
        s = int(rng.integers(1, 6))
        e = random_lie_element(q, s, rng)

        assert lie_to_lyndon(expand_to_tensor(e), s=s) == e


def test_lie_bracket():

    e1, e2 = LieElement.generator(2, 1), LieElement.generator(2, 2)

    assert lie_bracket(e1, e2) == LieElement(2, 2, {(1, 2): 1})
    assert lie_bracket(e2, e1) == LieElement(2, 2, {(1, 2): -1})
    assert lie_bracket(e1, e1).is_zero()
    assert lie_bracket(lie_bracket(e1, e2), e2) == LieElement(2, 3, {(1, 2, 2): 1})


def test_lie_bracket_mismatch():

    with pytest.raises(RankMismatchError, match="Cannot bracket elements over 2 and 3"):
        lie_bracket(LieElement.generator(2, 1), LieElement.generator(3, 1))


def test_tree_to_element():

    # [[x1, x2], x3] = [x1, [x2, x3]] + [[x1, x3], x2]
    result = tree_to_element(((1, 2), 3), 3)
    assert result == LieElement(3, 3, {(1, 2, 3): 1, (1, 3, 2): 1})

    for word in lyndon_words(3, 4):
        assert tree_to_element(bracketing(word), 3) == LieElement.basis_element(3, word)


def test_lie_bracket_identities():

    rng = np.random.default_rng(SEED + 1)
    for _ in range(100):
        q = int(rng.integers(1, 4))
        sa, sb, sc = (int(v) for v in rng.integers(1, 3, size=3))

        a = random_lie_element(q, sa, rng)
        b = random_lie_element(q, sb, rng)
        c = random_lie_element(q, sc, rng)

        # alternation and antisymmetry
        assert lie_bracket(a, a).is_zero()
        assert lie_bracket(a, b) == -lie_bracket(b, a)

        # Jacobi
        total = (
            lie_bracket(a, lie_bracket(b, c)).coords,
            lie_bracket(b, lie_bracket(c, a)).coords,
            lie_bracket(c, lie_bracket(a, b)).coords,
        )
        summed = {}
        for coords in total:
            for word, coeff in coords.items():
                summed[word] = summed.get(word, 0) + coeff
        assert not any(summed.values())


def test_random_lie_element():

    rng = np.random.default_rng(0)
    e = random_lie_element(3, 4, rng, max_coeff=2)

    assert (e.q, e.s) == (3, 4)
    assert all(-2 <= c <= 2 for c in e.coords.values())
    assert set(e.coords) <= set(lyndon_words(3, 4))
