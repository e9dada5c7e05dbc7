import itertools

import numpy as np
import pytest

from johnsonfilt import (
    AutLetter,
    AutWord,
    Endomorphism,
    NotUpperTriangularError,
    RankMismatchError,
    SubgroupSpec,
    Word,
    alpha,
    apply,
    autword_commutator,
    autword_compile,
    bigA,
    commutator,
    compose,
    identity_endomorphism,
    invert,
    is_ia,
    project_pi,
    random_autword,
    rho,
    section_sigma,
    subgroup_generators,
    verify_commuting,
    verify_conjugation_action,
    verify_mccool,
    verify_projection,
)
from johnsonfilt.tests.utils import SEED, random_words, x

a = AutLetter.alpha


def aw(n, *letters):
    return AutWord(n, letters)


def test_alpha():

    f = alpha(3, 2, 1)

    assert f(x(3, 2)) == x(3, 1) * x(3, 2) * x(3, 1, -1)
    assert f(x(3, 3)) == x(3, 3)
    assert f(x(3, 1)) == x(3, 1)

    inverse = a(2, 1, inverse=True).compile(3)
    assert compose(f, inverse).is_identity()
    assert compose(inverse, f).is_identity()


@pytest.mark.parametrize(
    "i, j, match",
    [
        (4, 1, r"'i' must be in 1..3"),
        (1, 0, "'j' must be at least 1"),
        (2, 2, "'i' and 'j' must differ"),
    ],
)
def test_alpha_invalid(i, j, match):

    with pytest.raises(ValueError, match=match):
        alpha(3, i, j)


def test_bigA():

    f = bigA(3, 1, 2, 3)

    assert f(x(3, 1)) == commutator(x(3, 2), x(3, 3)) * x(3, 1)
    assert f(x(3, 2)) == x(3, 2)
    assert is_ia(f)


@pytest.mark.parametrize(
    "indices, match",
    [
        ((2, 2, 3), "'i' must not be one of 'j', 'k'"),
        ((1, 3, 2), "'j' must be smaller than 'k'"),
        ((1, 2), "A needs three indices"),
    ],
)
def test_bigA_invalid(indices, match):

    with pytest.raises(ValueError, match=match):
        AutLetter("A", indices)


def test_rho():

    w = commutator(x(3, 1), x(3, 2))

    assert rho(3, [0], [0]).is_identity()

    f = rho(3, [1], [-1])
    assert f(x(3, 3)) == w * x(3, 3) * invert(w)
    assert f(x(3, 1)) == x(3, 1)
    assert is_ia(f)

    g = rho(4, [2, 0], [1, -3])
    w4 = commutator(x(4, 1), x(4, 2))
    assert g(x(4, 3)) == (w4**2) * x(4, 3) * w4
    assert g(x(4, 4)) == x(4, 4) * w4**-3
    assert is_ia(g)


def test_rho_invalid():

    with pytest.raises(ValueError, match="'n' must be at least 3"):
        rho(2, [], [])

    with pytest.raises(ValueError, match=r"need 2 entries \(j = 3..4\)"):
        rho(4, [1], [1])


def test_rho_rank_mismatch():

    with pytest.raises(RankMismatchError, match="expected 2 for rank 4"):
        AutWord(4, [AutLetter.rho([1], [-1])])


def test_letter_str():

    assert str(a(3, 1)) == "a(3,1)"
    assert str(a(3, 1, inverse=True)) == "a(3,1)^-1"
    assert str(AutLetter.bigA(1, 2, 3)) == "A(1,2,3)"
    assert str(AutLetter.rho([1, 0], [-1, 2])) == "rho(1,0;-1,2)"
    assert repr(a(2, 1)) == "<johnsonfilt.AutLetter a(2,1)>"


def test_letter_invalid_kind():

    with pytest.raises(ValueError, match="'kind' must be one of"):
        AutLetter("beta", (1, 2))


@pytest.mark.parametrize("n", [3, 4])
def test_letter_inverse_compiles_to_inverse(n):

    letters = [a(i, j) for i, j in itertools.permutations(range(1, n + 1), 2)]
    letters += [
        AutLetter.bigA(i, j, k)
        for i in range(1, n + 1)
        for j, k in itertools.combinations(range(1, n + 1), 2)
        if i not in (j, k)
    ]
    letters.append(AutLetter.rho([1] * (n - 2), [-1] * (n - 2)))

    for letter in letters:
        f, g = letter.compile(n), letter.invert().compile(n)
        assert compose(f, g).is_identity()
        assert compose(g, f).is_identity()
        assert is_ia(f)


def test_endomorphism_invalid():

    with pytest.raises(ValueError, match="Expected 2 generator images"):
        Endomorphism(2, [x(2, 1)])

    with pytest.raises(TypeError, match="images must be Words"):
        Endomorphism(2, [x(2, 1), "x2"])

    with pytest.raises(RankMismatchError, match="expected 2"):
        Endomorphism(2, [x(2, 1), x(3, 2)])


def test_endomorphism_str_repr():

    f = alpha(2, 2, 1)

    assert str(f) == "x1 -> x1, x2 -> x1 x2 x1^-1"

    result = repr(f)
    assert result.startswith("<johnsonfilt.Endomorphism>")
    assert "x1 x2 x1^-1" in result


def test_apply():

    f = alpha(3, 2, 1)

    assert apply(f, Word.identity(3)).is_identity()
    assert apply(f, x(3, 2, -1)) == x(3, 1) * x(3, 2, -1) * x(3, 1, -1)

    with pytest.raises(RankMismatchError, match="Cannot apply"):
        apply(f, x(2, 1))


def test_apply_multiplicative():

    f = autword_compile(random_autword(3, 5, np.random.default_rng(SEED), upper=False))

    words = random_words(3, 6, 10)
    for u, v in zip(words, words[1:]):
        assert f(u * v) == f(u) * f(v)


def test_compose():

    f, g = alpha(3, 3, 1), bigA(3, 2, 1, 3)

    assert compose(f, identity_endomorphism(3)) == f
    assert compose(identity_endomorphism(3), f) == f
    assert f * g == compose(f, g)

    for w in random_words(3, 6, 10):
        assert apply(compose(f, g), w) == apply(f, apply(g, w))

    with pytest.raises(RankMismatchError, match="Cannot compose"):
        compose(f, alpha(2, 2, 1))


def test_is_ia():

    swap = Endomorphism(2, [x(2, 2), x(2, 1)])
    assert not is_ia(swap)
    assert not is_ia(Endomorphism(2, [x(2, 1) * x(2, 1), x(2, 2)]))
    assert is_ia(identity_endomorphism(4))

    for i, j in itertools.permutations(range(1, 4), 2):
        assert is_ia(alpha(3, i, j))


def test_autword_cancels():

    word = aw(3, a(2, 1), a(2, 1, inverse=True))

    assert word.is_identity()
    assert str(word) == "1"
    assert autword_compile(word).is_identity()

    u = aw(3, a(3, 1), a(2, 1))
    assert (u * ~u).is_identity()
    assert autword_compile(u ** -2) == autword_compile(~u * ~u)
    assert str(u) == "a(3,1) * a(2,1)"
    assert repr(u) == "<johnsonfilt.AutWord rank=3: a(3,1) * a(2,1)>"


def test_autword_invalid():

    with pytest.raises(ValueError, match=r"indices of a\(3,1\) must be in 1..2"):
        AutWord(2, [a(3, 1)])

    with pytest.raises(TypeError, match="letters must be AutLetters"):
        AutWord(2, ["a(2,1)"])

    with pytest.raises(RankMismatchError, match="Cannot combine AutWords"):
        aw(2, a(2, 1)) * aw(3, a(2, 1))


def test_autword_compile_order():

    # u * v applies v first
    u, v = aw(3, a(2, 1)), aw(3, a(1, 3))
    f = autword_compile(u * v)

    assert f == compose(autword_compile(u), autword_compile(v))
    assert f(x(3, 1)) == alpha(3, 2, 1)(alpha(3, 1, 3)(x(3, 1)))


def test_autword_compile_homomorphism():

    rng = np.random.default_rng(SEED)
    for _ in range(20):
        u = random_autword(4, 4, rng, upper=False)
        v = random_autword(4, 4, rng, upper=False)

        expected = compose(autword_compile(u), autword_compile(v))
        assert autword_compile(u * v) == expected
        assert compose(autword_compile(u), autword_compile(~u)).is_identity()


def test_autword_commutator_compiles():

    u, v = aw(3, a(3, 1)), aw(3, a(3, 2))
    f, g = autword_compile(u), autword_compile(v)
    fi, gi = autword_compile(~u), autword_compile(~v)

    result = autword_compile(autword_commutator(u, v))
    assert result == compose(compose(compose(fi, gi), f), g)


def test_project_pi():

    assert project_pi(aw(3, a(3, 1))) == AutWord.identity(2)
    assert project_pi(aw(3, a(2, 1))) == aw(2, a(2, 1))
    assert project_pi(aw(3, a(2, 1), a(3, 2), a(2, 1, inverse=True))) == AutWord(2)

    u = aw(3, a(2, 1), a(3, 1, inverse=True))
    assert project_pi(section_sigma(u)) == u
    assert section_sigma(u).rank == 4


@pytest.mark.parametrize("letter", [a(1, 2), AutLetter.bigA(1, 2, 3)])
def test_project_pi_not_upper(letter):

    with pytest.raises(NotUpperTriangularError, match="expected letters alpha"):
        project_pi(aw(3, letter))

    with pytest.raises(NotUpperTriangularError):
        section_sigma(aw(3, letter))


def test_subgroup_generators():

    assert subgroup_generators(SubgroupSpec.G(4, 3, 2)) == [a(3, 1), a(3, 2)]

    spec = SubgroupSpec.H(4, 3)
    assert [str(f) for f in spec.factors()] == ["G(4,3,2)", "G(4,4,2)"]
    assert subgroup_generators(spec) == [a(3, 1), a(3, 2), a(4, 1), a(4, 2)]

    for j in range(1, 5):
        assert len(subgroup_generators(SubgroupSpec.G(5, 5, j))) == j

    # n - k + 1 factors
    assert len(SubgroupSpec.H(5, 2).factors()) == 4


@pytest.mark.parametrize(
    "args, match",
    [
        (("G", 4, 3, 3), r"G\(n, k, j\) needs"),
        (("G", 4, 5, 1), r"G\(n, k, j\) needs"),
        (("H", 4, 1), r"H\(n, k\) needs 2 <= k <= n"),
        (("H", 4, 5), r"H\(n, k\) needs 2 <= k <= n"),
        (("K", 4, 3), "'kind' must be 'G' or 'H'"),
    ],
)
def test_subgroup_spec_invalid(args, match):

    with pytest.raises(ValueError, match=match):
        SubgroupSpec(*args)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_verify_mccool(n):

    report = verify_mccool(n)

    assert report.ok
    assert report
    assert report.summary() == "OK: 4 relation families, 0 failures"
    assert report.cases > 0


def test_verify_mccool_invalid():

    with pytest.raises(ValueError, match="'n' must be at least 3"):
        verify_mccool(2)


def test_mccool_relation_two_needs_disjoint_indices():

    # overlapping index sets do not commute in general
    u, v = aw(3, a(2, 1)), aw(3, a(1, 3))
    assert not autword_compile(autword_commutator(u, v)).is_identity()


@pytest.mark.parametrize("n, k", [(3, 2), (4, 2), (4, 3), (5, 3), (5, 4)])
def test_verify_commuting(n, k):

    report = verify_commuting(n, k)
    assert report.ok


def test_verify_commuting_pairs():

    report = verify_commuting(4, 3)
    assert report.checked == 4

    assert autword_compile(autword_commutator(aw(4, a(3, 1)), aw(4, a(4, 2)))).is_identity()
    assert autword_compile(autword_commutator(aw(4, a(3, 2)), aw(4, a(4, 2)))).is_identity()

    # same factor: free, does not commute
    same = autword_commutator(aw(4, a(4, 1)), aw(4, a(4, 2)))
    assert not autword_compile(same).is_identity()


def test_verify_conjugation_action():

    assert verify_conjugation_action(3, 3, [1, 2]).ok
    assert verify_conjugation_action(4, 2, [1, 3, 4], signs=[1, -1, 1]).ok

    rng = np.random.default_rng(SEED)
    for _ in range(30):
        m = int(rng.integers(1, 5))
        rs = rng.integers(1, 4, size=m).tolist()
        signs = rng.choice([-1, 1], size=m).tolist()
        assert verify_conjugation_action(4, 4, rs, signs).ok


def test_verify_conjugation_action_invalid():

    with pytest.raises(ValueError, match="same length"):
        verify_conjugation_action(3, 3, [1, 2], signs=[1])


def test_verify_projection():

    rng = np.random.default_rng(SEED)
    for n in range(2, 6):
        for _ in range(5):
            word = random_autword(n, 6, rng)
            assert verify_projection(n, word).ok

    with pytest.raises(RankMismatchError, match="expected 4"):
        verify_projection(4, aw(3, a(2, 1)))


def test_random_autword():

    rng = np.random.default_rng(SEED)
    word = random_autword(4, 10, rng)

    assert word.rank == 4
    assert len(word) <= 10
    assert all(letter.is_upper_alpha() for letter in word)
