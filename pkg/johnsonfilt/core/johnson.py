"""Johnson filtration, Johnson homomorphisms and derivations of the free Lie algebra."""

import logging

import numpy as np
import pandas as pd
import xarray as xr
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from johnsonfilt.core.automorphisms import (
    AutLetter,
    AutWord,
    NotIAError,
    SubgroupSpec,
    apply,
    autword_commutator,
    autword_compile,
    is_ia,
    random_autword,
)
from johnsonfilt.core.formatting import _display
from johnsonfilt.core.freegroup import (
    RankMismatchError,
    Word,
    commutator,
    invert,
    left_normed_commutator,
    reverse,
)
from johnsonfilt.core.lielyndon import (
    LieElement,
    _bracketing,
    _element_expansion,
    _lyndon_words,
    bracketing,
    format_bracket,
    lie_to_lyndon,
    lyndon_words,
    witt_rank,
)
from johnsonfilt.core.magnus import FiltrationError, filtration_degree, leading_lie
from johnsonfilt.core.options import OPTIONS
from johnsonfilt.core.reports import VerificationReport
from johnsonfilt.core.tensorseries import Series, _concat_product, _linear_combination
from johnsonfilt.core.utils import _check_index, _check_positive, _object_matrix

logger = logging.getLogger(__name__)


class JohnsonDegree:
    """
    depth of an IA endomorphism in the Johnson filtration

    Parameters
    ----------
    value : int
        The degree, or the cap if ``capped``.
    capped : bool, default: False
        True if the endomorphism passed the test at the cap, i.e. its degree is at
        least ``value``.
    """

    __slots__ = ("value", "capped")

    def __init__(self, value, capped=False):
        object.__setattr__(self, "value", int(value))
        object.__setattr__(self, "capped", bool(capped))

    def __setattr__(self, name, value):
        raise AttributeError("JohnsonDegree is immutable")

    def at_least(self, s):
        return s <= self.value

    def __eq__(self, other):
        if isinstance(other, JohnsonDegree):
            return self.value == other.value and self.capped == other.capped
        if isinstance(other, int) and not self.capped:
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.capped))

    def __str__(self):
        return f">= {self.value}" if self.capped else str(self.value)

    def __repr__(self):
        return f"<johnsonfilt.JohnsonDegree {self}>"


def _differences(f):
    """the words f(x_i) x_i^-1"""

    return [
        image * Word.generator(f.rank, i, -1)
        for i, image in enumerate(f.images, start=1)
    ]


def johnson_degree(f, cap):
    """
    largest ``s <= cap`` such that every ``f(x_i) x_i^-1`` lies in Γ^(s+1)

    Parameters
    ----------
    f : Endomorphism
        An IA endomorphism.
    cap : int
        Largest degree tested.

    Returns
    -------
    degree : JohnsonDegree
        Capped at ``cap`` if the test passes at ``cap``.

    Raises
    ------
    NotIAError
        If ``f`` does not act trivially on the abelianization.
    """

    _check_positive("cap", cap)

    if not is_ia(f):
        raise NotIAError("not in IA_n: the endomorphism acts nontrivially on H_1")

    degrees = [filtration_degree(word, cap) for word in _differences(f)]
    exact = [degree.value for degree in degrees if not degree.capped]

    if not exact:
        return JohnsonDegree(cap, capped=True)

    return JohnsonDegree(min(exact) - 1)


def is_in_johnson_filtration(f, s):
    """True if ``f`` is IA and has Johnson degree at least ``s``"""

    _check_positive("s", s)
    return is_ia(f) and johnson_degree(f, s).capped


class Derivation:
    """
    degree ``s`` derivation of the free Lie algebra, given on the generators

    A derivation of degree ``s`` sends each ``x_i`` to an element of degree
    ``s + 1`` and extends to brackets by the Leibniz rule.

    Parameters
    ----------
    rank : int
        Number of generators ``n``.
    s : int
        Degree.
    values : sequence of LieElement
        ``values[i - 1]`` is the image of ``x_i``, of degree ``s + 1`` over ``n``
        letters.
    """

    __slots__ = ("rank", "s", "values")

    def __init__(self, rank, s, values):

        _check_positive("rank", rank)
        _check_positive("s", s)

        values = tuple(values)
        if len(values) != rank:
            raise ValueError(f"Expected {rank} values, found {len(values)}")

        for value in values:
            if value.q != rank or value.s != s + 1:
                raise ValueError(
                    f"values must have alphabet {rank} and degree {s + 1}, found "
                    f"alphabet {value.q} and degree {value.s}"
                )

        self.rank = int(rank)
        self.s = int(s)
        self.values = values

    @classmethod
    def zero(cls, rank, s):
        return cls(rank, s, [LieElement.zero(rank, s + 1)] * rank)

    def __getitem__(self, i):
        _check_index("i", i, self.rank)
        return self.values[i - 1]

    def is_zero(self):
        return all(value.is_zero() for value in self.values)

    def _check_compatible(self, other):
        if (self.rank, self.s) != (other.rank, other.s):
            raise RankMismatchError(
                "Derivations must have the same rank and degree, found "
                f"(n={self.rank}, s={self.s}) and (n={other.rank}, s={other.s})"
            )

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return (self.rank, self.s, self.values) == (other.rank, other.s, other.values)

    def __hash__(self):
        return hash((self.rank, self.s, self.values))

    def __add__(self, other):
        self._check_compatible(other)
        values = [a + b for a, b in zip(self.values, other.values)]
        return Derivation(self.rank, self.s, values)

    def __sub__(self, other):
        self._check_compatible(other)
        values = [a - b for a, b in zip(self.values, other.values)]
        return Derivation(self.rank, self.s, values)

    def __neg__(self):
        return Derivation(self.rank, self.s, [-value for value in self.values])

    def to_json(self):
        values = {
            f"x{i}": value.to_json() for i, value in enumerate(self.values, start=1)
        }
        return {"degree": self.s, "values": values}

    @classmethod
    def from_json(cls, rank, data):
        s = data["degree"]
        values = [
            LieElement.from_json(rank, s + 1, data["values"][f"x{i}"])
            for i in range(1, rank + 1)
        ]
        return cls(rank, s, values)

    def to_dataframe(self):
        generators = [f"x{i}" for i in range(1, self.rank + 1)]
        return pd.DataFrame(
            {"generator": generators, "value": [v.to_text() for v in self.values]}
        )

    def __str__(self):
        return "\n".join(
            f"x{i} -> {value}" for i, value in enumerate(self.values, start=1)
        )

    def __repr__(self):
        metadata = {"rank": self.rank, "degree": self.s}
        return _display(self, self.to_dataframe(), metadata=metadata)


def tau(f, s):
    """
    Johnson homomorphism of degree ``s``

    Parameters
    ----------
    f : Endomorphism
        IA endomorphism of Johnson degree at least ``s``.
    s : int

    Returns
    -------
    derivation : Derivation
        The value on ``x_i`` is the class of ``f(x_i) x_i^-1`` in degree ``s + 1``,
        zero if that word lies deeper.

    Raises
    ------
    FiltrationError
        If the Johnson degree of ``f`` is below ``s``.
    NotIAError
        If ``f`` is not IA.
    """

    degree = johnson_degree(f, s)
    if not degree.capped:
        raise FiltrationError(
            f"below filtration depth: Johnson degree is {degree}, need {s}"
        )

    values = [leading_lie(word, s + 1) for word in _differences(f)]
    return Derivation(f.rank, s, values)


def _check_lambda_indices(rs, q, n):

    _check_index("q", q, n)
    if not rs:
        raise ValueError("'rs' must not be empty")
    for r in rs:
        _check_positive("r", r)
        if r >= q:
            raise ValueError(f"all r_i must be smaller than q={q}, got {r}")


def lambda_word(rs, q, n=None):
    """
    left nested commutator of ``alpha(q, r_1), ..., alpha(q, r_m)``

    Parameters
    ----------
    rs : sequence of int
        Indices smaller than ``q``.
    q : int
    n : int, optional
        Rank, ``q`` by default.

    Returns
    -------
    aw : AutWord
    """

    n = q if n is None else n
    rs = tuple(rs)
    _check_lambda_indices(rs, q, n)

    words = [AutWord(n, [AutLetter.alpha(q, r)]) for r in rs]
    result = words[0]
    for word in words[1:]:
        result = autword_commutator(result, word)

    return result


def lambda_x(rs, n=None):
    """left nested commutator ``[...[x_r1, x_r2], ..., x_rm]`` in F_n"""

    rs = tuple(rs)
    if not rs:
        raise ValueError("'rs' must not be empty")

    n = max(rs) if n is None else n
    return left_normed_commutator(Word.generator(n, r) for r in rs)


def verify_prop62(n, q, rs, s=None):
    """
    check the action and the Johnson image of a nested commutator of ``alpha(q, r)``

    With ``P = reverse(lambda_x(rs))`` the compiled ``lambda_word(rs, q)`` must fix
    ``x_t`` for ``t != q`` and send ``x_q`` to ``P x_q P^-1``. Its Johnson image of
    the actual degree ``s'`` of ``lambda_x(rs)`` must vanish on ``x_t`` for
    ``t != q`` and equal the class of ``[P^-1, x_q^-1]`` on ``x_q``.

    Degenerate commutators (trivial ``lambda_x``) are vacuously true if the compiled
    word is the identity.

    Returns
    -------
    report : VerificationReport
        Truthy iff all checks passed.
    """

    rs = tuple(rs)
    s = len(rs) if s is None else s

    f = autword_compile(lambda_word(rs, q, n))
    lx = lambda_x(rs, n)

    case = f"q={q}, rs={rs}"
    failures = []
    notes = []

    if lx.is_identity():
        notes.append("degenerate, vacuously true")
        if not f.is_identity():
            failures.append(("action", case, "trivial commutator acts nontrivially"))
        return VerificationReport("prop62", 0, "checks", failures=failures, notes=notes)

    conjugator = reverse(lx)
    xq = Word.generator(n, q)

    for t in range(1, n + 1):
        x = Word.generator(n, t)
        expected = conjugator * x * invert(conjugator) if t == q else x
        if apply(f, x) != expected:
            failures.append(("action", f"{case}, x{t}", f"{apply(f, x)} != {expected}"))

    actual = filtration_degree(lx, s)
    if actual.capped:
        actual = filtration_degree(lx, s + 1)
    if actual.capped:
        failures.append(("degree", case, f"lambda_x lies deeper than Γ^{s + 1}"))
        return VerificationReport("prop62", 2, "checks", failures=failures, notes=notes)

    degree = actual.value
    if degree != s:
        notes.append(f"lambda_x has degree {degree}, compared at the actual degree")

    try:
        value = tau(f, degree)
    except FiltrationError as err:
        failures.append(("tau", case, str(err)))
        return VerificationReport("prop62", 2, "checks", failures=failures, notes=notes)

    expected = leading_lie(commutator(invert(conjugator), invert(xq)), degree + 1)
    for t in range(1, n + 1):
        target = expected if t == q else LieElement.zero(n, degree + 1)
        if value[t] != target:
            failures.append(("tau", f"{case}, x{t}", f"{value[t]} != {target}"))

    return VerificationReport("prop62", 2, "checks", failures=failures, notes=notes)


def _leibniz(D, tree, cache):
    """tensor expansions of ``tree`` and of ``D(tree)``"""

    if tree in cache:
        return cache[tree]

    if not isinstance(tree, tuple):
        result = {(tree,): 1}, _element_expansion(D.values[tree - 1])
    else:
        a, da = _leibniz(D, tree[0], cache)
        b, db = _leibniz(D, tree[1], cache)

        value = _linear_combination((1, _concat_product(a, b)), (-1, _concat_product(b, a)))
        derived = _linear_combination(
            (1, _concat_product(da, b)),
            (1, _concat_product(a, db)),
            (-1, _concat_product(db, a)),
            (-1, _concat_product(b, da)),
        )
        result = value, derived

    cache[tree] = result
    return result


def derivation_apply(D, e):
    """
    image of a Lie element under the derivation extending ``D``

    Uses ``D[a, b] = [D a, b] + [a, D b]`` along the standard bracketing of every
    basis word.

    Parameters
    ----------
    D : Derivation
    e : LieElement
        Element over ``D.rank`` letters.

    Returns
    -------
    image : LieElement
        Of degree ``e.s + D.s``.
    """

    if e.q != D.rank:
        raise RankMismatchError(
            f"Cannot apply a derivation of rank {D.rank} to an element over {e.q} letters"
        )

    s = e.s + D.s
    if e.is_zero():
        return LieElement.zero(D.rank, s)

    cache = {}
    total = {}
    for word, coeff in e:
        _, derived = _leibniz(D, _bracketing(word), cache)
        for monomial, c in derived.items():
            total[monomial] = total.get(monomial, 0) + coeff * c

    total = {m: c for m, c in total.items() if c != 0}
    return lie_to_lyndon(Series._from_dict(D.rank, s, total), s=s)


def derivation_bracket(D, E):
    """
    bracket ``[D, E](x_i) = D(E(x_i)) - E(D(x_i))`` of degree ``D.s + E.s``

    Raises
    ------
    RankMismatchError
        If the ranks differ.
    """

    if D.rank != E.rank:
        raise RankMismatchError(
            f"Cannot bracket derivations of rank {D.rank} and {E.rank}"
        )

    values = [
        derivation_apply(D, e) - derivation_apply(E, d)
        for d, e in zip(D.values, E.values)
    ]
    return Derivation(D.rank, D.s + E.s, values)


def _derivation_columns(n, s):
    return [(i, word) for i in range(1, n + 1) for word in _lyndon_words(n, s + 1)]


def derivation_flatten(D):
    """
    dense coordinates of a derivation

    Returns
    -------
    row : list of int
        Coordinates of ``D(x_1), ..., D(x_n)`` in the Lyndon basis, concatenated.
    labels : list of str
        Column labels ``"x<i>:<bracket>"``.
    """

    row = [c for value in D.values for c in value.to_vector()]
    labels = [
        f"x{i}:{format_bracket(_bracketing(word))}"
        for i, word in _derivation_columns(D.rank, D.s)
    ]
    return row, labels


def _tree_autword(tree, n, m):
    """AutWord bracketing of ``alpha(m, r)`` letters along ``tree``"""

    if not isinstance(tree, tuple):
        return AutWord(n, [AutLetter.alpha(m, tree)])

    return autword_commutator(_tree_autword(tree[0], n, m), _tree_autword(tree[1], n, m))


def injectivity_matrix(n, k, s):
    """
    Johnson images of the degree ``s`` basis commutators of H(n, k)

    For every factor G(n, m, k - 1), ``m = k..n``, and every Lyndon word over
    ``k - 1`` letters of length ``s``, the AutWord commutator of ``alpha(m, .)``
    letters along its standard bracketing is mapped by ``tau`` of degree ``s`` and
    flattened to a row.

    Parameters
    ----------
    n, k : int
        ``2 <= k <= n``.
    s : int
        Degree.

    Returns
    -------
    matrix : xr.DataArray
        Integer matrix (``dtype=object``) with dims ``("generator", "basis")``.
        ``attrs`` hold the exact ``rank`` and the ``expected`` rank
        ``(n - k + 1) * witt_rank(k - 1, s)``.
    """

    spec = SubgroupSpec.H(n, k)
    _check_positive("s", s)

    columns = _derivation_columns(n, s)
    words = lyndon_words(k - 1, s)

    rows, labels = [], []
    for factor in spec.factors():
        m = factor.k
        for word in words:
            tree = bracketing(word)
            f = autword_compile(_tree_autword(tree, n, m))
            row, _ = derivation_flatten(tau(f, s))
            rows.append(row)
            labels.append(format_bracket(tree, leaf=lambda r, m=m: f"a({m},{r})"))

    logger.debug("built %d rows over %d columns for %s, s=%d", len(rows), len(columns), spec, s)

    matrix = _object_matrix(rows, len(columns))
    rank = int(DomainMatrix.from_list(rows, ZZ).rank()) if rows else 0
    expected = (n - k + 1) * witt_rank(k - 1, s)

    logger.debug("rank %d, expected %d", rank, expected)

    basis = [f"x{i}:{format_bracket(_bracketing(word))}" for i, word in columns]
    return xr.DataArray(
        matrix,
        dims=("generator", "basis"),
        coords={"generator": labels, "basis": basis},
        attrs={"n": n, "k": k, "s": s, "rank": rank, "expected": expected},
        name="tau",
    )


def _random_sample(n, rng):

    length = int(rng.integers(1, 4))
    if rng.integers(2):
        return random_autword(n, length, rng)

    u = random_autword(n, length, rng)
    v = random_autword(n, int(rng.integers(1, 3)), rng)
    return autword_commutator(u, v)


def verify_lie_morphism(n, samples, seed=None):
    """
    compare Johnson images of group commutators with brackets of derivations

    Draws pairs of upper triangular AutWords ``u``, ``v`` of exact Johnson degrees
    ``s, t <= 2`` and checks ``tau(compile([u, v]), s + t)`` against
    ``derivation_bracket(tau(compile(u), s), tau(compile(v), t))``.

    Parameters
    ----------
    n : int
        Rank, at least 2.
    samples : int
        Number of drawn pairs.
    seed : int, optional
        Seed of the random generator, ``OPTIONS["default_seed"]`` by default.

    Returns
    -------
    report : VerificationReport
        Pairs with a trivial or too deep element are skipped and counted in the
        notes.
    """

    _check_positive("n", n, minimum=2)
    _check_positive("samples", samples, minimum=0)

    seed = OPTIONS["default_seed"] if seed is None else seed
    rng = np.random.default_rng(seed)

    failures = []
    compared = skipped = 0
    for sample in range(samples):
        u, v = _random_sample(n, rng), _random_sample(n, rng)
        f, g = autword_compile(u), autword_compile(v)

        s, t = johnson_degree(f, 3), johnson_degree(g, 3)
        if s.capped or t.capped:
            skipped += 1
            continue

        h = autword_compile(autword_commutator(u, v))
        lhs = tau(h, s.value + t.value)
        rhs = derivation_bracket(tau(f, s.value), tau(g, t.value))

        compared += 1
        if lhs != rhs:
            failures.append(("lie morphism", f"sample {sample}: [{u}, {v}]", "differ"))

    logger.debug("compared %d samples, skipped %d", compared, skipped)

    notes = [f"{skipped} samples skipped (degree above 2 or trivial)"] if skipped else []
    return VerificationReport(
        "lie-morphism", compared, "samples", cases=samples, failures=failures, notes=notes
    )
