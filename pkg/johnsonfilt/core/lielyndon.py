"""The free Lie algebra on the Lyndon basis."""

import functools

from sympy.ntheory import divisors, mobius

from johnsonfilt.core.freegroup import RankMismatchError
from johnsonfilt.core.tensorseries import (
    Series,
    _concat_product,
    _linear_combination,
)
from johnsonfilt.core.utils import _check_index, _check_positive


class NotALieElementError(ValueError):
    pass


@functools.lru_cache(maxsize=None)
def _lyndon_words(q, s):

    # Duval's generation, lexicographic order; keep the words of length s
    out = []
    w = [1]
    while w:
        if len(w) == s:
            out.append(tuple(w))

        m = len(w)
        while len(w) < s:
            w.append(w[len(w) - m])

        while w and w[-1] == q:
            w.pop()

        if w:
            w[-1] += 1

    return tuple(out)


def lyndon_words(q, s):
    """
    Lyndon words of length ``s`` over the letters ``1..q``

    Parameters
    ----------
    q : int
        Alphabet size.
    s : int
        Word length.

    Returns
    -------
    words : list of tuple of int
        In lexicographic order. Its length is ``witt_rank(q, s)``.

    Examples
    --------
    >>> lyndon_words(2, 3)
    [(1, 1, 2), (1, 2, 2)]
    """

    _check_positive("q", q)
    _check_positive("s", s)

    return list(_lyndon_words(q, s))


@functools.lru_cache(maxsize=None)
def witt_rank(q, s):
    """
    rank of the degree ``s`` part of the free Lie algebra on ``q`` generators

    Computed by the recursion ``q**s = sum(m * d_m for m | s)``.

    Examples
    --------
    >>> witt_rank(2, 6)
    9
    """

    _check_positive("q", q)
    _check_positive("s", s)

    rest = sum(m * witt_rank(q, m) for m in divisors(s)[:-1])
    return (q**s - rest) // s


def witt_rank_moebius(q, s):
    """Witt rank by Möbius inversion, ``1/s * sum(mu(d) * q**(s/d) for d | s)``"""

    _check_positive("q", q)
    _check_positive("s", s)

    return int(sum(mobius(d) * q ** (s // d) for d in divisors(s))) // s


def is_lyndon(word):
    """True if ``word`` is strictly smaller than all its proper rotations"""

    word = tuple(word)
    if not word:
        return False

    return all(word < word[i:] + word[:i] for i in range(1, len(word)))


def _check_lyndon(word):

    if not is_lyndon(word):
        raise ValueError(f"{word} is not a Lyndon word")


@functools.lru_cache(maxsize=None)
def _bracketing(word):

    if len(word) == 1:
        return word[0]

    # right standard factorization: v is the smallest proper suffix
    split = min(range(1, len(word)), key=lambda i: word[i:])
    return (_bracketing(word[:split]), _bracketing(word[split:]))


def bracketing(word):
    """
    standard bracketing of a Lyndon word

    Parameters
    ----------
    word : sequence of int
        A Lyndon word.

    Returns
    -------
    tree : int or tuple
        Letters are leaves; a bracket ``[a, b]`` is the pair ``(a, b)``.

    Examples
    --------
    >>> bracketing((1, 1, 2))
    (1, (1, 2))
    >>> bracketing((1, 2, 2))
    ((1, 2), 2)
    """

    word = tuple(word)
    _check_lyndon(word)

    return _bracketing(word)


def format_bracket(tree, leaf=None):
    """text form of a bracket tree, e.g. ``[x1,[x1,x2]]``

    ``leaf`` maps a letter to its text, ``x<i>`` by default.
    """

    if isinstance(tree, tuple):
        left, right = tree
        return f"[{format_bracket(left, leaf)},{format_bracket(right, leaf)}]"

    return leaf(tree) if leaf is not None else f"x{tree}"


def _tree_leaves(tree):
    """letters of a bracket tree from left to right"""

    if isinstance(tree, tuple):
        return _tree_leaves(tree[0]) + _tree_leaves(tree[1])

    return (tree,)


@functools.lru_cache(maxsize=None)
def _tree_expansion(tree):

    if not isinstance(tree, tuple):
        return {(tree,): 1}

    a = _tree_expansion(tree[0])
    b = _tree_expansion(tree[1])

    return _linear_combination((1, _concat_product(a, b)), (-1, _concat_product(b, a)))


def _lyndon_expansion(word):
    # cached, do not mutate
    return _tree_expansion(_bracketing(word))


class LieElement:
    """
    homogeneous element of the free Lie algebra in Lyndon coordinates

    Parameters
    ----------
    q : int
        Alphabet size.
    s : int
        Degree.
    coords : dict, optional
        Mapping from Lyndon words of length ``s`` over ``1..q`` to integers.

    Examples
    --------
    >>> from johnsonfilt import LieElement
    >>> print(LieElement(2, 3, {(1, 1, 2): 1, (1, 2, 2): 3}))
    1*[x1,[x1,x2]] + 3*[[x1,x2],x2]
    """

    __slots__ = ("q", "s", "_coords")

    def __init__(self, q, s, coords=None):

        _check_positive("q", q)
        _check_positive("s", s)

        clean = {}
        for word, coeff in (coords or {}).items():
            word = tuple(int(i) for i in word)
            if len(word) != s:
                raise ValueError(f"{word} does not have degree {s}")
            for i in word:
                _check_index("letter", i, q)
            _check_lyndon(word)
            if coeff != 0:
                clean[word] = int(coeff)

        self.q = int(q)
        self.s = int(s)
        self._coords = clean

    @classmethod
    def _from_dict(cls, q, s, coords):
        self = object.__new__(cls)
        self.q = q
        self.s = s
        self._coords = coords
        return self

    @classmethod
    def zero(cls, q, s):
        return cls._from_dict(q, s, {})

    @classmethod
    def generator(cls, q, i):
        """the degree one element ``x_i``"""
        return cls(q, 1, {(i,): 1})

    @classmethod
    def basis_element(cls, q, word):
        return cls(q, len(word), {tuple(word): 1})

    @property
    def coords(self):
        return dict(self._coords)

    def __getitem__(self, word):
        return self._coords.get(tuple(word), 0)

    def __iter__(self):
        yield from sorted(self._coords.items())

    def __len__(self):
        return len(self._coords)

    def is_zero(self):
        return not self._coords

    def to_vector(self):
        """dense coordinates ordered as ``lyndon_words(q, s)``"""
        return [self._coords.get(word, 0) for word in _lyndon_words(self.q, self.s)]

    def _check_compatible(self, other):
        if (self.q, self.s) != (other.q, other.s):
            raise RankMismatchError(
                "LieElements must have the same alphabet and degree, found "
                f"(q={self.q}, s={self.s}) and (q={other.q}, s={other.s})"
            )

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return (self.q, self.s, self._coords) == (other.q, other.s, other._coords)

    def __hash__(self):
        return hash((self.q, self.s, frozenset(self._coords.items())))

    def __add__(self, other):
        self._check_compatible(other)
        coords = _linear_combination((1, self._coords), (1, other._coords))
        return LieElement._from_dict(self.q, self.s, coords)

    def __sub__(self, other):
        self._check_compatible(other)
        coords = _linear_combination((1, self._coords), (-1, other._coords))
        return LieElement._from_dict(self.q, self.s, coords)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, factor):
        if factor == 0:
            return LieElement.zero(self.q, self.s)
        coords = {w: factor * c for w, c in self._coords.items()}
        return LieElement._from_dict(self.q, self.s, coords)

    def __rmul__(self, factor):
        if isinstance(factor, int):
            return self.scale(factor)
        return NotImplemented

    def to_text(self):
        """text form using the standard bracketing of every basis word"""

        if not self._coords:
            return "0"

        parts = []
        for word, coeff in self:
            body = format_bracket(_bracketing(word))
            if not parts:
                parts.append(f"{coeff}*{body}")
            elif coeff > 0:
                parts.append(f"+ {coeff}*{body}")
            else:
                parts.append(f"- {-coeff}*{body}")

        return " ".join(parts)

    def to_json(self):
        """list of ``{"word": [...], "coeff": "..."}`` with string integers"""
        return [{"word": list(word), "coeff": str(coeff)} for word, coeff in self]

    @classmethod
    def from_json(cls, q, s, data):
        coords = {tuple(item["word"]): int(item["coeff"]) for item in data}
        return cls(q, s, coords)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        from johnsonfilt.core.formatting import maybe_truncate

        return f"<johnsonfilt.LieElement q={self.q} s={self.s}: {maybe_truncate(self)}>"


def _element_expansion(e):

    out = {}
    for word, coeff in e._coords.items():
        for monomial, c in _lyndon_expansion(word).items():
            out[monomial] = out.get(monomial, 0) + coeff * c

    return {m: c for m, c in out.items() if c != 0}


def expand_to_tensor(e):
    """
    image of a Lie element in the tensor algebra under ``[a, b] = ab - ba``

    Returns
    -------
    series : Series
        Homogeneous of degree ``e.s``, with rank ``e.q`` and truncation ``e.s``.
    """

    return Series._from_dict(e.q, e.s, _element_expansion(e))


def lie_to_lyndon(t, s=None):
    """
    Lyndon coordinates of a homogeneous Lie polynomial

    The expansion of the bracketing of a Lyndon word ``w`` is ``w`` plus
    lexicographically larger words. Hence the smallest word of the residual is a
    Lyndon word whose coefficient is its coordinate; it is peeled off until nothing
    is left.

    Parameters
    ----------
    t : Series
        Homogeneous series.
    s : int, optional
        Degree of ``t``. Required if ``t`` is zero.

    Returns
    -------
    element : LieElement

    Raises
    ------
    NotALieElementError
        If ``t`` is not in the free Lie algebra.
    """

    if s is None:
        degrees = {len(m) for m in t.coeffs}
        if len(degrees) != 1:
            raise ValueError("Cannot infer the degree of a zero or inhomogeneous series")
        (s,) = degrees

    _check_positive("s", s)

    if not t.is_homogeneous(s):
        raise ValueError(f"series is not homogeneous of degree {s}")

    residual = t.coeffs
    coords = {}
    while residual:
        word = min(residual)
        if not is_lyndon(word):
            raise NotALieElementError(
                f"not a Lie element: residual contains {''.join(f'X{i}' for i in word)}"
            )

        coeff = residual[word]
        coords[word] = coeff
        for monomial, c in _lyndon_expansion(word).items():
            value = residual.get(monomial, 0) - coeff * c
            if value:
                residual[monomial] = value
            else:
                residual.pop(monomial, None)

    return LieElement._from_dict(t.rank, s, coords)


def lie_bracket(a, b):
    """
    Lie bracket of two homogeneous elements

    Raises
    ------
    RankMismatchError
        If the alphabets differ.
    """

    if a.q != b.q:
        raise RankMismatchError(
            f"Cannot bracket elements over {a.q} and {b.q} letters"
        )

    s = a.s + b.s
    if a.is_zero() or b.is_zero():
        return LieElement.zero(a.q, s)

    x = _element_expansion(a)
    y = _element_expansion(b)
    coeffs = _linear_combination((1, _concat_product(x, y)), (-1, _concat_product(y, x)))

    return lie_to_lyndon(Series._from_dict(a.q, s, coeffs), s=s)


def tree_to_element(tree, q):
    """Lie element of an arbitrary bracket tree over ``q`` letters"""

    if not isinstance(tree, tuple):
        return LieElement.generator(q, tree)

    return lie_bracket(tree_to_element(tree[0], q), tree_to_element(tree[1], q))


def random_lie_element(q, s, rng, max_coeff=3):
    """
    random Lie element with coordinates in ``-max_coeff..max_coeff``

    Parameters
    ----------
    q, s : int
        Alphabet size and degree.
    rng : numpy.random.Generator
    max_coeff : int, default: 3
    """

    words = _lyndon_words(q, s)
    values = rng.integers(-max_coeff, max_coeff + 1, size=len(words))

    coords = {w: int(v) for w, v in zip(words, values) if v != 0}
    return LieElement._from_dict(q, s, coords)
