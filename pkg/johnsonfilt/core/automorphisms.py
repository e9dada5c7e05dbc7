"""Endomorphisms of free groups, Magnus generators and the McCool group."""

import functools
import itertools
import logging

import pandas as pd

from johnsonfilt.core.formatting import _display
from johnsonfilt.core.freegroup import (
    RankMismatchError,
    Word,
    _reduce,
    abelianize,
    commutator,
    invert,
    kill_generator,
    reverse,
)
from johnsonfilt.core.reports import VerificationReport
from johnsonfilt.core.utils import _check_index, _check_positive

logger = logging.getLogger(__name__)


class NotIAError(ValueError):
    pass


class NotUpperTriangularError(ValueError):
    pass


class Endomorphism:
    """
    endomorphism of the free group given by the images of the generators

    Parameters
    ----------
    rank : int
        Rank ``n`` of the free group.
    images : sequence of Word
        ``images[i - 1]`` is the image of ``x_i``.

    Examples
    --------
    >>> from johnsonfilt import Word, alpha
    >>> f = alpha(3, 2, 1)
    >>> print(f(Word.generator(3, 2)))
    x1 x2 x1^-1
    """

    __slots__ = ("rank", "images")

    def __init__(self, rank, images):

        _check_positive("rank", rank)

        images = tuple(images)
        if len(images) != rank:
            raise ValueError(f"Expected {rank} generator images, found {len(images)}")

        for image in images:
            if not isinstance(image, Word):
                raise TypeError(f"images must be Words, found {type(image).__name__}")
            if image.rank != rank:
                raise RankMismatchError(
                    f"image {image} has rank {image.rank}, expected {rank}"
                )

        self.rank = int(rank)
        self.images = images

    @classmethod
    def _from_images(cls, rank, images):
        self = object.__new__(cls)
        self.rank = rank
        self.images = tuple(images)
        return self

    @classmethod
    def identity(cls, rank):
        _check_positive("rank", rank)
        return cls._from_images(rank, [Word.generator(rank, i) for i in range(1, rank + 1)])

    def __call__(self, w):
        return apply(self, w)

    def __mul__(self, other):
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return self.rank == other.rank and self.images == other.images

    def __hash__(self):
        return hash((self.rank, self.images))

    def is_identity(self):
        return self == Endomorphism.identity(self.rank)

    def to_dataframe(self):
        generators = [f"x{i}" for i in range(1, self.rank + 1)]
        return pd.DataFrame(
            {"generator": generators, "image": [str(img) for img in self.images]}
        )

    def __str__(self):
        return ", ".join(
            f"x{i} -> {img}" for i, img in enumerate(self.images, start=1)
        )

    def __repr__(self):
        return _display(self, self.to_dataframe(), metadata={"rank": self.rank})


def identity_endomorphism(n):
    return Endomorphism.identity(n)


def apply(f, w):
    """
    image of a word under an endomorphism

    Parameters
    ----------
    f : Endomorphism
    w : Word

    Returns
    -------
    image : Word
        The generator images substituted into ``w``, freely reduced.

    Raises
    ------
    RankMismatchError
        If the ranks of ``f`` and ``w`` differ.
    """

    if f.rank != w.rank:
        raise RankMismatchError(
            f"Cannot apply an endomorphism of rank {f.rank} to a word of rank {w.rank}"
        )

    letters = []
    for gen, sign in w.letters:
        image = f.images[gen - 1]
        letters.extend(image.letters if sign == 1 else invert(image).letters)

    return Word._from_reduced(f.rank, _reduce(letters))


def compose(f, g):
    """composition ``f o g``: ``g`` is applied first"""

    if f.rank != g.rank:
        raise RankMismatchError(
            f"Cannot compose endomorphisms of rank {f.rank} and {g.rank}"
        )

    return Endomorphism._from_images(f.rank, [apply(f, image) for image in g.images])


def is_ia(f):
    """True if ``f`` induces the identity on the abelianization"""

    for i, image in enumerate(f.images):
        vector = abelianize(image)
        if vector[i] != 1 or abs(vector).sum() != 1:
            return False

    return True


class AutLetter:
    """
    formal generator of the automorphism group, possibly inverted

    Parameters
    ----------
    kind : {"alpha", "A", "rho"}
        ``alpha`` with indices ``(i, j)`` sends ``x_i`` to ``x_j x_i x_j^-1``;
        ``A`` with indices ``(i, j, k)`` sends ``x_i`` to ``[x_j, x_k] x_i``;
        ``rho`` with indices ``p_3..p_n, q_3..q_n`` sends ``x_j`` to
        ``w^p_j x_j w^q_j`` with ``w = [x_1, x_2]``.
    indices : tuple of int
    inverse : bool, default: False
        Whether the letter stands for the inverse automorphism.
    """

    __slots__ = ("kind", "indices", "inverse")

    def __init__(self, kind, indices, inverse=False):

        indices = tuple(int(i) for i in indices)

        if kind == "alpha":
            if len(indices) != 2:
                raise ValueError("alpha needs two indices (i, j)")
            for name, value in zip("ij", indices):
                _check_positive(name, value)
            i, j = indices
            if i == j:
                raise ValueError(f"'i' and 'j' must differ, got i=j={i}")
        elif kind == "A":
            if len(indices) != 3:
                raise ValueError("A needs three indices (i, j, k)")
            for name, value in zip("ijk", indices):
                _check_positive(name, value)
            i, j, k = indices
            if i in (j, k):
                raise ValueError(f"'i' must not be one of 'j', 'k', got i={i}")
            if not j < k:
                raise ValueError(f"'j' must be smaller than 'k', got j={j}, k={k}")
        elif kind == "rho":
            if len(indices) % 2:
                raise ValueError("rho needs as many exponents p as exponents q")
        else:
            raise ValueError(f"'kind' must be one of 'alpha', 'A', 'rho', got {kind!r}")

        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "inverse", bool(inverse))

    def __setattr__(self, name, value):
        raise AttributeError("AutLetter is immutable")

    @classmethod
    def alpha(cls, i, j, inverse=False):
        return cls("alpha", (i, j), inverse)

    @classmethod
    def bigA(cls, i, j, k, inverse=False):
        return cls("A", (i, j, k), inverse)

    @classmethod
    def rho(cls, p, q, inverse=False):
        p, q = tuple(p), tuple(q)
        if len(p) != len(q):
            raise ValueError("'p' and 'q' must have the same length")
        return cls("rho", p + q, inverse)

    @property
    def min_rank(self):
        if self.kind == "rho":
            return len(self.indices) // 2 + 2
        return max(self.indices)

    def invert(self):
        return AutLetter(self.kind, self.indices, not self.inverse)

    def is_upper_alpha(self):
        """True for ``alpha(i, j)`` letters with ``i > j``"""
        return self.kind == "alpha" and self.indices[0] > self.indices[1]

    def compile(self, n):
        """the endomorphism of F_n this letter stands for"""
        return _compile_letter(self, n)

    def __eq__(self, other):
        if not isinstance(other, AutLetter):
            return NotImplemented
        return (self.kind, self.indices, self.inverse) == (
            other.kind,
            other.indices,
            other.inverse,
        )

    def __hash__(self):
        return hash((self.kind, self.indices, self.inverse))

    def __str__(self):
        if self.kind == "alpha":
            body = "a({},{})".format(*self.indices)
        elif self.kind == "A":
            body = "A({},{},{})".format(*self.indices)
        else:
            half = len(self.indices) // 2
            p = ",".join(map(str, self.indices[:half]))
            q = ",".join(map(str, self.indices[half:]))
            body = f"rho({p};{q})"

        return f"{body}^-1" if self.inverse else body

    def __repr__(self):
        return f"<johnsonfilt.AutLetter {self}>"


def _check_letter_rank(letter, n):

    if letter.kind == "rho":
        if n != letter.min_rank:
            raise RankMismatchError(
                f"{letter} has {len(letter.indices) // 2} exponents p_j, "
                f"expected {n - 2} for rank {n}"
            )
    elif letter.min_rank > n:
        raise ValueError(f"indices of {letter} must be in 1..{n}")


@functools.lru_cache(maxsize=None)
def _compile_letter(letter, n):

    _check_letter_rank(letter, n)

    images = [Word.generator(n, i) for i in range(1, n + 1)]

    if letter.kind == "alpha":
        i, j = letter.indices
        xi, xj = images[i - 1], images[j - 1]
        if letter.inverse:
            images[i - 1] = invert(xj) * xi * xj
        else:
            images[i - 1] = xj * xi * invert(xj)

    elif letter.kind == "A":
        i, j, k = letter.indices
        c = commutator(images[j - 1], images[k - 1])
        images[i - 1] = (invert(c) if letter.inverse else c) * images[i - 1]

    else:
        half = len(letter.indices) // 2
        sign = -1 if letter.inverse else 1
        w = commutator(images[0], images[1])
        for j, (p, q) in enumerate(
            zip(letter.indices[:half], letter.indices[half:]), start=3
        ):
            images[j - 1] = w ** (sign * p) * images[j - 1] * w ** (sign * q)

    return Endomorphism._from_images(n, images)


def alpha(n, i, j):
    """
    the Magnus generator ``alpha_ij``: ``x_i -> x_j x_i x_j^-1``

    Parameters
    ----------
    n : int
        Rank of the free group.
    i, j : int
        Distinct indices in ``1..n``.
    """

    _check_index("i", i, n)
    _check_index("j", j, n)
    return AutLetter.alpha(i, j).compile(n)


def bigA(n, i, j, k):
    """
    the Magnus generator ``A_ijk``: ``x_i -> [x_j, x_k] x_i``

    Parameters
    ----------
    n : int
        Rank of the free group.
    i, j, k : int
        Indices in ``1..n`` with ``i`` not in ``{j, k}`` and ``j < k``.
    """

    for name, value in zip("ijk", (i, j, k)):
        _check_index(name, value, n)
    return AutLetter.bigA(i, j, k).compile(n)


def rho(n, p, q):
    """
    the automorphism ``x_j -> w^p_j x_j w^q_j`` (``j >= 3``) with ``w = [x_1, x_2]``

    Parameters
    ----------
    n : int
        Rank, at least 3.
    p, q : sequence of int
        Exponents for ``j = 3..n``.
    """

    _check_positive("n", n, minimum=3)

    p, q = tuple(p), tuple(q)
    if len(p) != n - 2 or len(q) != n - 2:
        raise ValueError(f"'p' and 'q' need {n - 2} entries (j = 3..{n})")

    return AutLetter.rho(p, q).compile(n)


def _reduce_letters(letters):

    stack = []
    for letter in letters:
        if stack and stack[-1] == letter.invert():
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


class AutWord:
    """
    formal product of automorphism letters

    ``u * v`` applies ``v`` first and ``u`` second, i.e. it compiles to
    ``compose(compile(u), compile(v))``. Adjacent inverse letters cancel.

    Parameters
    ----------
    rank : int
        Rank of the free group acted on.
    letters : sequence of AutLetter
    """

    __slots__ = ("rank", "letters")

    def __init__(self, rank, letters=()):

        _check_positive("rank", rank)

        letters = tuple(letters)
        for letter in letters:
            if not isinstance(letter, AutLetter):
                raise TypeError(f"letters must be AutLetters, found {letter!r}")
            _check_letter_rank(letter, rank)

        self.rank = int(rank)
        self.letters = _reduce_letters(letters)

    @classmethod
    def identity(cls, rank):
        return cls(rank)

    @classmethod
    def from_letter(cls, rank, letter):
        return cls(rank, [letter])

    def is_identity(self):
        return not self.letters

    def _check_rank(self, other):
        if self.rank != other.rank:
            raise RankMismatchError(
                f"Cannot combine AutWords of rank {self.rank} and {other.rank}"
            )

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        if not isinstance(other, AutWord):
            return NotImplemented
        return self.rank == other.rank and self.letters == other.letters

    def __hash__(self):
        return hash((self.rank, self.letters))

    def __mul__(self, other):
        if not isinstance(other, AutWord):
            return NotImplemented
        self._check_rank(other)
        return AutWord(self.rank, self.letters + other.letters)

    def __invert__(self):
        letters = [letter.invert() for letter in reversed(self.letters)]
        return AutWord(self.rank, letters)

    def __pow__(self, k):
        if k < 0:
            return (~self) ** -k
        return AutWord(self.rank, self.letters * k)

    def compile(self):
        return autword_compile(self)

    def __str__(self):
        if not self.letters:
            return "1"
        return " * ".join(str(letter) for letter in self.letters)

    def __repr__(self):
        return f"<johnsonfilt.AutWord rank={self.rank}: {self}>"


def autword_commutator(u, v):
    """commutator ``[u, v] = u^-1 v^-1 u v`` of AutWords"""

    u._check_rank(v)
    return ~u * ~v * u * v


def autword_compile(aw):
    """
    endomorphism of an AutWord

    The product compiles to the composition of its letters, the rightmost letter
    acting first, so that ``autword_compile(u * v)`` equals
    ``compose(autword_compile(u), autword_compile(v))``.
    """

    images = [Word.generator(aw.rank, i) for i in range(1, aw.rank + 1)]
    for letter in reversed(aw.letters):
        f = _compile_letter(letter, aw.rank)
        images = [apply(f, image) for image in images]

    return Endomorphism._from_images(aw.rank, images)


def _check_upper(aw):

    for letter in aw.letters:
        if not letter.is_upper_alpha():
            raise NotUpperTriangularError(
                f"expected letters alpha(i, j) with i > j, found {letter}"
            )


def project_pi(aw):
    """
    image of an upper triangular AutWord under the projection to rank ``n - 1``

    Letters ``alpha(n, i)`` are deleted, all others kept.

    Raises
    ------
    NotUpperTriangularError
        If ``aw`` has a letter which is not ``alpha(i, j)`` with ``i > j``.
    """

    _check_positive("rank", aw.rank, minimum=2)
    _check_upper(aw)

    n = aw.rank
    letters = [letter for letter in aw.letters if letter.indices[0] != n]
    return AutWord(n - 1, letters)


def section_sigma(aw):
    """the same upper triangular letters seen in rank ``n + 1``"""

    _check_upper(aw)
    return AutWord(aw.rank + 1, aw.letters)


class SubgroupSpec:
    """
    the subgroups G(n, k, j) and H(n, k) of the upper triangular McCool group

    G(n, k, j) is generated by ``alpha(k, 1), ..., alpha(k, j)``; H(n, k) is the
    product of G(n, m, k - 1) for ``m = k..n``.
    """

    __slots__ = ("kind", "n", "k", "j")

    def __init__(self, kind, n, k, j=None):

        if kind == "G":
            for name, value in (("n", n), ("k", k), ("j", j)):
                _check_positive(name, value)
            if not j <= k - 1 <= n - 1:
                raise ValueError(f"G(n, k, j) needs 1 <= j <= k - 1 <= n - 1, got {n, k, j}")
        elif kind == "H":
            _check_positive("n", n)
            _check_positive("k", k)
            if not 2 <= k <= n:
                raise ValueError(f"H(n, k) needs 2 <= k <= n, got {n, k}")
        else:
            raise ValueError(f"'kind' must be 'G' or 'H', got {kind!r}")

        self.kind = kind
        self.n = n
        self.k = k
        self.j = j

    @classmethod
    def G(cls, n, k, j):
        return cls("G", n, k, j)

    @classmethod
    def H(cls, n, k):
        return cls("H", n, k)

    def factors(self):
        """the factors G(n, m, k - 1) of H(n, k), or ``[self]`` for G"""

        if self.kind == "G":
            return [self]

        return [SubgroupSpec.G(self.n, m, self.k - 1) for m in range(self.k, self.n + 1)]

    def __str__(self):
        if self.kind == "G":
            return f"G({self.n},{self.k},{self.j})"
        return f"H({self.n},{self.k})"

    def __repr__(self):
        return f"<johnsonfilt.SubgroupSpec {self}>"


def subgroup_generators(spec):
    """
    generators of G(n, k, j) or H(n, k)

    Returns
    -------
    letters : list of AutLetter
        ``alpha(k, 1), ..., alpha(k, j)`` for G; the concatenation over the
        ``n - k + 1`` factors for H.
    """

    if spec.kind == "G":
        return [AutLetter.alpha(spec.k, i) for i in range(1, spec.j + 1)]

    return [letter for factor in spec.factors() for letter in subgroup_generators(factor)]


def _word(n, *letters):
    return AutWord(n, letters)


def _mccool_relations(n):
    """(family, case, lhs, rhs) for every admissible index tuple"""

    a = AutLetter.alpha
    one = AutWord.identity(n)

    for i, j, k in itertools.permutations(range(1, n + 1), 3):
        lhs = _word(n, a(i, j), a(k, j), a(i, k))
        rhs = _word(n, a(i, k), a(i, j), a(k, j))
        yield "(1) braid", (i, j, k), lhs, rhs

    for k, j, s, t in itertools.product(range(1, n + 1), repeat=4):
        if k == j or s == t or {j, k} & {s, t}:
            continue
        lhs = autword_commutator(_word(n, a(k, j)), _word(n, a(s, t)))
        yield "(2) disjoint", (k, j, s, t), lhs, one

    for i, j, k in itertools.permutations(range(1, n + 1), 3):
        lhs = autword_commutator(_word(n, a(i, j)), _word(n, a(k, j)))
        yield "(3) same target", (i, j, k), lhs, one

    for i, j, k in itertools.permutations(range(1, n + 1), 3):
        lhs = autword_commutator(_word(n, a(i, j), a(k, j)), _word(n, a(i, k)))
        yield "(4) product", (i, j, k), lhs, one


def verify_mccool(n):
    """
    check the four McCool relation families on compiled endomorphisms

    Every admissible index tuple is checked: the braid type relation
    ``a_ij a_kj a_ik = a_ik a_ij a_kj``; commuting of ``a_kj`` and ``a_st`` for
    disjoint ``{j, k}``, ``{s, t}``; commuting of ``a_ij`` and ``a_kj``; and
    commuting of ``a_ij a_kj`` with ``a_ik``.

    Parameters
    ----------
    n : int
        Rank, at least 3.

    Returns
    -------
    report : VerificationReport
    """

    _check_positive("n", n, minimum=3)

    failures = []
    cases = 0
    for family, case, lhs, rhs in _mccool_relations(n):
        cases += 1
        if autword_compile(lhs) != autword_compile(rhs):
            failures.append((family, str(case), "sides differ"))

    logger.debug("checked %d McCool relation instances for n=%d", cases, n)

    return VerificationReport(
        "mccool", 4, "relation families", cases=cases, failures=failures
    )


def verify_commuting(n, k):
    """
    check that generators of distinct factors of H(n, k) commute

    Pairs within the same factor are not checked, the factors are free.
    """

    spec = SubgroupSpec.H(n, k)
    factors = [subgroup_generators(factor) for factor in spec.factors()]

    failures = []
    pairs = 0
    for first, second in itertools.combinations(factors, 2):
        for x, y in itertools.product(first, second):
            pairs += 1
            if autword_compile(_word(n, x, y)) != autword_compile(_word(n, y, x)):
                failures.append(("commute", f"{x}, {y}", "compiled maps differ"))

    logger.debug("checked %d generator pairs of %s", pairs, spec)

    return VerificationReport("commuting", pairs, "commuting pairs", failures=failures)


def verify_conjugation_action(n, q, rs, signs=None):
    """
    check the action of ``W = alpha(q, r_1)^e_1 * ... * alpha(q, r_m)^e_m``

    ``W`` fixes every ``x_t`` with ``t != q`` and sends ``x_q`` to ``P x_q P^-1``
    where ``P = x_(r_m)^e_m ... x_(r_1)^e_1`` (the rightmost letter acts first).

    Parameters
    ----------
    n, q : int
    rs : sequence of int
        Indices different from ``q``.
    signs : sequence of {1, -1}, optional
        Exponents, all 1 by default.
    """

    _check_index("q", q, n)
    rs = tuple(rs)
    signs = tuple(signs) if signs is not None else (1,) * len(rs)
    if len(signs) != len(rs):
        raise ValueError("'signs' must have the same length as 'rs'")

    letters = [AutLetter.alpha(q, r, inverse=(e == -1)) for r, e in zip(rs, signs)]
    f = autword_compile(AutWord(n, letters))

    product = Word(n, zip(rs, signs))
    conjugator = reverse(product)

    failures = []
    for t in range(1, n + 1):
        x = Word.generator(n, t)
        expected = conjugator * x * invert(conjugator) if t == q else x
        if f(x) != expected:
            failures.append(("action", f"x{t}", f"{f(x)} != {expected}"))

    return VerificationReport("conjugation", n, "generators", failures=failures)


def verify_projection(n, aw):
    """
    check that killing ``x_n`` after applying ``aw`` equals applying its projection

    Compares both on the generators ``x_1..x_(n-1)``.
    """

    if aw.rank != n:
        raise RankMismatchError(f"AutWord has rank {aw.rank}, expected {n}")

    big = autword_compile(aw)
    small = autword_compile(project_pi(aw))

    failures = []
    for i in range(1, n):
        lhs = kill_generator(big(Word.generator(n, i)), n)
        rhs = small(Word.generator(n - 1, i))
        if lhs != rhs:
            failures.append(("projection", f"x{i}", f"{lhs} != {rhs}"))

    return VerificationReport("projection", n - 1, "generators", failures=failures)


def random_autword(n, length, rng, upper=True):
    """
    random AutWord in ``alpha`` letters

    Parameters
    ----------
    n : int
        Rank, at least 2.
    length : int
        Number of letters drawn (cancellation may shorten the word).
    rng : numpy.random.Generator
    upper : bool, default: True
        Draw only ``alpha(i, j)`` with ``i > j``.
    """

    _check_positive("n", n, minimum=2)

    if upper:
        pairs = [(i, j) for i in range(1, n + 1) for j in range(1, i)]
    else:
        pairs = list(itertools.permutations(range(1, n + 1), 2))

    letters = []
    for _ in range(length):
        i, j = pairs[rng.integers(len(pairs))]
        letters.append(AutLetter.alpha(i, j, inverse=bool(rng.integers(2))))

    return AutWord(n, letters)
