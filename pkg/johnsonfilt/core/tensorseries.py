"""Truncated noncommutative polynomials Z<X_1, ..., X_n> / (degree > D)."""

from johnsonfilt.core.freegroup import RankMismatchError
from johnsonfilt.core.utils import _check_index, _check_positive


def _concat_product(a, b, max_degree=None):
    """product of two sparse coefficient maps, dropping degrees above ``max_degree``"""

    if not a or not b:
        return {}

    out = {}
    if max_degree is None:
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                key = m1 + m2
                out[key] = out.get(key, 0) + c1 * c2
    else:
        by_degree = {}
        for m2, c2 in b.items():
            by_degree.setdefault(len(m2), []).append((m2, c2))

        for m1, c1 in a.items():
            room = max_degree - len(m1)
            for degree, terms in by_degree.items():
                if degree > room:
                    continue
                for m2, c2 in terms:
                    key = m1 + m2
                    out[key] = out.get(key, 0) + c1 * c2

    return _prune(out)


def _linear_combination(*pairs):
    """sum of ``scale * coeffs`` over (scale, coeffs) pairs"""

    out = {}
    for scale, coeffs in pairs:
        for m, c in coeffs.items():
            out[m] = out.get(m, 0) + scale * c
    return _prune(out)


def _prune(coeffs):
    return {m: c for m, c in coeffs.items() if c != 0}


def _check_compatible(a, b):

    if a.rank != b.rank or a.trunc != b.trunc:
        raise RankMismatchError(
            "Series must have the same rank and truncation, found "
            f"(rank={a.rank}, D={a.trunc}) and (rank={b.rank}, D={b.trunc})"
        )


def _format_monomial(monomial):
    return "".join(f"X{i}" for i in monomial)


class Series:
    """
    truncated noncommutative polynomial with exact integer coefficients

    Parameters
    ----------
    rank : int
        Number of variables ``X_1, ..., X_n``.
    trunc : int
        Truncation bound ``D``; monomials of degree larger than ``D`` are discarded.
    coeffs : dict, optional
        Mapping from monomials (tuples of variable indices, ``()`` is the unit) to
        integer coefficients. Zero coefficients are dropped.

    Examples
    --------
    >>> from johnsonfilt import Series
    >>> x1, x2 = Series.generator(2, 2, 1), Series.generator(2, 2, 2)
    >>> print(x1 * x2 - x2 * x1)
    X1X2 - X2X1
    """

    __slots__ = ("rank", "trunc", "_coeffs")

    def __init__(self, rank, trunc, coeffs=None):

        _check_positive("rank", rank)
        _check_positive("trunc", trunc, minimum=0)

        clean = {}
        for monomial, coeff in (coeffs or {}).items():
            monomial = tuple(int(i) for i in monomial)
            for i in monomial:
                _check_index("variable", i, rank)
            if len(monomial) > trunc or coeff == 0:
                continue
            clean[monomial] = clean.get(monomial, 0) + int(coeff)

        self.rank = int(rank)
        self.trunc = int(trunc)
        self._coeffs = _prune(clean)

    @classmethod
    def _from_dict(cls, rank, trunc, coeffs):
        # trusted constructor: coefficients already pruned and truncated
        self = object.__new__(cls)
        self.rank = rank
        self.trunc = trunc
        self._coeffs = coeffs
        return self

    @classmethod
    def zero(cls, rank, trunc):
        return cls._from_dict(rank, trunc, {})

    @classmethod
    def one(cls, rank, trunc):
        return cls._from_dict(rank, trunc, {(): 1})

    @classmethod
    def generator(cls, rank, trunc, i):
        """the variable ``X_i``"""
        return cls(rank, trunc, {(i,): 1})

    @classmethod
    def monomial(cls, rank, trunc, monomial, coeff=1):
        return cls(rank, trunc, {tuple(monomial): coeff})

    @property
    def coeffs(self):
        """copy of the sparse coefficient map"""
        return dict(self._coeffs)

    def __getitem__(self, monomial):
        return self._coeffs.get(tuple(monomial), 0)

    def __iter__(self):
        yield from sorted(self._coeffs.items(), key=lambda item: (len(item[0]), item[0]))

    def __len__(self):
        return len(self._coeffs)

    def is_zero(self):
        return not self._coeffs

    def is_homogeneous(self, degree):
        return all(len(m) == degree for m in self._coeffs)

    def min_degree(self, start=1):
        """smallest degree >= ``start`` carrying a nonzero coefficient, or None"""

        degrees = [len(m) for m in self._coeffs if len(m) >= start]
        return min(degrees) if degrees else None

    def truncate(self, trunc):
        """the same series seen with another truncation bound"""

        _check_positive("trunc", trunc, minimum=0)
        coeffs = {m: c for m, c in self._coeffs.items() if len(m) <= trunc}
        return Series._from_dict(self.rank, trunc, coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.trunc == other.trunc
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self.rank, self.trunc, frozenset(self._coeffs.items())))

    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_sub(self, other)

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return series_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def scale(self, factor):
        if factor == 0:
            return Series.zero(self.rank, self.trunc)
        coeffs = {m: factor * c for m, c in self._coeffs.items()}
        return Series._from_dict(self.rank, self.trunc, coeffs)

    def __str__(self):
        return format_series(self)

    def __repr__(self):
        from johnsonfilt.core.formatting import maybe_truncate

        body = maybe_truncate(format_series(self), 500)
        return f"<johnsonfilt.Series rank={self.rank} D={self.trunc}: {body}>"


def series_add(a, b):
    """coefficient-wise sum

    Raises
    ------
    RankMismatchError
        If rank or truncation of ``a`` and ``b`` differ.
    """

    _check_compatible(a, b)
    return Series._from_dict(
        a.rank, a.trunc, _linear_combination((1, a._coeffs), (1, b._coeffs))
    )


def series_sub(a, b):

    _check_compatible(a, b)
    return Series._from_dict(
        a.rank, a.trunc, _linear_combination((1, a._coeffs), (-1, b._coeffs))
    )


def series_mul(a, b):
    """truncated convolution product

    Raises
    ------
    RankMismatchError
        If rank or truncation of ``a`` and ``b`` differ.
    """

    _check_compatible(a, b)
    return Series._from_dict(
        a.rank, a.trunc, _concat_product(a._coeffs, b._coeffs, max_degree=a.trunc)
    )


def degree_component(a, d):
    """restriction of ``a`` to the monomials of degree exactly ``d``"""

    if not 0 <= d <= a.trunc:
        raise ValueError(f"'d' must be in 0..{a.trunc}, got {d}")

    coeffs = {m: c for m, c in a._coeffs.items() if len(m) == d}
    return Series._from_dict(a.rank, a.trunc, coeffs)


def format_series(a):
    """debug text form, e.g. ``3*X1X2 - X2X1 + 1``

    Terms are ordered by decreasing degree and lexicographically within a degree.
    """

    if a.is_zero():
        return "0"

    terms = sorted(a._coeffs.items(), key=lambda item: (-len(item[0]), item[0]))

    parts = []
    for monomial, coeff in terms:
        body = _format_monomial(monomial)
        magnitude = abs(coeff)

        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}*{body}"

        if not parts:
            parts.append(text if coeff > 0 else f"-{text}")
        else:
            parts.append(f"+ {text}" if coeff > 0 else f"- {text}")

    return " ".join(parts)
