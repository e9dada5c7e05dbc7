"""Magnus embedding of the free group and the lower central series."""

import warnings

from johnsonfilt.core.lielyndon import lie_to_lyndon
from johnsonfilt.core.options import OPTIONS
from johnsonfilt.core.tensorseries import Series, degree_component
from johnsonfilt.core.utils import _check_positive


class FiltrationError(ValueError):
    pass


class FiltrationDegree:
    """
    lower central series degree of a word, possibly limited by the truncation

    Parameters
    ----------
    value : int
        The degree. If ``capped`` it is the truncation bound ``D`` instead.
    capped : bool, default: False
        True if every positive component up to ``D`` vanishes, i.e. the word lies in
        Γ^(D+1) and its exact degree was not determined.
    """

    __slots__ = ("value", "capped")

    def __init__(self, value, capped=False):
        object.__setattr__(self, "value", int(value))
        object.__setattr__(self, "capped", bool(capped))

    def __setattr__(self, name, value):
        raise AttributeError("FiltrationDegree is immutable")

    def at_least(self, s):
        """True if the word is known to lie in Γ^s"""
        if self.capped:
            return s <= self.value + 1
        return s <= self.value

    def __eq__(self, other):
        if isinstance(other, FiltrationDegree):
            return self.value == other.value and self.capped == other.capped
        if isinstance(other, int) and not self.capped:
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.capped))

    def __str__(self):
        if self.capped:
            return f"infinity-capped({self.value})"
        return str(self.value)

    def __repr__(self):
        return f"<johnsonfilt.FiltrationDegree {self}>"


def _warn_size(rank, D):

    limit = OPTIONS["magnus_warn_size"]
    if limit is not None and rank**D > limit:
        warnings.warn(
            f"Magnus expansion with n={rank} and D={D} may hold up to {rank**D} "
            "monomials per degree. Consider lowering the truncation.",
            RuntimeWarning,
            stacklevel=3,
        )


def _mul_letter(coeffs, gen, sign, D):
    """multiply a coefficient map from the right by the image of x_gen^sign"""

    out = dict(coeffs)
    for monomial, c in coeffs.items():
        room = D - len(monomial)
        if room <= 0:
            continue
        if sign == 1:
            key = monomial + (gen,)
            out[key] = out.get(key, 0) + c
        else:
            # (1 + X)^-1 = 1 - X + X^2 - ...
            for k in range(1, room + 1):
                key = monomial + (gen,) * k
                out[key] = out.get(key, 0) + (c if k % 2 == 0 else -c)

    return {m: c for m, c in out.items() if c != 0}


def magnus_expand(w, D):
    """
    image of a word under x_i -> 1 + X_i, truncated above degree ``D``

    Parameters
    ----------
    w : Word
        Word in the free group of rank ``n``.
    D : int
        Truncation bound, at least 1.

    Returns
    -------
    series : Series
        Series of rank ``n`` and truncation ``D``. The identity maps to 1.

    Warns
    -----
    RuntimeWarning
        If ``n ** D`` exceeds the ``magnus_warn_size`` option.
    """

    _check_positive("D", D)
    _warn_size(w.rank, D)

    coeffs = {(): 1}
    for gen, sign in w.letters:
        coeffs = _mul_letter(coeffs, gen, sign, D)

    return Series._from_dict(w.rank, D, coeffs)


def filtration_degree(w, D):
    """
    smallest positive degree of a nonzero Magnus component

    Parameters
    ----------
    w : Word
    D : int
        Truncation bound of the expansion.

    Returns
    -------
    degree : FiltrationDegree
        Capped at ``D`` if all components of degree 1..D vanish (always the case for
        the identity).
    """

    degree = magnus_expand(w, D).min_degree()

    if degree is None:
        return FiltrationDegree(D, capped=True)

    return FiltrationDegree(degree)


def in_lower_central(w, s):
    """True if ``w`` lies in the s-th term of the lower central series"""

    _check_positive("s", s)

    if s == 1:
        return True

    return filtration_degree(w, s - 1).at_least(s)


def leading_lie(w, s):
    """
    class of ``w`` in Γ^s / Γ^(s+1) in Lyndon coordinates

    Parameters
    ----------
    w : Word
        Word lying in Γ^s.
    s : int
        Degree to read off.

    Returns
    -------
    element : LieElement
        Degree ``s`` element over ``w.rank`` letters; zero if ``w`` lies in Γ^(s+1).

    Raises
    ------
    FiltrationError
        If ``w`` has a nonzero Magnus component below degree ``s``.
    """

    series = magnus_expand(w, s)

    low = series.min_degree()
    if low is not None and low < s:
        raise FiltrationError(
            f"word is not in Γ^{s}: nonzero Magnus component in degree {low}"
        )

    return lie_to_lyndon(degree_component(series, s), s=s)
