"""Closed form rank bookkeeping built on the Witt ranks."""

import math

import pandas as pd
import xarray as xr

from johnsonfilt.core.formatting import _display
from johnsonfilt.core.lielyndon import witt_rank
from johnsonfilt.core.utils import _check_positive


class RankTable:
    """
    ranks indexed by the cohomological degree

    Parameters
    ----------
    params : dict
        Parameters the table was computed for, e.g. ``{"n": 4, "k": 3, "s": 2}``.
    ranks : sequence of int
        ``ranks[i]`` is the rank in degree ``i``.
    """

    def __init__(self, params, ranks):

        ranks = tuple(int(r) for r in ranks)
        if any(r < 0 for r in ranks):
            raise ValueError("ranks must be nonnegative")

        self.params = dict(params)
        self.ranks = ranks

    def __len__(self):
        return len(self.ranks)

    def __getitem__(self, i):
        return self.ranks[i]

    def __iter__(self):
        return iter(self.ranks)

    def __eq__(self, other):
        if isinstance(other, RankTable):
            return self.params == other.params and self.ranks == other.ranks
        if isinstance(other, tuple):
            return self.ranks == other
        return NotImplemented

    def __hash__(self):
        return hash((tuple(self.params.items()), self.ranks))

    def total(self):
        return sum(self.ranks)

    def to_dataframe(self):
        return pd.DataFrame(
            {"degree": range(len(self.ranks)), "rank": pd.Series(self.ranks, dtype=object)}
        )

    def to_dataarray(self):
        return xr.DataArray(
            list(self.ranks),
            dims="degree",
            coords={"degree": range(len(self.ranks))},
            attrs=self.params,
            name="rank",
        )

    def to_dict(self):
        return {**self.params, "ranks": [str(r) for r in self.ranks]}

    def __repr__(self):
        return _display(self, self.to_dataframe(), metadata=dict(self.params))


class SeriesCoefficients:
    """
    coefficients of a power series in ``t``

    Parameters
    ----------
    n : int
        Rank the series belongs to.
    coeffs : sequence of int
        ``coeffs[j]`` is the coefficient of ``t**(start + j)``.
    start : int, default: 1
        Exponent of the first coefficient.
    """

    def __init__(self, n, coeffs, start=1):
        self.n = n
        self.coeffs = tuple(int(c) for c in coeffs)
        self.start = start

    @property
    def exponents(self):
        return range(self.start, self.start + len(self.coeffs))

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, j):
        return self.coeffs[j]

    def __eq__(self, other):
        if isinstance(other, SeriesCoefficients):
            return (self.n, self.coeffs, self.start) == (other.n, other.coeffs, other.start)
        if isinstance(other, tuple):
            return self.coeffs == other
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.coeffs, self.start))

    def to_text(self):
        """``9*t + 24*t^2 + ...``"""
        terms = []
        for exponent, c in zip(self.exponents, self.coeffs):
            if exponent == 0:
                terms.append(f"{c}")
            elif exponent == 1:
                terms.append(f"{c}*t")
            else:
                terms.append(f"{c}*t^{exponent}")
        return " + ".join(terms)

    def to_dataframe(self):
        return pd.DataFrame(
            {"s": list(self.exponents), "coefficient": pd.Series(self.coeffs, dtype=object)}
        )

    def to_dict(self):
        return {
            "n": self.n,
            "start": self.start,
            "coeffs": [str(c) for c in self.coeffs],
        }

    def __repr__(self):
        return _display(self, self.to_dataframe(), metadata={"n": self.n})


def gr_rank_psn(n, s):
    """
    rank of the degree ``s`` graded piece of the upper triangular McCool group

    ``sum(witt_rank(q - 1, s) for q = 2..n)``; ``n (n - 1) / 2`` for ``s = 1``.
    """

    _check_positive("n", n, minimum=2)
    _check_positive("s", s)

    return sum(witt_rank(q - 1, s) for q in range(2, n + 1))


def der_rank(n, s):
    """rank of the degree ``s`` derivations, ``n * witt_rank(n, s + 1)``"""

    _check_positive("n", n)
    _check_positive("s", s, minimum=0)

    return n * witt_rank(n, s + 1)


def _check_summand(n, k, s):

    _check_positive("n", n, minimum=2)
    _check_positive("s", s)
    _check_positive("k", k, minimum=2)

    if k > n:
        raise ValueError(f"'k' must be at most n={n}, got {k}")

    if k == 2 and s > 1:
        raise ValueError(
            "k=2 is only admissible for s=1: the degree s > 1 part of the free Lie "
            "algebra on one generator vanishes"
        )


def _summand_entries(n, k, s):
    factors = n - k + 1
    d = witt_rank(k - 1, s)
    return [math.comb(factors, i) * d**i for i in range(factors + 1)]


def summand_ranks(n, k, s):
    """
    per-degree ranks of the tensor product of ``n - k + 1`` copies of
    ``Z + L_s[V_(k-1)]^*``

    Parameters
    ----------
    n : int
    k : int
        ``3 <= k <= n``; ``k = 2`` is admissible for ``s = 1`` only.
    s : int

    Returns
    -------
    table : RankTable
        Degree ``i`` holds ``binomial(n - k + 1, i) * witt_rank(k - 1, s) ** i``.

    Examples
    --------
    >>> summand_ranks(4, 3, 2).ranks
    (1, 2, 1)
    """

    _check_summand(n, k, s)
    return RankTable({"n": n, "k": k, "s": s}, _summand_entries(n, k, s))


def summand_ranks_q(n, q, s):
    """``summand_ranks`` parameterized by ``q = k - 1`` (``n - q`` tensor factors)"""

    _check_positive("q", q)
    _check_summand(n, q + 1, s)

    return RankTable({"n": n, "q": q, "s": s}, _summand_entries(n, q + 1, s))


def _admissible_k(n, s):
    first = 2 if s == 1 else 3
    return range(first, n + 1)


def hi_lower_bound(n, s, i, detail=False):
    """
    lower bound for the rank of the degree ``i`` cohomology of the degree ``s``
    Johnson subgroup

    The bound is the larger of ``witt_rank(n - i, s) ** i`` and the largest degree
    ``i`` entry of ``summand_ranks(n, k, s)`` over the admissible ``k``.

    Parameters
    ----------
    n : int
        At least 3.
    s : int
    i : int
        ``1 <= i <= n - 2``.
    detail : bool, default: False
        If True return a dict with the bound, both candidates and the ``k``
        attaining the summand entry.
    """

    _check_positive("n", n, minimum=3)
    _check_positive("s", s)
    _check_positive("i", i)

    if i > n - 2:
        raise ValueError(f"'i' must be in 1..{n - 2}, got {i}")

    corollary = witt_rank(n - i, s) ** i

    best, best_k = 0, None
    for k in _admissible_k(n, s):
        if i > n - k + 1:
            continue
        entry = math.comb(n - k + 1, i) * witt_rank(k - 1, s) ** i
        if entry > best:
            best, best_k = entry, k

    value = max(corollary, best)

    if detail:
        return {"value": value, "corollary": corollary, "summand": best, "k": best_k}

    return value


def ep_coeffs(n, s_max, hat=False):
    """
    Euler-Poincaré coefficients of the derivation algebra

    Parameters
    ----------
    n : int
    s_max : int
    hat : bool, default: False
        If False, ``c_s = n * witt_rank(n, s + 1)`` for ``s = 1..s_max``. If True,
        the variant including ``Hom(V_n, V_n)`` in degree 0: the same formula for
        ``s = 0..s_max``.

    Returns
    -------
    coeffs : SeriesCoefficients

    Examples
    --------
    >>> ep_coeffs(3, 3).coeffs
    (9, 24, 54)
    """

    _check_positive("n", n)
    _check_positive("s_max", s_max)

    start = 0 if hat else 1
    coeffs = [der_rank(n, s) for s in range(start, s_max + 1)]
    return SeriesCoefficients(n, coeffs, start=start)


def pbw_coefficients(q, s_max):
    """
    coefficients of ``prod_s (1 - t**s) ** -witt_rank(q, s)`` up to ``t**s_max``

    They equal ``q**s``, the graded ranks of the tensor algebra.
    """

    _check_positive("q", q)
    _check_positive("s_max", s_max)

    coeffs = [1] + [0] * s_max
    for m in range(1, s_max + 1):
        d = witt_rank(q, m)
        if d == 0:
            continue

        # (1 - t^m)^-d = sum_j binomial(d + j - 1, j) t^(m j)
        factor = [0] * (s_max + 1)
        for j in range(s_max // m + 1):
            factor[m * j] = math.comb(d + j - 1, j)

        coeffs = [
            sum(coeffs[a] * factor[e - a] for a in range(e + 1)) for e in range(s_max + 1)
        ]

    return SeriesCoefficients(q, coeffs, start=0)


def witt_table(qs, ss):
    """pandas table of ``witt_rank(q, s)``, one row per ``q``, one column per ``s``"""

    qs, ss = list(qs), list(ss)
    data = {s: pd.Series([witt_rank(q, s) for q in qs], dtype=object) for s in ss}

    df = pd.DataFrame(data)
    df.index = pd.Index(qs, name="q")
    df.columns = pd.Index(ss, name="s")
    return df


class GrowthReport:
    """
    lower bounds over a range of degrees ``s`` and where they start increasing

    Attributes
    ----------
    increasing_from : int
        Smallest ``s0`` such that the bounds are strictly increasing for
        ``s >= s0`` within the range.
    monotone : bool
        True if the bounds increase over the whole range.
    """

    def __init__(self, n, i, s_values, bounds):

        self.n = n
        self.i = i
        self.s_values = list(s_values)
        self.bounds = list(bounds)

        start = len(self.bounds) - 1
        while start > 0 and self.bounds[start - 1] < self.bounds[start]:
            start -= 1

        self.increasing_from = self.s_values[start] if self.s_values else None
        self.monotone = start == 0

    @property
    def ok(self):
        # strictly increasing over at least two steps at the end of the range
        if self.increasing_from is None:
            return False
        return self.s_values.index(self.increasing_from) < len(self.s_values) - 2

    def summary(self):
        if not self.s_values:
            return "empty range"
        status = "OK" if self.ok else "FAILED"
        flag = "" if self.monotone else " (not monotone at the start)"
        return f"{status}: strictly increasing from s={self.increasing_from}{flag}"

    def to_dataframe(self):
        return pd.DataFrame(
            {"s": self.s_values, "bound": pd.Series(self.bounds, dtype=object)}
        )

    def to_dict(self):
        return {
            "n": self.n,
            "i": self.i,
            "s": self.s_values,
            "bounds": [str(b) for b in self.bounds],
            "increasing_from": self.increasing_from,
            "monotone": self.monotone,
            "ok": self.ok,
        }

    def __repr__(self):
        metadata = {"n": self.n, "i": self.i, "result": self.summary()}
        return _display(self, self.to_dataframe(), metadata=metadata)


def growth_check(n, i, s_range):
    """
    evaluate ``hi_lower_bound(n, s, i)`` over ``s_range``

    Parameters
    ----------
    n, i : int
        ``1 <= i <= n - 2``.
    s_range : iterable of int

    Returns
    -------
    report : GrowthReport
    """

    s_values = list(s_range)
    bounds = [hi_lower_bound(n, s, i) for s in s_values]
    return GrowthReport(n, i, s_values, bounds)
