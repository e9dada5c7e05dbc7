"""Reduced words in the free group F_n."""

import numpy as np

from johnsonfilt.core.utils import _check_index, _check_positive


class RankMismatchError(ValueError):
    pass


def _reduce(letters):
    """freely reduce a sequence of (generator, sign) pairs"""

    stack = []
    for gen, sign in letters:
        if stack and stack[-1][0] == gen and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((gen, sign))
    return tuple(stack)


def _check_same_rank(a, b):

    if a.rank != b.rank:
        raise RankMismatchError(
            f"Cannot combine words of rank {a.rank} and rank {b.rank}"
        )


class Word:
    """
    reduced word in the free group on the generators x_1, ..., x_n

    Parameters
    ----------
    rank : int
        Number of generators ``n``.
    letters : iterable of (int, int)
        Pairs ``(i, sign)`` with ``1 <= i <= n`` and ``sign`` in ``{1, -1}``. The
        sequence is freely reduced on construction, so two words are equal as group
        elements iff their letters are identical.

    Examples
    --------
    >>> from johnsonfilt import Word
    >>> Word(3, [(1, 1), (2, 1), (2, -1), (3, 1)])
    <johnsonfilt.Word rank=3: x1 x3>
    """

    __slots__ = ("rank", "letters")

    def __init__(self, rank, letters=()):

        _check_positive("rank", rank)

        letters = tuple((int(gen), int(sign)) for gen, sign in letters)
        for gen, sign in letters:
            _check_index("generator", gen, rank)
            if sign not in (1, -1):
                raise ValueError(f"sign must be 1 or -1, got {sign}")

        object.__setattr__(self, "rank", int(rank))
        object.__setattr__(self, "letters", _reduce(letters))

    @classmethod
    def _from_reduced(cls, rank, letters):
        # skips validation, ``letters`` must already be reduced
        self = object.__new__(cls)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "letters", letters)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def identity(cls, rank):
        """the empty word of the given rank"""
        return cls(rank)

    @classmethod
    def generator(cls, rank, i, sign=1):
        """the word ``x_i`` (or ``x_i^-1`` if ``sign=-1``)"""
        return cls(rank, [(i, sign)])

    def is_identity(self):
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.rank == other.rank and self.letters == other.letters

    def __hash__(self):
        return hash((self.rank, self.letters))

    def __mul__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return concat(self, other)

    def __invert__(self):
        return invert(self)

    def __pow__(self, k):
        if k < 0:
            return invert(self) ** -k

        letters = self.letters * k
        return Word._from_reduced(self.rank, _reduce(letters))

    def __str__(self):
        if not self.letters:
            return "1"

        return " ".join(
            f"x{gen}" if sign == 1 else f"x{gen}^-1" for gen, sign in self.letters
        )

    def __repr__(self):
        return f"<johnsonfilt.Word rank={self.rank}: {self}>"


def concat(a, b):
    """freely reduced product ``a * b``

    Raises
    ------
    RankMismatchError
        If the ranks of ``a`` and ``b`` differ.
    """

    _check_same_rank(a, b)

    # only the junction can cancel
    left = list(a.letters)
    right = b.letters
    i = 0
    while left and i < len(right):
        gen, sign = right[i]
        if left[-1] == (gen, -sign):
            left.pop()
            i += 1
        else:
            break

    return Word._from_reduced(a.rank, tuple(left) + right[i:])


def invert(a):
    """inverse word: reversed letters with flipped signs"""

    letters = tuple((gen, -sign) for gen, sign in reversed(a.letters))
    return Word._from_reduced(a.rank, letters)


def reverse(a):
    """image under the anti-automorphism fixing every generator (letters reversed)"""

    return Word._from_reduced(a.rank, tuple(reversed(a.letters)))


def commutator(a, b):
    """commutator ``[a, b] = a^-1 b^-1 a b``"""

    _check_same_rank(a, b)

    letters = invert(a).letters + invert(b).letters + a.letters + b.letters
    return Word._from_reduced(a.rank, _reduce(letters))


def left_normed_commutator(words):
    """left-nested commutator ``[...[[w_1, w_2], w_3], ..., w_m]``"""

    words = list(words)
    if not words:
        raise ValueError("need at least one word")

    result = words[0]
    for word in words[1:]:
        result = commutator(result, word)

    return result


def abelianize(a):
    """exponent sum of every generator

    Parameters
    ----------
    a : Word

    Returns
    -------
    vector : np.ndarray of int
        Array of length ``a.rank``; entry ``i - 1`` is the exponent sum of ``x_i``.
    """

    vector = np.zeros(a.rank, dtype=int)
    for gen, sign in a.letters:
        vector[gen - 1] += sign

    return vector


def kill_generator(a, i):
    """image under F_n -> F_{n-1} sending x_i to 1

    Generators with index larger than ``i`` are renumbered down by one.
    """

    if a.rank < 2:
        raise ValueError("Cannot kill a generator of a rank 1 free group")

    _check_index("i", i, a.rank)

    letters = [
        (gen if gen < i else gen - 1, sign) for gen, sign in a.letters if gen != i
    ]
    return Word._from_reduced(a.rank - 1, _reduce(letters))
