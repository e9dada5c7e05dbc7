"""
Parser for words and automorphism words.

Grammar (whitespace insensitive)::

    expr   := term (["*"] term)*
    term   := factor ("^" ["-"] INT)*
    factor := atom | "(" expr ")" | "[" expr "," expr "]"

Word atoms are ``x<i>`` and ``1``; AutWord atoms are ``a(i,j)``, ``A(i,j,k)``,
``rho(p_3,...,p_n; q_3,...,q_n)`` and ``1``. ``[U,V]`` is ``U^-1 V^-1 U V``.
"""

import re

from johnsonfilt.core.automorphisms import AutLetter, AutWord, autword_commutator
from johnsonfilt.core.freegroup import Word, commutator

_TOKEN = re.compile(r"\s*(?:(?P<NAME>[A-Za-z]+)|(?P<INT>\d+)|(?P<OP>[\^*()\[\],;\-]))")


class ParseError(ValueError):
    """
    expression could not be parsed

    Attributes
    ----------
    position : int
        Offset into the text where parsing failed.
    expected : list of str
        Tokens that would have been accepted.
    """

    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = list(expected)

        text = f"{message} at position {position}"
        if self.expected:
            text += f", expected one of: {', '.join(self.expected)}"
        super().__init__(text)


def _tokenize(text):

    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)

        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()

    tokens.append(("END", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, algebra):
        self.tokens = _tokenize(text)
        self.index = 0
        self.algebra = algebra

    @property
    def current(self):
        return self.tokens[self.index]

    def _advance(self):
        token = self.current
        self.index += 1
        return token

    def _error(self, expected):
        kind, value, position = self.current
        found = "end of input" if kind == "END" else repr(value)
        raise ParseError(f"unexpected {found}", position, expected)

    def _accept(self, value):
        if self.current[0] == "OP" and self.current[1] == value:
            return self._advance()
        return None

    def _expect(self, value):
        token = self._accept(value)
        if token is None:
            self._error([repr(value)])
        return token

    def expect_int(self, signed=False):
        negative = signed and self._accept("-") is not None
        kind, value, _ = self.current
        if kind != "INT":
            self._error(["integer"])
        self._advance()
        return -int(value) if negative else int(value)

    def _starts_factor(self):
        kind, value, _ = self.current
        return kind in ("NAME", "INT") or (kind == "OP" and value in "([")

    def parse(self):
        result = self.expr()
        if self.current[0] != "END":
            self._error(["'*'", "'^'", "atom", "end of input"])
        return result

    def expr(self):
        result = self.term()
        while True:
            if self._accept("*") is not None:
                result = self.algebra.mul(result, self.term())
            elif self._starts_factor():
                result = self.algebra.mul(result, self.term())
            else:
                return result

    def term(self):
        result = self.factor()
        while self._accept("^") is not None:
            result = self.algebra.power(result, self.expect_int(signed=True))
        return result

    def factor(self):
        if self._accept("(") is not None:
            result = self.expr()
            self._expect(")")
            return result

        if self._accept("[") is not None:
            left = self.expr()
            self._expect(",")
            right = self.expr()
            self._expect("]")
            return self.algebra.commutator(left, right)

        kind, value, _ = self.current
        if kind == "INT" and value == "1":
            self._advance()
            return self.algebra.identity()

        if kind == "NAME":
            return self.algebra.atom(self)

        self._error(self.algebra.atoms + ["'('", "'['"])


class _WordAlgebra:

    atoms = ["'x<i>'", "'1'"]

    def __init__(self, n):
        self.n = n

    def identity(self):
        return Word.identity(self.n)

    def atom(self, parser):
        _, name, _ = parser.current
        if name != "x":
            parser._error(self.atoms)
        parser._advance()
        return Word.generator(self.n, parser.expect_int())

    def mul(self, a, b):
        return a * b

    def power(self, a, k):
        return a**k

    def commutator(self, a, b):
        return commutator(a, b)


class _AutAlgebra:

    atoms = ["'a(i,j)'", "'A(i,j,k)'", "'rho(p;q)'", "'1'"]

    def __init__(self, n):
        self.n = n

    def identity(self):
        return AutWord.identity(self.n)

    def _int_list(self, parser, stop):
        values = [parser.expect_int(signed=True)]
        while parser._accept(",") is not None:
            values.append(parser.expect_int(signed=True))
        if parser.current[1] != stop:
            parser._error([repr(","), repr(stop)])
        return values

    def atom(self, parser):
        _, name, _ = parser.current

        if name not in ("a", "A", "rho"):
            parser._error(self.atoms)

        parser._advance()
        parser._expect("(")

        if name == "rho":
            p = self._int_list(parser, ";")
            parser._expect(";")
            q = self._int_list(parser, ")")
            parser._expect(")")
            letter = AutLetter.rho(p, q)
        else:
            indices = self._int_list(parser, ")")
            parser._expect(")")
            kind = "alpha" if name == "a" else "A"
            letter = AutLetter(kind, indices)

        return AutWord(self.n, [letter])

    def mul(self, a, b):
        return a * b

    def power(self, a, k):
        return a**k

    def commutator(self, a, b):
        return autword_commutator(a, b)


def parse_word(text, n):
    """
    parse a free group word of rank ``n``

    Examples
    --------
    >>> print(parse_word("[x1, x2] x3^-1", 3))
    x1^-1 x2^-1 x1 x2 x3^-1

    Raises
    ------
    ParseError
        If ``text`` does not follow the grammar.
    """

    return _Parser(text, _WordAlgebra(n)).parse()


def parse_autword(text, n):
    """
    parse an AutWord of rank ``n``, e.g. ``"[a(3,1), a(3,2)]"``

    ``u*v`` applies ``v`` first.

    Raises
    ------
    ParseError
        If ``text`` does not follow the grammar.
    """

    return _Parser(text, _AutAlgebra(n)).parse()
