"""The three-element chain 0 < u < 1 and its operations.

Every operation is a literal lookup table so that tests can compare
against the published tables cell by cell.
"""
from __future__ import annotations

from enum import IntEnum


class Trit(IntEnum):
    ZERO = 0
    U = 1
    ONE = 2

    def __str__(self) -> str:
        return _LITERALS[self]

    @classmethod
    def parse(cls, text: str) -> "Trit":
        try:
            return _PARSE[text]
        except (KeyError, TypeError):
            raise ValueError(f"not a trit literal: {text!r} (expected '0', 'u' or '1')") from None


ZERO, U, ONE = Trit.ZERO, Trit.U, Trit.ONE
TRITS = (ZERO, U, ONE)

_LITERALS = {ZERO: "0", U: "u", ONE: "1"}
_PARSE = {v: k for k, v in _LITERALS.items()}


_NEG = {ZERO: ONE, U: U, ONE: ZERO}
_POSS = {ZERO: ZERO, U: ONE, ONE: ONE}
_NEC = {ZERO: ZERO, U: ZERO, ONE: ONE}
_STAR = {ZERO: ONE, U: ZERO, ONE: ZERO}
_PLUS = {ZERO: ONE, U: ONE, ONE: ZERO}

# rows: first argument, columns: second argument
_NELSON = {
    ZERO: {ZERO: ONE, U: ONE, ONE: ONE},
    U: {ZERO: ONE, U: ONE, ONE: ONE},
    ONE: {ZERO: ZERO, U: U, ONE: ONE},
}


def meet(a: Trit, b: Trit) -> Trit:
    return a if a <= b else b


def join(a: Trit, b: Trit) -> Trit:
    return a if a >= b else b


def neg(a: Trit) -> Trit:
    """De Morgan polarity: 0 and 1 swap, u is fixed."""
    return _NEG[a]


def poss(a: Trit) -> Trit:
    return _POSS[a]


def nec(a: Trit) -> Trit:
    return _NEC[a]


def star(a: Trit) -> Trit:
    """Pseudocomplement."""
    return _STAR[a]


def plus(a: Trit) -> Trit:
    """Dual pseudocomplement."""
    return _PLUS[a]


def heyting(a: Trit, b: Trit) -> Trit:
    """Relative pseudocomplement on the chain: 1 if a <= b, else b."""
    if a <= b:
        return ONE
    return b


def nelson(a: Trit, b: Trit) -> Trit:
    return _NELSON[a][b]


UNARY_OPS = {
    "neg": neg,
    "poss": poss,
    "nec": nec,
    "star": star,
    "plus": plus,
}

BINARY_OPS = {
    "meet": meet,
    "join": join,
    "heyting": heyting,
    "nelson": nelson,
}

SYMBOLS = {
    "neg": "~",
    "poss": "poss",
    "nec": "nec",
    "star": "*",
    "plus": "+",
    "meet": "/\\",
    "join": "\\/",
    "heyting": "=>",
    "nelson": "->",
}
