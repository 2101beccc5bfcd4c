"""Approximation pairs (A, B) with A <= B, and their correspondence with 3^U."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidPair, UniverseMismatch
from .three import ONE, U, ZERO
from .tvfunc import TvFunction, core, support
from .universe import SubsetU, Universe


@dataclass(frozen=True)
class ApproxPair:
    lower: SubsetU
    upper: SubsetU

    def __post_init__(self):
        if self.lower.universe != self.upper.universe:
            raise UniverseMismatch("pair components live in different universes")
        if not self.lower <= self.upper:
            raise InvalidPair(f"lower {self.lower} is not a subset of upper {self.upper}")

    @classmethod
    def of(cls, universe: Universe, lower: Iterable[str], upper: Iterable[str]) -> "ApproxPair":
        return cls(universe.subset(lower), universe.subset(upper))

    @property
    def universe(self) -> Universe:
        return self.lower.universe

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.lower.mask, self.upper.mask)

    def __le__(self, other: "ApproxPair") -> bool:
        return self.lower <= other.lower and self.upper <= other.upper

    def __ge__(self, other: "ApproxPair") -> bool:
        return other <= self

    def __and__(self, other: "ApproxPair") -> "ApproxPair":
        return ApproxPair(self.lower & other.lower, self.upper & other.upper)

    def __or__(self, other: "ApproxPair") -> "ApproxPair":
        return ApproxPair(self.lower | other.lower, self.upper | other.upper)

    def __invert__(self) -> "ApproxPair":
        return neg(self)

    def __str__(self) -> str:
        return f"({self.lower},{self.upper})"

    def __repr__(self) -> str:
        return f"ApproxPair{self}"


def canonical(pairs: Iterable[ApproxPair]) -> list[ApproxPair]:
    """Deduplicate and sort by (lower mask, upper mask)."""
    return sorted(set(pairs), key=lambda p: p.sort_key)


def phi(f: TvFunction) -> ApproxPair:
    return ApproxPair(core(f), support(f))


def phi_inv(p: ApproxPair) -> TvFunction:
    values = []
    for x in p.universe:
        if x in p.lower:
            values.append(ONE)
        elif x in p.upper:
            values.append(U)
        else:
            values.append(ZERO)
    return TvFunction(p.universe, tuple(values))


def neg(p: ApproxPair) -> ApproxPair:
    return ApproxPair(p.upper.complement(), p.lower.complement())


def nec(p: ApproxPair) -> ApproxPair:
    return ApproxPair(p.lower, p.lower)


def poss(p: ApproxPair) -> ApproxPair:
    return ApproxPair(p.upper, p.upper)


def star(p: ApproxPair) -> ApproxPair:
    c = p.upper.complement()
    return ApproxPair(c, c)


def plus(p: ApproxPair) -> ApproxPair:
    c = p.lower.complement()
    return ApproxPair(c, c)


def meet(p: ApproxPair, q: ApproxPair) -> ApproxPair:
    return p & q


def join(p: ApproxPair, q: ApproxPair) -> ApproxPair:
    return p | q


def nelson(p: ApproxPair, q: ApproxPair) -> ApproxPair:
    """(A,B) -> (C,D) = (A^c u C, A^c u D)."""
    ac = p.lower.complement()
    return ApproxPair(ac | q.lower, ac | q.upper)


def heyting(p: ApproxPair, q: ApproxPair) -> ApproxPair:
    """(A,B) => (C,D) = (B^c u C u (A^c n D), B^c u D)."""
    bc = p.upper.complement()
    ac = p.lower.complement()
    return ApproxPair(bc | q.lower | (ac & q.upper), bc | q.upper)


PAIR_UNARY = {"neg": neg, "nec": nec, "poss": poss, "star": star, "plus": plus}
PAIR_BINARY = {"meet": meet, "join": join, "nelson": nelson, "heyting": heyting}


def pair_op(name: str, p: ApproxPair, q: ApproxPair | None = None) -> ApproxPair:
    if name in PAIR_UNARY:
        return PAIR_UNARY[name](p)
    if name in PAIR_BINARY:
        if q is None:
            raise ValueError(f"operation {name!r} needs a second argument")
        if q.universe != p.universe:
            raise UniverseMismatch("pairs live in different universes")
        return PAIR_BINARY[name](p, q)
    raise ValueError(f"unknown pair operation {name!r}")
