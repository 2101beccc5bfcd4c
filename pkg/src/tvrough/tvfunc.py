"""Three-valued functions U -> 3 with pointwise operations."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Iterator, Sequence

from . import three
from .errors import UniverseMismatch
from .three import ONE, U, ZERO, Trit
from .universe import SubsetU, Universe


@dataclass(frozen=True)
class TvFunction:
    """A total map from a universe to the chain 0 < u < 1.

    ``values[i]`` is the value at ``universe.elements[i]``.
    """

    universe: Universe
    values: tuple[Trit, ...]

    def __post_init__(self):
        values = tuple(Trit(v) for v in self.values)
        if len(values) != len(self.universe):
            raise ValueError(
                f"expected {len(self.universe)} values for universe {list(self.universe)}, got {len(values)}"
            )
        object.__setattr__(self, "values", values)

    @classmethod
    def from_literals(cls, universe: Universe, literals: Sequence[str]) -> "TvFunction":
        """Build from trit literals, e.g. ``["1", "u", "0"]`` or ``"1u0"``."""
        return cls(universe, tuple(Trit.parse(s) for s in literals))

    @classmethod
    def constant(cls, universe: Universe, value: Trit) -> "TvFunction":
        return cls(universe, (value,) * len(universe))

    def __call__(self, x: str) -> Trit:
        return self.values[self.universe.index(x)]

    def __getitem__(self, x: str) -> Trit:
        return self(x)

    def items(self) -> Iterator[tuple[str, Trit]]:
        return zip(self.universe.elements, self.values)

    @property
    def literals(self) -> list[str]:
        return [str(v) for v in self.values]

    @property
    def sort_key(self) -> tuple[int, ...]:
        return tuple(int(v) for v in self.values)

    def __str__(self) -> str:
        return "(" + ",".join(self.literals) + ")"

    def __repr__(self) -> str:
        return f"TvFunction{self}"

    # lattice sugar
    def __and__(self, other: "TvFunction") -> "TvFunction":
        return lift_binary(three.meet, self, other)

    def __or__(self, other: "TvFunction") -> "TvFunction":
        return lift_binary(three.join, self, other)

    def __invert__(self) -> "TvFunction":
        return lift_unary(three.neg, self)

    def __le__(self, other: "TvFunction") -> bool:
        return leq(self, other)

    def __ge__(self, other: "TvFunction") -> bool:
        return leq(other, self)


def bottom(universe: Universe) -> TvFunction:
    return TvFunction.constant(universe, ZERO)


def top(universe: Universe) -> TvFunction:
    return TvFunction.constant(universe, ONE)


def all_functions(universe: Universe) -> list[TvFunction]:
    """All 3^|U| functions, in canonical (lexicographic) order."""
    return [TvFunction(universe, vs) for vs in product(three.TRITS, repeat=len(universe))]


def _resolve(op, table) -> Callable:
    if isinstance(op, str):
        try:
            return table[op]
        except KeyError:
            raise ValueError(f"unknown operation {op!r}; expected one of {sorted(table)}") from None
    return op


def _same_universe(*fs: TvFunction) -> Universe:
    universe = fs[0].universe
    for f in fs[1:]:
        if f.universe != universe:
            raise UniverseMismatch(f"functions over {list(universe)} and {list(f.universe)}")
    return universe


def lift_unary(op, f: TvFunction) -> TvFunction:
    op = _resolve(op, three.UNARY_OPS)
    return TvFunction(f.universe, tuple(op(v) for v in f.values))


def lift_binary(op, f: TvFunction, g: TvFunction) -> TvFunction:
    op = _resolve(op, three.BINARY_OPS)
    universe = _same_universe(f, g)
    return TvFunction(universe, tuple(op(a, b) for a, b in zip(f.values, g.values)))


def meet_family(fs: Iterable[TvFunction], universe: Universe) -> TvFunction:
    """Pointwise minimum; the empty family gives the top function."""
    values = [ONE] * len(universe)
    for f in fs:
        if f.universe != universe:
            raise UniverseMismatch(f"function {f} is not over {list(universe)}")
        values = [three.meet(a, b) for a, b in zip(values, f.values)]
    return TvFunction(universe, tuple(values))


def join_family(fs: Iterable[TvFunction], universe: Universe) -> TvFunction:
    """Pointwise maximum; the empty family gives the bottom function."""
    values = [ZERO] * len(universe)
    for f in fs:
        if f.universe != universe:
            raise UniverseMismatch(f"function {f} is not over {list(universe)}")
        values = [three.join(a, b) for a, b in zip(values, f.values)]
    return TvFunction(universe, tuple(values))


def core(f: TvFunction) -> SubsetU:
    mask = 0
    for i, v in enumerate(f.values):
        if v == ONE:
            mask |= 1 << i
    return SubsetU(f.universe, mask)


def support(f: TvFunction) -> SubsetU:
    mask = 0
    for i, v in enumerate(f.values):
        if v >= U:
            mask |= 1 << i
    return SubsetU(f.universe, mask)


def leq(f: TvFunction, g: TvFunction) -> bool:
    _same_universe(f, g)
    return all(a <= b for a, b in zip(f.values, g.values))
