"""Brute-force helpers for finite posets given by a ``leq`` predicate.

Nothing here knows about pairs or functions; callers pass elements in the
order they want results reported in.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
Leq = Callable[[T, T], bool]


@dataclass(frozen=True)
class Check:
    """Verdict of a property check, with the first counterexample found.

    Truthy exactly when the property holds. ``detail`` carries extra
    diagnostics that are reported whether or not the check passed.
    """

    holds: bool
    witness: dict | None = None
    detail: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds


def strictly_below(x: T, elements: Sequence[T], leq: Leq) -> list[T]:
    return [y for y in elements if leq(y, x) and not leq(x, y)]


def upper_bounds(xs: Sequence[T], elements: Sequence[T], leq: Leq) -> list[T]:
    return [z for z in elements if all(leq(x, z) for x in xs)]


def lower_bounds(xs: Sequence[T], elements: Sequence[T], leq: Leq) -> list[T]:
    return [z for z in elements if all(leq(z, x) for x in xs)]


def minimal(xs: Sequence[T], leq: Leq) -> list[T]:
    return [x for x in xs if not any(leq(y, x) and not leq(x, y) for y in xs)]


def maximal(xs: Sequence[T], leq: Leq) -> list[T]:
    return [x for x in xs if not any(leq(x, y) and not leq(y, x) for y in xs)]


def least(xs: Sequence[T], leq: Leq) -> T | None:
    for x in xs:
        if all(leq(x, y) for y in xs):
            return x
    return None


def greatest(xs: Sequence[T], leq: Leq) -> T | None:
    for x in xs:
        if all(leq(y, x) for y in xs):
            return x
    return None


def covers(elements: Sequence[T], leq: Leq) -> list[tuple[T, T]]:
    """Transitive reduction: pairs (a, b) with a < b and nothing strictly between."""
    out = []
    for a in elements:
        for b in elements:
            if a == b or not leq(a, b) or leq(b, a):
                continue
            if any(
                z != a and z != b and leq(a, z) and leq(z, b) and not leq(z, a) and not leq(b, z)
                for z in elements
            ):
                continue
            out.append((a, b))
    return out


def heights(elements: Sequence[T], leq: Leq) -> dict[T, int]:
    """Length of the longest chain from a minimal element up to each element."""
    below = {x: strictly_below(x, elements, leq) for x in elements}
    memo: dict = {}

    def h(x):
        if x not in memo:
            memo[x] = 1 + max((h(y) for y in below[x]), default=-1)
        return memo[x]

    return {x: h(x) for x in elements}


def is_lattice(elements: Sequence[T], leq: Leq) -> Check:
    """Every two elements have a least upper and a greatest lower bound in ``elements``."""
    for i, a in enumerate(elements):
        for b in elements[i + 1:]:
            ub = upper_bounds([a, b], elements, leq)
            if least(ub, leq) is None:
                return Check(False, {"kind": "join", "pair": (a, b), "minimal_upper_bounds": minimal(ub, leq)})
            lb = lower_bounds([a, b], elements, leq)
            if greatest(lb, leq) is None:
                return Check(False, {"kind": "meet", "pair": (a, b), "maximal_lower_bounds": maximal(lb, leq)})
    return Check(True)


def completely_join_irreducibles(elements: Sequence[T], leq: Leq) -> list[T]:
    """Elements x of a finite lattice with x != sup{y : y < x}.

    In a finite lattice this is equivalent to: x = sup S implies x in S.
    The bottom is excluded since it is the join of the empty set.
    """
    out = []
    for x in elements:
        below = strictly_below(x, elements, leq)
        sup = least(upper_bounds(below, elements, leq), leq)
        if sup != x:
            out.append(x)
    return out
