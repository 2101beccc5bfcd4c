"""Families of three-valued functions: closure, induced quasiorder and the
conditions that decide whether a family is a rough-set system."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from . import order, three
from .errors import InvariantViolation, PreconditionError, UniverseMismatch
from .order import Check
from .pairs import ApproxPair, canonical, phi
from .relspace import Relation, Topology
from .tvfunc import (
    TvFunction,
    bottom,
    core,
    lift_binary,
    lift_unary,
    meet_family,
    support,
    top,
)
from .universe import SubsetU, Universe


@dataclass(frozen=True)
class FunctionFamily:
    """A finite set of functions over one universe, kept sorted and deduplicated."""

    universe: Universe
    members: tuple[TvFunction, ...]

    def __post_init__(self):
        for f in self.members:
            if f.universe != self.universe:
                raise UniverseMismatch(f"{f} is not a function on {list(self.universe)}")
        members = tuple(sorted(set(self.members), key=lambda f: f.sort_key))
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, universe: Universe, members: Iterable[TvFunction | str]) -> "FunctionFamily":
        """Members may be functions or literal strings such as ``"1u0"``."""
        fs = [m if isinstance(m, TvFunction) else TvFunction.from_literals(universe, m) for m in members]
        return cls(universe, tuple(fs))

    def __iter__(self) -> Iterator[TvFunction]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, f) -> bool:
        return f in self._member_set

    @cached_property
    def _member_set(self) -> frozenset:
        return frozenset(self.members)

    def __str__(self) -> str:
        return "{" + ", ".join(str(f) for f in self.members) + "}"


def approximation_pairs(F: FunctionFamily) -> list[ApproxPair]:
    """A(F) = {(C(f), S(f)) | f in F} in canonical order."""
    return canonical(phi(f) for f in F)


def close_polarity(F: FunctionFamily) -> FunctionFamily:
    """Least complete polarity sublattice of 3^U containing F."""
    U_ = F.universe
    members = set(F.members) | {bottom(U_), top(U_)}
    frontier = list(members)
    while frontier:
        new = set()
        for f in frontier:
            candidates = [~f]
            for g in members:
                candidates.append(f & g)
                candidates.append(f | g)
            for h in candidates:
                if h not in members and h not in new:
                    new.add(h)
        members |= new
        frontier = list(new)
    return FunctionFamily(U_, tuple(members))


def _closure_witness(F: FunctionFamily, with_neg: bool) -> dict | None:
    U_ = F.universe
    for const in (bottom(U_), top(U_)):
        if const not in F:
            return {"kind": "missing-bound", "missing": const}
    for f in F:
        if with_neg and ~f not in F:
            return {"kind": "neg", "f": f, "missing": ~f}
    ms = F.members
    for i, f in enumerate(ms):
        for g in ms[i + 1:]:
            if f & g not in F:
                return {"kind": "meet", "f": f, "g": g, "missing": f & g}
            if f | g not in F:
                return {"kind": "join", "f": f, "g": g, "missing": f | g}
    return None


@lru_cache(maxsize=4096)
def is_complete_polarity_sublattice(F: FunctionFamily) -> Check:
    w = _closure_witness(F, with_neg=True)
    return Check(w is None, w)


@lru_cache(maxsize=4096)
def is_complete_sublattice(F: FunctionFamily) -> Check:
    w = _closure_witness(F, with_neg=False)
    return Check(w is None, w)


def require_polarity(F: FunctionFamily) -> None:
    check = is_complete_polarity_sublattice(F)
    if not check:
        raise PreconditionError("family is not a complete polarity sublattice", check.witness)


def _topology(F: FunctionFamily, fn) -> Topology:
    check = is_complete_sublattice(F)
    if not check:
        raise PreconditionError("family is not a complete sublattice", check.witness)
    return Topology(F.universe, frozenset(fn(f).mask for f in F))


def cores(F: FunctionFamily) -> Topology:
    return _topology(F, core)


def supports(F: FunctionFamily) -> Topology:
    return _topology(F, support)


def quasiorder_of_family(F: FunctionFamily) -> Relation:
    """x <=_F y iff every member with value 1 at x has value 1 at y."""
    require_polarity(F)
    U_ = F.universe
    rows = []
    for x in U_:
        row = U_.full_mask
        for f in F:
            if f(x) == three.ONE:
                row &= core(f).mask
        rows.append(row)
    return Relation(U_, tuple(rows))


def f_upper(F: FunctionFamily, x: str) -> TvFunction:
    """Meet of the members taking value 1 at x."""
    require_polarity(F)
    return meet_family((f for f in F if f(x) == three.ONE), F.universe)


def f_lower(F: FunctionFamily, x: str) -> TvFunction:
    """Meet of the members taking value u or 1 at x."""
    require_polarity(F)
    return meet_family((f for f in F if f(x) >= three.U), F.universe)


def theta_classes(F: FunctionFamily) -> list[list[TvFunction]]:
    """Partition of F by equal cores, classes ordered by their first member."""
    classes: dict[int, list[TvFunction]] = {}
    for f in F:
        classes.setdefault(core(f).mask, []).append(f)
    return list(classes.values())


def theta_meet(F: FunctionFamily, f: TvFunction) -> TvFunction:
    """Meet of the members having the same core as f."""
    c = core(f)
    return meet_family((h for h in F if core(h) == c), F.universe)


def singletons(F: FunctionFamily) -> SubsetU:
    """Points x with [x)_F = {x}; cross-checked against the existence of a
    member whose core is exactly {x}."""
    require_polarity(F)
    U_ = F.universe
    by_neighbourhood = U_.subset(x for x in U_ if core(f_upper(F, x)).mask == U_.bit(x))
    core_masks = {core(f).mask for f in F}
    by_core = U_.subset(x for x in U_ if U_.bit(x) in core_masks)
    if by_neighbourhood != by_core:
        raise InvariantViolation(f"singleton characterisations disagree: {by_neighbourhood} vs {by_core}")
    return by_neighbourhood


def check_c1(F: FunctionFamily) -> Check:
    """Every singleton point in a support is also in the core."""
    s = singletons(F)
    for x in s:
        for f in F:
            if x in support(f) and x not in core(f):
                return Check(False, {"x": x, "f": f}, {"singletons": s})
    return Check(True, None, {"singletons": s})


def check_c2(F: FunctionFamily) -> Check:
    """C(f_x) <= {x} for every x, with f_x the meet of members >= u at x.

    ``detail`` also reports the cores of f^x (members = 1 at x) and whether
    the condition would hold with f^x in place of f_x.
    """
    require_polarity(F)
    U_ = F.universe
    lower_cores = {x: core(f_lower(F, x)) for x in U_}
    upper_cores = {x: core(f_upper(F, x)) for x in U_}
    alt_witness = next((x for x in U_ if not upper_cores[x] <= U_.subset([x])), None)
    detail = {
        "f_lower_cores": lower_cores,
        "f_upper_cores": upper_cores,
        "upper_variant_holds": alt_witness is None,
        "upper_variant_witness": alt_witness,
    }
    for x in U_:
        if not lower_cores[x] <= U_.subset([x]):
            return Check(False, {"x": x, "f_lower": f_lower(F, x), "core": lower_cores[x]}, detail)
    return Check(True, None, detail)


def check_c3(F: FunctionFamily) -> Check:
    """C(f) <= S(g) implies S(meet of the Theta-class of f) <= S(g)."""
    require_polarity(F)
    for f in F:
        cf = core(f)
        s_theta = support(theta_meet(F, f))
        for g in F:
            sg = support(g)
            if cf <= sg and not s_theta <= sg:
                return Check(False, {"f": f, "g": g, "theta_meet": theta_meet(F, f)})
    return Check(True)


def join_irreducibles(F: FunctionFamily) -> list[TvFunction]:
    """{f_x | x in U} u {f^x | x in U}."""
    require_polarity(F)
    found = {f_lower(F, x) for x in F.universe} | {f_upper(F, x) for x in F.universe}
    return sorted(found, key=lambda f: f.sort_key)


def brute_force_join_irreducibles(F: FunctionFamily) -> list[TvFunction]:
    js = order.completely_join_irreducibles(list(F.members), lambda f, g: f <= g)
    return sorted(js, key=lambda f: f.sort_key)


CLOSURE_OPS = ("neg", "star", "plus", "poss", "nec", "nelson", "heyting")


def closure_ops_check(F: FunctionFamily) -> dict[str, bool]:
    """For each operation, whether applying it to members stays inside F."""
    flags = {}
    for name in CLOSURE_OPS:
        if name in three.UNARY_OPS:
            flags[name] = all(lift_unary(name, f) in F for f in F)
        else:
            flags[name] = all(lift_binary(name, f, g) in F for f in F for g in F)
    return flags


def is_luk_subalgebra(F: FunctionFamily) -> bool:
    """Complete polarity sublattice that is also closed under possibility."""
    if not is_complete_polarity_sublattice(F):
        return False
    return all(lift_unary("poss", f) in F for f in F)


def luk_witness(F: FunctionFamily) -> dict | None:
    for f in F:
        g = lift_unary("poss", f)
        if g not in F:
            return {"kind": "poss", "f": f, "missing": g}
    return None
