"""Binary relations, rough approximations, rough-set systems and Alexandrov topologies."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from . import order
from .errors import InvalidTopology, NotAQuasiorder, PreconditionError, UniverseMismatch
from .order import Check
from .pairs import ApproxPair, canonical
from .universe import SubsetU, Universe


@dataclass(frozen=True)
class Relation:
    """``rows[i]`` is the mask of R(x_i) = {y | x_i R y}."""

    universe: Universe
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        if len(rows) != len(self.universe):
            raise ValueError("one adjacency row per universe element is required")
        full = self.universe.full_mask
        for m in rows:
            if m < 0 or m & ~full:
                raise ValueError(f"row mask {m} out of range")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_adjacency(cls, universe: Universe, adjacency: Mapping[str, Iterable[str]]) -> "Relation":
        """Absent keys mean an empty row."""
        for x in adjacency:
            universe.index(x)
        return cls(universe, tuple(universe.subset(adjacency.get(x, ())).mask for x in universe))

    @classmethod
    def from_pairs(cls, universe: Universe, pairs: Iterable[tuple[str, str]]) -> "Relation":
        rows = [0] * len(universe)
        for x, y in pairs:
            rows[universe.index(x)] |= universe.bit(y)
        return cls(universe, tuple(rows))

    @classmethod
    def identity(cls, universe: Universe) -> "Relation":
        return cls(universe, tuple(1 << i for i in range(len(universe))))

    @classmethod
    def universal(cls, universe: Universe) -> "Relation":
        return cls(universe, (universe.full_mask,) * len(universe))

    @classmethod
    def from_partition(cls, universe: Universe, blocks: Iterable[Iterable[str]]) -> "Relation":
        rows = [0] * len(universe)
        seen = 0
        for block in blocks:
            m = universe.subset(block).mask
            if m & seen:
                raise ValueError("partition blocks overlap")
            seen |= m
            for x in universe.subset(block):
                rows[universe.index(x)] = m
        if seen != universe.full_mask:
            raise ValueError("partition blocks do not cover the universe")
        return cls(universe, tuple(rows))

    def image(self, x: str) -> SubsetU:
        return SubsetU(self.universe, self.rows[self.universe.index(x)])

    def preimage(self, y: str) -> SubsetU:
        b = self.universe.bit(y)
        return SubsetU(self.universe, sum(1 << i for i, m in enumerate(self.rows) if m & b))

    def related(self, x: str, y: str) -> bool:
        return bool(self.rows[self.universe.index(x)] & self.universe.bit(y))

    def inverse(self) -> "Relation":
        n = len(self.universe)
        rows = [0] * n
        for i, m in enumerate(self.rows):
            for j in range(n):
                if m >> j & 1:
                    rows[j] |= 1 << i
        return Relation(self.universe, tuple(rows))

    def pairs(self) -> list[tuple[str, str]]:
        return [(x, y) for x in self.universe for y in self.image(x)]

    def adjacency(self) -> dict[str, list[str]]:
        return {x: self.image(x).names for x in self.universe}

    def __str__(self) -> str:
        return "; ".join(f"{x}->{self.image(x)}" for x in self.universe)


@dataclass(frozen=True)
class RelationFlags:
    reflexive: bool
    transitive: bool
    symmetric: bool
    serial: bool
    quasiorder: bool
    equivalence: bool
    tolerance: bool

    def as_dict(self) -> dict:
        return asdict(self)


def relation_predicates(r: Relation) -> RelationFlags:
    rows = r.rows
    reflexive = all(m >> i & 1 for i, m in enumerate(rows))
    serial = all(m != 0 for m in rows)
    transitive = True
    for i, m in enumerate(rows):
        reach = 0
        for j in range(len(rows)):
            if m >> j & 1:
                reach |= rows[j]
        if reach & ~m:
            transitive = False
            break
    symmetric = r.inverse().rows == rows
    return RelationFlags(
        reflexive=reflexive,
        transitive=transitive,
        symmetric=symmetric,
        serial=serial,
        quasiorder=reflexive and transitive,
        equivalence=reflexive and transitive and symmetric,
        tolerance=reflexive and symmetric,
    )


def is_quasiorder(r: Relation) -> bool:
    return relation_predicates(r).quasiorder


def require_quasiorder(r: Relation) -> None:
    flags = relation_predicates(r)
    if not flags.quasiorder:
        missing = [k for k in ("reflexive", "transitive") if not getattr(flags, k)]
        raise NotAQuasiorder(f"relation is not a quasiorder (not {' and not '.join(missing)})")


def reflexive_transitive_closure(r: Relation) -> Relation:
    n = len(r.universe)
    rows = [m | (1 << i) for i, m in enumerate(r.rows)]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            reach = rows[i]
            for j in range(n):
                if rows[i] >> j & 1:
                    reach |= rows[j]
            if reach != rows[i]:
                rows[i] = reach
                changed = True
    return Relation(r.universe, tuple(rows))


def quasiorders(universe: Universe) -> Iterator[Relation]:
    """All quasiorders: every reflexive relation, filtered by transitivity."""
    n = len(universe)
    candidates = [[m for m in range(1 << n) if m >> i & 1] for i in range(n)]
    for rows in product(*candidates):
        r = Relation(universe, rows)
        if relation_predicates(r).transitive:
            yield r


def _check_set(r: Relation, X: SubsetU) -> None:
    if X.universe != r.universe:
        raise UniverseMismatch("set and relation live in different universes")


def lower(r: Relation, X: SubsetU) -> SubsetU:
    """{x | R(x) <= X}"""
    _check_set(r, X)
    m = X.mask
    return SubsetU(r.universe, sum(1 << i for i, row in enumerate(r.rows) if row & ~m == 0))


def upper(r: Relation, X: SubsetU) -> SubsetU:
    """{x | R(x) meets X}"""
    _check_set(r, X)
    m = X.mask
    return SubsetU(r.universe, sum(1 << i for i, row in enumerate(r.rows) if row & m))


@dataclass(frozen=True)
class RoughSetSystem:
    universe: Universe
    pairs: tuple[ApproxPair, ...]
    source: Relation

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, p) -> bool:
        return p in self.pairs


def rs_enumerate(r: Relation) -> RoughSetSystem:
    """{(lower X, upper X) | X <= U}, deduplicated and canonically ordered.

    Only needs a serial relation to produce valid pairs; for non-serial
    relations some X would give lower X not inside upper X.
    """
    found = set()
    for X in r.universe.subsets():
        lo, up = lower(r, X), upper(r, X)
        if not lo <= up:
            raise PreconditionError(f"relation is not serial: ({lo},{up}) is not an approximation pair")
        found.add(ApproxPair(lo, up))
    return RoughSetSystem(r.universe, tuple(canonical(found)), r)


@dataclass(frozen=True)
class Topology:
    """A finite Alexandrov topology stored as a set of open-set masks."""

    universe: Universe
    opens: frozenset

    def __post_init__(self):
        opens = frozenset(self.opens)
        object.__setattr__(self, "opens", opens)
        full = self.universe.full_mask
        if 0 not in opens or full not in opens:
            raise InvalidTopology("a topology must contain the empty set and the universe")
        for a in opens:
            if a < 0 or a & ~full:
                raise InvalidTopology(f"open set mask {a} out of range")
            for b in opens:
                if a | b not in opens or a & b not in opens:
                    raise InvalidTopology(
                        f"not closed under union/intersection: "
                        f"{SubsetU(self.universe, a)}, {SubsetU(self.universe, b)}"
                    )

    @classmethod
    def from_sets(cls, universe: Universe, sets: Iterable[Iterable[str] | SubsetU]) -> "Topology":
        masks = set()
        for s in sets:
            masks.add(s.mask if isinstance(s, SubsetU) else universe.subset(s).mask)
        return cls(universe, frozenset(masks))

    def open_sets(self) -> list[SubsetU]:
        return [SubsetU(self.universe, m) for m in sorted(self.opens)]

    def neighbourhood(self, x: str) -> SubsetU:
        """Least open set containing x."""
        b = self.universe.bit(x)
        m = self.universe.full_mask
        for o in self.opens:
            if o & b:
                m &= o
        return SubsetU(self.universe, m)

    def __len__(self) -> int:
        return len(self.opens)

    def __str__(self) -> str:
        return "{" + ", ".join(str(s) for s in self.open_sets()) + "}"


def topology_from_quasiorder(r: Relation) -> Topology:
    """The <=-closed (upward closed) subsets."""
    require_quasiorder(r)
    opens = set()
    for m in r.universe.masks():
        if all(r.rows[i] & ~m == 0 for i in range(len(r.universe)) if m >> i & 1):
            opens.add(m)
    return Topology(r.universe, frozenset(opens))


def quasiorder_from_topology(t: Topology) -> Relation:
    """x <= y iff y lies in the least neighbourhood of x."""
    return Relation(t.universe, tuple(t.neighbourhood(x).mask for x in t.universe))


def dual_topology(t: Topology) -> Topology:
    full = t.universe.full_mask
    return Topology(t.universe, frozenset(full & ~m for m in t.opens))


def singleton_points(r: Relation) -> SubsetU:
    """{x | [x) = {x}}"""
    return r.universe.subset(x for x in r.universe if r.image(x).mask == r.universe.bit(x))


def rs_via_representation(r: Relation) -> RoughSetSystem:
    """Rough sets as the pairs (A, B) of opens of the topology and its dual
    with A <= B, in which every point x with [x) = {x} lies in A or outside B.
    """
    require_quasiorder(r)
    lowers = topology_from_quasiorder(r).opens
    uppers = dual_topology(topology_from_quasiorder(r)).opens
    s = singleton_points(r).mask
    full = r.universe.full_mask
    found = []
    for a in lowers:
        for b in uppers:
            if a & ~b == 0 and s & ~(a | (full & ~b)) == 0:
                found.append(ApproxPair(SubsetU(r.universe, a), SubsetU(r.universe, b)))
    return RoughSetSystem(r.universe, tuple(canonical(found)), r)


def rs_join_irreducibles(r: Relation) -> list[ApproxPair]:
    """{(0, upper{x}) : |[x)| >= 2}  u  {([x), upper [x)) : x in U}"""
    require_quasiorder(r)
    U_ = r.universe
    out = set()
    for x in U_:
        nx = r.image(x)
        if len(nx) >= 2:
            out.add(ApproxPair(U_.empty(), upper(r, U_.subset([x]))))
        out.add(ApproxPair(nx, upper(r, nx)))
    return canonical(out)


def pair_leq(p: ApproxPair, q: ApproxPair) -> bool:
    return p <= q


def brute_force_join_irreducibles(pairs: Sequence[ApproxPair]) -> list[ApproxPair]:
    return canonical(order.completely_join_irreducibles(list(pairs), pair_leq))


ALT_MODES = ("interior-closure", "ganter")


def approx_alt(r: Relation, X: SubsetU, mode: str = "interior-closure") -> ApproxPair:
    """Alternative quasiorder approximations.

    interior-closure: ({x | [x) <= X}, {x | (x] meets X})
    ganter:           ({x | (x] <= X}, {x | [x) meets X})
    """
    require_quasiorder(r)
    _check_set(r, X)
    inv = r.inverse()
    if mode == "interior-closure":
        lo, up = lower(r, X), upper(inv, X)
    elif mode == "ganter":
        lo, up = lower(inv, X), upper(r, X)
    else:
        raise ValueError(f"unknown mode {mode!r}; expected one of {ALT_MODES}")
    assert lo <= up, "reflexivity guarantees lower <= X <= upper"
    return ApproxPair(lo, up)


def rs_alt(r: Relation, mode: str = "interior-closure") -> list[ApproxPair]:
    return canonical(approx_alt(r, X, mode) for X in r.universe.subsets())


def is_lattice(pairs: Iterable[ApproxPair]) -> Check:
    """Lattice test under the componentwise order; witness lists the offending
    pair and its minimal upper (or maximal lower) bounds."""
    return order.is_lattice(canonical(pairs), pair_leq)


def check_c3_relational(r: Relation) -> Check:
    """If lower X <= upper Y then the intersection of upper Z over all Z with
    lower Z = lower X lies inside upper Y."""
    if not relation_predicates(r).reflexive:
        raise PreconditionError("relation must be reflexive")
    U_ = r.universe
    lo = {m: lower(r, SubsetU(U_, m)).mask for m in U_.masks()}
    up = {m: upper(r, SubsetU(U_, m)).mask for m in U_.masks()}
    meet_up: dict[int, int] = {}
    for m in U_.masks():
        meet_up[lo[m]] = meet_up.get(lo[m], U_.full_mask) & up[m]
    for x in U_.masks():
        for y in U_.masks():
            if lo[x] & ~up[y] == 0 and meet_up[lo[x]] & ~up[y]:
                return Check(False, {
                    "X": SubsetU(U_, x),
                    "Y": SubsetU(U_, y),
                    "lower_X": SubsetU(U_, lo[x]),
                    "upper_Y": SubsetU(U_, up[y]),
                    "meet_of_uppers": SubsetU(U_, meet_up[lo[x]]),
                })
    return Check(True)
