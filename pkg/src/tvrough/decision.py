"""Decision procedures for "is this family a rough-set system?" and the
exhaustive and randomized sweeps that exercise them."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .errors import InvariantViolation
from .family import (
    FunctionFamily,
    approximation_pairs,
    check_c1,
    check_c2,
    check_c3,
    close_polarity,
    is_complete_polarity_sublattice,
    is_luk_subalgebra,
    join_irreducibles,
    luk_witness,
    quasiorder_of_family,
)
from .pairs import phi, phi_inv
from .relspace import (
    Relation,
    brute_force_join_irreducibles,
    quasiorders,
    relation_predicates,
    require_quasiorder,
    rs_enumerate,
    rs_join_irreducibles,
    rs_via_representation,
)
from .tvfunc import all_functions
from .universe import Universe

YES_QUASIORDER = "yes-quasiorder"
YES_EQUIVALENCE = "yes-equivalence"
NO = "no"

MAX_SWEEP_SIZE = 4


@dataclass
class Verdict:
    answer: str
    relation: Relation | None = None
    failures: list[tuple[str, dict | None]] = field(default_factory=list)
    certificate: bool = False
    diagnostics: dict = field(default_factory=dict)

    @property
    def yes(self) -> bool:
        return self.answer != NO

    def failed(self, name: str) -> dict | None:
        for n, w in self.failures:
            if n == name:
                return w
        raise KeyError(name)

    def failure_names(self) -> list[str]:
        return [n for n, _ in self.failures]


def _certify(F: FunctionFamily, r: Relation) -> bool:
    return approximation_pairs(F) == list(rs_enumerate(r).pairs)


def decide_quasiorder(F: FunctionFamily) -> Verdict:
    """A(F) equals the rough-set system of some quasiorder iff F is a
    complete polarity sublattice satisfying C1, C2 and C3."""
    closed = is_complete_polarity_sublattice(F)
    if not closed:
        return Verdict(NO, failures=[("polarity-sublattice", closed.witness)])
    failures = []
    diagnostics = {}
    for name, check in (("C1", check_c1), ("C2", check_c2), ("C3", check_c3)):
        result = check(F)
        diagnostics[name] = result.detail
        if not result:
            failures.append((name, result.witness))
    if failures:
        return Verdict(NO, failures=failures, diagnostics=diagnostics)
    r = quasiorder_of_family(F)
    if not _certify(F, r):
        raise InvariantViolation(f"C1-C3 hold but A(F) differs from the rough sets of {r}")
    return Verdict(YES_QUASIORDER, r, certificate=True, diagnostics=diagnostics)


def decide_equivalence(F: FunctionFamily) -> Verdict:
    """As decide_quasiorder, plus closure under possibility."""
    v = decide_quasiorder(F)
    luk_ok = is_luk_subalgebra(F)
    if not luk_ok and is_complete_polarity_sublattice(F):
        v.failures.append(("lukasiewicz", luk_witness(F)))
    if v.answer == NO or not luk_ok:
        return Verdict(NO, failures=v.failures, diagnostics=v.diagnostics)
    if not relation_predicates(v.relation).equivalence:
        raise InvariantViolation(f"Lukasiewicz family induced a non-symmetric quasiorder {v.relation}")
    return Verdict(YES_EQUIVALENCE, v.relation, certificate=v.certificate, diagnostics=v.diagnostics)


def rs_to_family(r: Relation) -> FunctionFamily:
    require_quasiorder(r)
    return FunctionFamily(r.universe, tuple(phi_inv(p) for p in rs_enumerate(r)))


# sweeps --------------------------------------------------------------------

SWEEP_MODES = ("quasiorder", "equivalence", "both")


@dataclass
class SweepReport:
    max_n: int
    mode: str
    counts: dict[int, dict[str, int]] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(c["relations"] for c in self.counts.values())

    @property
    def ok(self) -> bool:
        return not self.violations


def _sweep_one(r: Relation) -> list[str]:
    """Run checks (i)-(vi) on one quasiorder; return the names of failed items."""
    bad = []
    F = rs_to_family(r)
    rs = list(rs_enumerate(r).pairs)
    ok_i = bool(is_complete_polarity_sublattice(F)) and all(c(F) for c in (check_c1, check_c2, check_c3))
    if not ok_i:
        bad.append("i")
    if ok_i and quasiorder_of_family(F) != r:
        bad.append("ii")
    if approximation_pairs(F) != rs:
        bad.append("iii")
    if list(rs_via_representation(r).pairs) != rs:
        bad.append("iv")
    rj = rs_join_irreducibles(r)
    if rj != brute_force_join_irreducibles(rs):
        bad.append("v")
    elif ok_i and sorted((phi(f) for f in join_irreducibles(F)), key=lambda p: p.sort_key) != rj:
        bad.append("v")
    if is_luk_subalgebra(F) != relation_predicates(r).equivalence:
        bad.append("vi")
    return bad


def sweep(max_n: int, mode: str = "both") -> SweepReport:
    """Check every quasiorder (or equivalence) on x1..xn for n = 1..max_n."""
    if not 1 <= max_n <= MAX_SWEEP_SIZE:
        raise ValueError(f"max_n must be between 1 and {MAX_SWEEP_SIZE}")
    if mode not in SWEEP_MODES:
        raise ValueError(f"mode must be one of {SWEEP_MODES}")
    report = SweepReport(max_n, mode)
    for n in range(1, max_n + 1):
        U_ = Universe.canonical(n)
        counts = {"relations": 0, "quasiorders": 0, "equivalences": 0, "violations": 0}
        for r in quasiorders(U_):
            is_eq = relation_predicates(r).equivalence
            if mode == "equivalence" and not is_eq:
                continue
            counts["relations"] += 1
            counts["quasiorders"] += 1
            counts["equivalences"] += is_eq
            bad = _sweep_one(r)
            if bad:
                counts["violations"] += 1
                report.violations.append({"n": n, "relation": r, "items": bad})
        report.counts[n] = counts
    return report


@dataclass
class RandomSweepReport:
    n: int
    trials: int
    seed: int
    tallies: dict[str, int] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


MAX_RANDOM_SIZE = 3
MAX_SAMPLE = 3


def sample_family(rng: random.Random, universe: Universe) -> FunctionFamily:
    """k ~ uniform{0..3}, then k distinct functions drawn uniformly from 3^U."""
    pool = all_functions(universe)
    k = rng.randint(0, min(MAX_SAMPLE, len(pool)))
    return FunctionFamily(universe, tuple(rng.sample(pool, k)))


def random_family_sweep(n: int, trials: int, seed: int) -> RandomSweepReport:
    """Test both directions of the characterisation on random closed families.

    Each trial samples a family with :func:`sample_family` from
    ``random.Random(seed)``, closes it, and decides it. A "yes" must come
    with a certificate; a "no" must differ from the rough-set system of every
    quasiorder on U.
    """
    if not 1 <= n <= MAX_RANDOM_SIZE:
        raise ValueError(f"n must be between 1 and {MAX_RANDOM_SIZE}")
    rng = random.Random(seed)
    U_ = Universe.canonical(n)
    all_rs = [(r, list(rs_enumerate(r).pairs)) for r in quasiorders(U_)]
    report = RandomSweepReport(n, trials, seed, {YES_QUASIORDER: 0, NO: 0, YES_EQUIVALENCE: 0})
    for t in range(trials):
        F = close_polarity(sample_family(rng, U_))
        v = decide_quasiorder(F)
        report.tallies[v.answer] += 1
        if decide_equivalence(F).yes:
            report.tallies[YES_EQUIVALENCE] += 1
        pairs = approximation_pairs(F)
        if v.yes:
            if pairs != list(rs_enumerate(v.relation).pairs):
                report.violations.append({"trial": t, "family": F, "reason": "yes without certificate"})
        else:
            match = next((r for r, rs in all_rs if rs == pairs), None)
            if match is not None:
                report.violations.append({"trial": t, "family": F, "reason": "no, but matches", "relation": match})
    return report


SUBALGEBRA_KINDS = ("polarity-lattice", "lukasiewicz")


def enumerate_subalgebras(n: int, kind: str = "lukasiewicz") -> list[FunctionFamily]:
    """Every subset of 3^U that is a complete polarity sublattice (or, for
    ``lukasiewicz``, one that is also closed under possibility)."""
    if not 1 <= n <= 2:
        raise ValueError("subset enumeration is limited to n <= 2")
    if kind not in SUBALGEBRA_KINDS:
        raise ValueError(f"kind must be one of {SUBALGEBRA_KINDS}")
    U_ = Universe.canonical(n)
    pool = all_functions(U_)
    found = []
    for k in range(len(pool) + 1):
        for members in combinations(pool, k):
            F = FunctionFamily(U_, members)
            if not is_complete_polarity_sublattice(F):
                continue
            if kind == "lukasiewicz" and not is_luk_subalgebra(F):
                continue
            found.append(F)
    return found


def iter_quasiorder_families(universe: Universe) -> Iterator[tuple[Relation, FunctionFamily]]:
    for r in quasiorders(universe):
        yield r, rs_to_family(r)
