"""Naive reference computations on plain tuples and frozensets.

Nothing here imports the package, so these serve as an independent check on
the bitmask implementation. Trits are the ints 0, 1, 2 (for 0, u, 1).
"""
from itertools import product

NEG = {0: 2, 1: 1, 2: 0}
NELSON = {(a, b): (2 if a < 2 else b) for a in range(3) for b in range(3)}


def heyting(a, b):
    return 2 if a <= b else b


def lit(s):
    return tuple({"0": 0, "u": 1, "1": 2}[c] for c in s)


def meet(fs, n):
    return tuple(min((f[i] for f in fs), default=2) for i in range(n))


def join(fs, n):
    return tuple(max((f[i] for f in fs), default=0) for i in range(n))


def close(fs, n):
    S = set(fs) | {(0,) * n, (2,) * n}
    while True:
        new = {tuple(NEG[v] for v in f) for f in S}
        new |= {meet([f, g], n) for f in S for g in S} | {join([f, g], n) for f in S for g in S}
        if new <= S:
            return S
        S |= new


def rough_sets(R, n):
    """R: dict i -> frozenset of successors."""
    out = set()
    for bits in product((0, 1), repeat=n):
        X = {i for i in range(n) if bits[i]}
        lo = frozenset(i for i in range(n) if R[i] <= X)
        up = frozenset(i for i in range(n) if R[i] & X)
        out.add((lo, up))
    return out


def pair_leq(p, q):
    return p[0] <= q[0] and p[1] <= q[1]


def join_irreducibles(elements, leq):
    out = []
    for x in elements:
        below = [y for y in elements if leq(y, x) and y != x]
        ubs = [z for z in elements if all(leq(y, z) for y in below)]
        lub = [z for z in ubs if all(leq(z, w) for w in ubs)]
        if not lub or lub[0] != x:
            out.append(x)
    return out


def all_relations(n):
    cells = [(i, j) for i in range(n) for j in range(n)]
    for bits in product((0, 1), repeat=len(cells)):
        yield {i: frozenset(j for (k, j), b in zip(cells, bits) if b and k == i) for i in range(n)}


def is_quasiorder(R, n):
    return all(i in R[i] for i in range(n)) and all(R[j] <= R[i] for i in range(n) for j in R[i])


def is_symmetric(R, n):
    return all(i in R[j] for i in range(n) for j in R[i])


def dual_topology(opens, n):
    full = frozenset(range(n))
    return {full - s for s in opens}
