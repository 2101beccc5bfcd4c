"""Reference values for the worked examples on U = {a, b, c}."""
from tvrough.family import FunctionFamily
from tvrough.pairs import ApproxPair
from tvrough.relspace import Relation
from tvrough.tvfunc import TvFunction
from tvrough.universe import Universe

ABC = Universe.of("a", "b", "c")


def pair(lo: str, up: str) -> ApproxPair:
    return ApproxPair.of(ABC, lo, up)


def fn(lits: str) -> TvFunction:
    return TvFunction.from_literals(ABC, lits)


# equivalence with classes {a}, {b,c}
EQUIVALENCE = Relation.from_partition(ABC, [["a"], ["b", "c"]])
EQUIVALENCE_PAIRS = {pair("", ""), pair("a", "a"), pair("", "bc"), pair("a", "abc"), pair("bc", "bc"), pair("abc", "abc")}
EQUIVALENCE_FUNCTIONS = {fn(s) for s in ("000", "100", "0uu", "1uu", "011", "111")}

# counterexample family f1..f7
COUNTER = {i: fn(s) for i, s in enumerate(("000", "uu0", "00u", "uuu", "11u", "uu1", "111"), start=1)}
COUNTER_FAMILY = FunctionFamily(ABC, tuple(COUNTER.values()))
COUNTER_THETA = [{1, 2, 3, 4}, {5}, {6}, {7}]

# quasiorder [a) = {a,b}, [b) = {b}, [c) = {b,c}
QUASIORDER_V = Relation.from_adjacency(ABC, {"a": "ab", "b": "b", "c": "bc"})
QUASIORDER_V_PAIRS = {
    pair("", ""), pair("", "a"), pair("", "c"), pair("", "ac"),
    pair("b", "abc"), pair("ab", "abc"), pair("bc", "abc"), pair("abc", "abc"),
}
QUASIORDER_V_FUNCTIONS = {fn(s) for s in ("000", "u00", "00u", "u0u", "u1u", "11u", "u11", "111")}

# alternative approximations on [a) = {a}, [b) = {a,b}, [c) = U
CHAIN_QUASIORDER = Relation.from_adjacency(ABC, {"a": "a", "b": "ab", "c": "abc"})
CHAIN_TOPOLOGY = [set(), {"a"}, {"a", "b"}, {"a", "b", "c"}]
CHAIN_PAIRS = {
    pair("", ""), pair("a", "a"), pair("", "ab"), pair("", "abc"),
    pair("ab", "ab"), pair("a", "abc"), pair("abc", "abc"),
}
CHAIN_UPPER_BOUNDS = {pair("ab", "ab"), pair("a", "abc")}

# tolerance R(a) = {a,b}, R(b) = U, R(c) = {b,c}
TOLERANCE = Relation.from_adjacency(ABC, {"a": "ab", "b": "abc", "c": "bc"})
