import pytest
from hypothesis import given

from tvrough import relspace as R
from tvrough.errors import InvalidTopology, NotAQuasiorder, PreconditionError, UniverseMismatch
from tvrough.relspace import Relation, Topology
from tvrough.universe import Universe

import laws
from strategies import quasiorders, relation_with_set
from worked_examples import (
    ABC,
    EQUIVALENCE,
    EQUIVALENCE_PAIRS,
    QUASIORDER_V,
    QUASIORDER_V_PAIRS,
    CHAIN_PAIRS,
    CHAIN_QUASIORDER,
    CHAIN_TOPOLOGY,
    CHAIN_UPPER_BOUNDS,
    TOLERANCE,
    pair,
)


def test_relation_constructors_agree():
    via_pairs = Relation.from_pairs(ABC, [("a", "a"), ("b", "b"), ("b", "c"), ("c", "b"), ("c", "c")])
    assert via_pairs == EQUIVALENCE
    assert Relation.from_adjacency(ABC, {"a": ["a"]}).image("b").names == []
    assert Relation.identity(ABC).adjacency() == {"a": ["a"], "b": ["b"], "c": ["c"]}
    assert len(Relation.universal(ABC).pairs()) == 9


def test_image_preimage_inverse():
    assert QUASIORDER_V.image("a").names == ["a", "b"]
    assert QUASIORDER_V.preimage("b").names == ["a", "b", "c"]
    assert QUASIORDER_V.inverse().image("b").names == ["a", "b", "c"]
    assert QUASIORDER_V.related("c", "b") and not QUASIORDER_V.related("b", "c")


def test_predicates():
    flags = R.relation_predicates(TOLERANCE)
    assert flags.tolerance and not flags.quasiorder and not flags.transitive
    assert R.relation_predicates(EQUIVALENCE).equivalence
    empty = Relation(ABC, (0, 0, 0))
    assert not R.relation_predicates(empty).serial


def test_approximations_of_example():
    X = ABC.subset(["a", "b"])
    assert R.lower(EQUIVALENCE, X).names == ["a"]
    assert R.upper(EQUIVALENCE, X).names == ["a", "b", "c"]


def test_set_from_other_universe_rejected():
    with pytest.raises(UniverseMismatch):
        R.lower(EQUIVALENCE, Universe.of("x").full())


def test_rs_equivalence_example():
    rs = R.rs_enumerate(EQUIVALENCE)
    assert set(rs.pairs) == EQUIVALENCE_PAIRS and len(rs) == 6
    assert list(rs.pairs) == sorted(rs.pairs, key=lambda p: p.sort_key)


def test_rs_quasiorder_example():
    assert set(R.rs_enumerate(QUASIORDER_V).pairs) == QUASIORDER_V_PAIRS


def test_rs_requires_serial():
    with pytest.raises(PreconditionError):
        R.rs_enumerate(Relation(ABC, (0b001, 0, 0)))


def test_quasiorder_counts():
    counts = [sum(1 for _ in R.quasiorders(Universe.canonical(n))) for n in range(1, 5)]
    assert counts == [1, 4, 29, 355]


def test_closure():
    r = Relation.from_adjacency(ABC, {"a": ["b"], "b": ["c"]})
    c = R.reflexive_transitive_closure(r)
    assert R.is_quasiorder(c)
    assert c.image("a").names == ["a", "b", "c"]
    with pytest.raises(NotAQuasiorder):
        R.require_quasiorder(r)


def test_topology_validation():
    with pytest.raises(InvalidTopology):
        Topology.from_sets(ABC, [[], ["a"], ["b"], ["a", "b", "c"]])
    t = Topology.from_sets(ABC, [[], ["a"], ["a", "b"], ["a", "b", "c"]])
    assert R.quasiorder_from_topology(t) == CHAIN_QUASIORDER


def test_chain_topology():
    opens = R.topology_from_quasiorder(CHAIN_QUASIORDER).open_sets()
    assert sorted(set(s) for s in opens) == sorted(CHAIN_TOPOLOGY)


def test_chain_alternative_pairs_not_lattice():
    ps = R.rs_alt(CHAIN_QUASIORDER)
    assert set(ps) == CHAIN_PAIRS
    check = R.is_lattice(ps)
    assert not check
    assert check.witness["kind"] == "join"
    assert set(check.witness["pair"]) == {pair("a", "a"), pair("", "ab")}
    assert set(check.witness["minimal_upper_bounds"]) == CHAIN_UPPER_BOUNDS


def test_ganter_mode_lands_in_dual_topology():
    r = CHAIN_QUASIORDER
    dual = R.dual_topology(R.topology_from_quasiorder(r))
    for X in ABC.subsets():
        p = R.approx_alt(r, X, "ganter")
        assert p.lower.mask in dual.opens and p.upper.mask in dual.opens


def test_alt_mode_validation():
    with pytest.raises(ValueError):
        R.rs_alt(CHAIN_QUASIORDER, "nope")
    with pytest.raises(NotAQuasiorder):
        R.rs_alt(TOLERANCE)


def test_rs_of_quasiorder_is_lattice():
    assert R.is_lattice(R.rs_enumerate(QUASIORDER_V).pairs)


def test_join_irreducibles_formula():
    js = R.rs_join_irreducibles(QUASIORDER_V)
    assert js == R.brute_force_join_irreducibles(list(R.rs_enumerate(QUASIORDER_V).pairs))
    assert len(js) == 5


def test_singleton_points():
    assert R.singleton_points(QUASIORDER_V).names == ["b"]
    assert R.singleton_points(EQUIVALENCE).names == ["a"]


def test_tolerance_c3_witness():
    check = R.check_c3_relational(TOLERANCE)
    assert not check
    assert check.witness["X"].names == ["a", "b"]
    assert check.witness["Y"].names == ["a"]


def test_c3_relational_holds_for_quasiorders():
    for r in R.quasiorders(ABC):
        assert R.check_c3_relational(r)


def test_c3_relational_requires_reflexive():
    with pytest.raises(PreconditionError):
        R.check_c3_relational(Relation(ABC, (0b010, 0b001, 0b100)))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_quasiorder_laws_exhaustive(n):
    U_ = Universe.canonical(n)
    for r in R.quasiorders(U_):
        assert [name for name, law in laws.QUASIORDER_LAWS.items() if not law(r)] == []
        assert laws.topology_law(R.topology_from_quasiorder(r))


@pytest.mark.parametrize("n", [1, 2])
def test_relation_laws_exhaustive(n):
    U_ = Universe.canonical(n)
    for r in laws._all_relations(U_):
        for X in U_.subsets():
            assert laws.check_relation(r, X) == []


@given(relation_with_set)
def test_relation_laws_random(rx):
    r, X = rx
    assert laws.check_relation(r, X) == []


@given(quasiorders)
def test_quasiorder_laws_random(r):
    assert laws.check_relation(r, r.universe.empty()) == []
