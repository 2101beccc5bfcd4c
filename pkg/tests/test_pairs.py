import pytest
from hypothesis import given

from tvrough import pairs as P
from tvrough.errors import InvalidPair, UniverseMismatch
from tvrough.pairs import ApproxPair, canonical, pair_op, phi, phi_inv
from tvrough.tvfunc import TvFunction, all_functions
from tvrough.universe import Universe

import laws
from strategies import function_triples

ABC = Universe.of("a", "b", "c")


def pr(lo, up, U=ABC):
    return ApproxPair.of(U, lo, up)


def test_invalid_pair():
    with pytest.raises(InvalidPair):
        pr("ab", "a")


def test_rendering_and_order():
    p = pr("a", "ab")
    assert str(p) == "({a},{a,b})"
    assert pr("", "a") <= p and not p <= pr("", "abc")
    assert canonical([p, pr("", ""), p]) == [pr("", ""), p]


def test_phi_example():
    f = TvFunction.from_literals(ABC, "1u0")
    assert phi(f) == pr("a", "ab")
    assert phi_inv(pr("a", "ab")) == f


def test_operation_formulas():
    x, y = pr("a", "ab"), pr("b", "bc")
    Ac, Bc = x.lower.complement(), x.upper.complement()
    assert P.neg(x) == ApproxPair(Bc, Ac)
    assert P.nec(x) == ApproxPair(x.lower, x.lower)
    assert P.poss(x) == ApproxPair(x.upper, x.upper)
    assert P.star(x) == ApproxPair(Bc, Bc)
    assert P.plus(x) == ApproxPair(Ac, Ac)
    assert P.nelson(x, y) == ApproxPair(Ac | y.lower, Ac | y.upper)
    assert P.heyting(x, y) == ApproxPair(Bc | y.lower | (Ac & y.upper), Bc | y.upper)


def test_pair_op_dispatch_errors():
    x = pr("a", "ab")
    with pytest.raises(ValueError):
        pair_op("meet", x)
    with pytest.raises(UniverseMismatch):
        pair_op("meet", x, ApproxPair.of(Universe.of("a"), "a", "a"))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_phi_bijection_and_order(n):
    U_ = Universe.canonical(n)
    fs = all_functions(U_)
    images = [phi(f) for f in fs]
    assert len(set(images)) == len(fs)
    for f in fs:
        assert phi_inv(phi(f)) == f
        for g in fs:
            assert (f <= g) == (phi(f) <= phi(g))


@pytest.mark.parametrize("n", [1, 2])
def test_pair_algebra_exhaustive(n):
    U_ = Universe.canonical(n)
    A = laws.pair_ops(U_)
    ps = [phi(f) for f in all_functions(U_)]
    for a in ps:
        for b in ps:
            for c in ps:
                assert laws.check_algebra(A, a, b, c) == []


@given(function_triples)
def test_pair_algebra_random(fgh):
    f, g, h = fgh
    assert laws.check_algebra(laws.pair_ops(f.universe), phi(f), phi(g), phi(h)) == []
