"""Term orders against a definition-level reference comparator."""

import itertools

import pytest

from secmat import DEGLEX, DEGREVLEX, LEX, PowerProduct, Ring, TermOrder, compare
from secmat.errors import RingMismatchError


def reference_degrevlex(a, b):
    """Straight from the definition: degree first, then the last nonzero
    entry of a-b read from the back, with a negative entry meaning a wins."""
    if sum(a) != sum(b):
        return -1 if sum(a) < sum(b) else 1
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return 1 if x < y else -1
    return 0


def reference_lex(a, b):
    for x, y in zip(a, b):
        if x != y:
            return -1 if x < y else 1
    return 0


def reference_deglex(a, b):
    if sum(a) != sum(b):
        return -1 if sum(a) < sum(b) else 1
    return reference_lex(a, b)


def monomials(n, degree):
    """All exponent vectors of the given degree in n variables."""
    if n == 1:
        return [(degree,)]
    out = []
    for e in range(degree + 1):
        out.extend((e,) + rest for rest in monomials(n - 1, degree - e))
    return out


def monomials_up_to(n, degree):
    return [t for d in range(degree + 1) for t in monomials(n, d)]


REFERENCES = {
    DEGREVLEX: reference_degrevlex,
    LEX: reference_lex,
    DEGLEX: reference_deglex,
}


@pytest.mark.parametrize("order", [DEGREVLEX, LEX, DEGLEX])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_compare_matches_reference(order, n):
    pool = monomials_up_to(n, 4)
    ref = REFERENCES[order]
    for a in pool:
        for b in pool:
            assert compare(PowerProduct(a), PowerProduct(b), order) == ref(a, b)


def test_degrevlex_spot_checks():
    # degree-2 monomials in three variables, against the reference table
    x2, xy, xz, y2, yz, z2 = (
        (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2),
    )
    assert compare(PowerProduct(x2), PowerProduct(xy), DEGREVLEX) == 1
    assert compare(PowerProduct(xz), PowerProduct(y2), DEGREVLEX) == -1
    table = sorted(monomials(3, 2), key=DEGREVLEX.sort_key, reverse=True)
    assert table == [x2, xy, y2, xz, yz, z2]


@pytest.mark.parametrize("order", [DEGREVLEX, LEX, DEGLEX])
def test_reflexivity(order):
    t = PowerProduct((1, 2, 0))
    assert compare(t, t, order) == 0


@pytest.mark.parametrize("order", [DEGREVLEX, LEX, DEGLEX])
def test_strict_total_order(order):
    pool = [PowerProduct(t) for t in monomials_up_to(3, 3)]
    key = order.sort_key
    ranked = sorted(pool, key=key)
    # totality and antisymmetry: all keys distinct
    assert len({key(t) for t in pool}) == len(pool)
    # transitivity via sortedness: every adjacent pair strictly increasing
    for a, b in zip(ranked, ranked[1:]):
        assert compare(a, b, order) == -1


@pytest.mark.parametrize("order", [DEGREVLEX, LEX, DEGLEX])
def test_multiplicative(order):
    pool = [PowerProduct(t) for t in monomials_up_to(3, 3)]
    factors = [PowerProduct(t) for t in monomials_up_to(3, 2)]
    for a, b in itertools.combinations(pool, 2):
        expected = compare(a, b, order)
        for c in factors:
            assert compare(a.times(c), b.times(c), order) == expected


@pytest.mark.parametrize("order", [DEGREVLEX, DEGLEX])
def test_degree_compatible(order):
    for a in monomials_up_to(3, 3):
        for b in monomials_up_to(3, 3):
            if sum(a) < sum(b):
                assert compare(PowerProduct(a), PowerProduct(b), order) == -1


def test_arity_mismatch_rejected():
    with pytest.raises(RingMismatchError):
        compare(PowerProduct((1, 0)), PowerProduct((1, 0, 0)), DEGREVLEX)


def test_power_product_ops():
    a = PowerProduct((2, 1, 0))
    b = PowerProduct((1, 1, 1))
    assert a.degree == 3
    assert a.lcm(b) == (2, 1, 1)
    assert a.gcd(b) == (1, 1, 0)
    assert b.divides(a.lcm(b))
    assert not a.divides(b)
    assert a.times(b) == (3, 2, 1)
    assert a.lcm(b).divided_by(a) == (0, 0, 1)
    assert a.support() == (0, 1)
    with pytest.raises(ValueError):
        PowerProduct((1, -1))


def test_ring_validation():
    with pytest.raises(ValueError):
        Ring(())
    with pytest.raises(ValueError):
        Ring(("x", "x"))
    ring = Ring.of("x", "y", "z")
    assert ring.arity == 3
    assert ring.index("y") == 1
    assert ring.first_variables(2).variables == ("x", "y")
    with pytest.raises(KeyError):
        ring.index("q")
    assert TermOrder.from_name("DegRevLex") is DEGREVLEX
    with pytest.raises(ValueError):
        TermOrder.from_name("weighted")
