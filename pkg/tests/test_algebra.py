import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kpq.algebra import (
    BETA,
    MPoly,
    RElem,
    SquareSkewMatrix,
    VarId,
    determinant,
    factor_tracked,
    factorial_power,
    lift,
    ominus,
    oplus,
    parse,
    pfaffian,
    substitute,
    symmetrize,
)
from kpq.algebra.errors import DivisionByZero

from .strategies import polys

beta = MPoly.var(BETA)
x1, x2, x3 = (MPoly.var(VarId("x", i)) for i in (1, 2, 3))
b1, b2 = MPoly.var(VarId("b", 1)), MPoly.var(VarId("b", 2))
t = MPoly.var(VarId("t", 1))


def test_canonical_text():
    assert str(2 * x1 + beta * x1 * x1) == "2*x1 + beta*x1^2"
    assert str(MPoly()) == "0"
    assert str(x2 - x1) == "-x1 + x2"


@given(polys())
def test_parse_round_trip(p):
    assert parse(str(p)) == p


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p - p == MPoly()


@given(polys(), polys())
def test_exact_div_round_trip(p, q):
    if q:
        assert (p * q).exact_div(q) == p


def test_exact_div_examples():
    x, y = x1, x2
    assert (x * x - y * y).exact_div(x - y) == x + y
    assert (x + y).exact_div(x - y) is None


def test_subs_and_rename():
    p = x1 * x1 + beta * x2
    assert p.subs({VarId("x", 1): b1}) == b1 * b1 + beta * x2
    assert p.rename({VarId("x", 1): VarId("x", 2), VarId("x", 2): VarId("x", 1)}) == x2 * x2 + beta * x1


def test_group_law_examples():
    assert oplus(x1, 0) == lift(x1)
    assert oplus(b1, ominus(0, b1)) == lift(0)
    assert oplus(x1, x2) - oplus(x2, x1) == lift(0)
    assert ominus(t, t) == lift(0)
    assert ominus(0, t) == lift(-t) / lift(1 + beta * t)
    assert oplus(ominus(0, t), t) == lift(0)


@given(st.sampled_from([x1, x2, b1, t]), st.sampled_from([x1, x2, b2, t]), st.sampled_from([x3, b1, b2]))
def test_group_law_properties(a, b, c):
    assert oplus(oplus(a, b), c) == oplus(a, oplus(b, c))
    assert oplus(ominus(a, b), b) == lift(a)


def test_factorial_power():
    assert factorial_power(x1, (b1, b2), 0) == lift(1)
    assert factorial_power(x1, (b1, b2), 2) == oplus(x1, b1) * oplus(x1, b2)
    assert factorial_power(x1, (b1, b2), 1, doubled=True) == lift(2 * x1 + beta * x1 * x1)


def test_relem_canonical_form():
    a = lift(x1 - x2) / lift(1 + beta * x2)
    assert a == ominus(x1, x2)
    assert (a * lift(1 + beta * x2)).is_poly()
    assert hash(lift(x1) / lift(x1)) == hash(lift(1))
    with pytest.raises(DivisionByZero):
        lift(x1) / lift(0)


def test_factor_tracked_splits_unit_products():
    unit, factors = factor_tracked(1 + beta * b1 + beta * b2 + beta * beta * b1 * b2)
    assert unit == 1
    assert factors == {1 + beta * b1: 1, 1 + beta * b2: 1}


def test_single_variable_detection_ignores_powers():
    # beta^2 is not a variable, so 1 + beta^2 b1 stays a single factor
    q = 1 + beta * beta * b1
    _, factors = factor_tracked(q)
    assert factors == {q: 1}


def test_substitute():
    assert substitute(oplus(x1, x2).num, {VarId("x", 1): lift(t), VarId("x", 2): ominus(0, t)}) == lift(0)
    p = x1 * x1 + b1
    assert substitute(p, {}) == lift(p)


def test_symmetrize():
    assert symmetrize(x1, 2) == lift(x1 + x2)
    # sum over w of prod_{j != 1} (x1 + x_j)/(x1 - x_j) at n = 2 is 1 - (1 + beta x1)(1 + beta x2)
    f = oplus(x1, x2) / ominus(x1, x2)
    assert symmetrize(f, 2) == lift(1 - (1 + beta * x1) * (1 + beta * x2))
    assert oplus(x1, x1) / ominus(x1, t) + oplus(t, x1) / ominus(t, x1) == lift(1)


def test_pfaffian_small():
    a = MPoly.var(VarId("a", 1))
    assert pfaffian(SquareSkewMatrix.from_function(0, lambda i, j: 0)) == lift(1)
    assert pfaffian(SquareSkewMatrix.from_rows([[0, a], [-a, 0]])) == lift(a)


@given(st.lists(st.integers(-4, 4), min_size=15, max_size=15), st.sampled_from([2, 4, 6]))
def test_pfaffian_squared_is_determinant(vals, size):
    upper = iter(vals)
    entries = {(i, j): next(upper) for i, j in itertools.combinations(range(size), 2)}
    A = SquareSkewMatrix.from_function(size, lambda i, j: entries[i, j])
    assert pfaffian(A) ** 2 == determinant(A.dense())


def test_pfaffian_of_the_schur_matrix():
    xs = [MPoly.var(VarId("x", i)) for i in range(1, 5)]

    def entry(i, j):
        return (lift(xs[i]) - lift(xs[j])) / oplus(xs[i], xs[j])

    prod = lift(1)
    for i, j in itertools.combinations(range(4), 2):
        prod = prod * entry(i, j)
    assert pfaffian(SquareSkewMatrix.from_function(4, entry)) == prod


@pytest.mark.parametrize("text", ["", "x1 +", "x1 + - x2", "x1*", "x1^", "x1 x2", "y"])
def test_parse_rejects_malformed_text(text):
    with pytest.raises(ValueError):
        parse(text)
