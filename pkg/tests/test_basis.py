import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kpq.algebra import BETA, MPoly, VarId, lift, substitute
from kpq.algebra.errors import NotInSpan, NotSymmetric
from kpq.combinatorics import LieType, Partition, StrictPartition, sp
from kpq.functions import cancellation_check, expand_in_basis, gx_finite, reconstruct, structure_constants
from kpq.functions.basis import basis_element
from kpq.functions.grothendieck import grothendieck_g
from kpq.functions.kinds import FnKind
from kpq.identities import staircase_product
from kpq.localization import psi_table, structure_constants_from_table

SP = StrictPartition.of
beta = MPoly.var(BETA)


def x(i):
    return MPoly.var(VarId("x", i))


def at_beta0(coeffs):
    out = {s: c.subs({BETA: 0}) for s, c in coeffs.items()}
    return {s: c for s, c in out.items() if c}


def test_basis_element_expands_to_itself():
    for kind in (FnKind.GP, FnKind.GQ):
        for lam in (SP(1), SP(2, 1), SP(3, 1)):
            assert expand_in_basis(basis_element(kind, lam, 3, False), kind, 3) == {lam: MPoly.const(1)}


def test_factorization_expands_to_one_term():
    # GP_{rho_{n-1}} G_lam is GP_{rho_{n-1}+lam}
    n = 3
    for lam, shape in ((Partition.of(1), SP(3, 1)), (Partition.of(2, 1), SP(4, 2))):
        F = staircase_product(n, False) * grothendieck_g(lam, n).subs({VarId("b", k): 0 for k in range(1, 6)})
        assert expand_in_basis(F, FnKind.GP, n) == {shape: MPoly.const(1)}


def test_p1_squared_in_two_variables():
    # at beta = 0: P_1^2 = (x1 + x2)^2 = P_2 by the symmetrization formula
    P1 = x(1) + x(2)
    P2 = (x(1) + x(2)) ** 2
    assert P1 * P1 == P2
    assert at_beta0(structure_constants(FnKind.GP, SP(1), SP(1), 2)) == {SP(2): MPoly.const(1)}


def test_q1_squared_in_three_variables():
    # brute force at beta = 0: Q_1^2 = 2 Q_2 as polynomials
    Q1 = gx_finite(FnKind.GQ, SP(1), 3).subs({BETA: 0, VarId("b", 1): 0, VarId("b", 2): 0})
    Q2 = gx_finite(FnKind.GQ, SP(2), 3).subs({BETA: 0, VarId("b", 1): 0, VarId("b", 2): 0, VarId("b", 3): 0})
    assert Q1 * Q1 == 2 * Q2
    assert at_beta0(structure_constants(FnKind.GQ, SP(1), SP(1), 3)) == {SP(2): MPoly.const(2)}


def test_unit_structure_constants():
    assert structure_constants(FnKind.GP, StrictPartition(), SP(2, 1), 3) == {SP(2, 1): MPoly.const(1)}


@given(st.integers(0, 2**32 - 1), st.sampled_from([FnKind.GP, FnKind.GQ, FnKind.GA]), st.integers(1, 3))
def test_round_trip(seed, kind, n):
    rng = random.Random(seed)
    if kind == FnKind.GA:
        shapes = [Partition.of(1), Partition.of(2), Partition.of(1, 1), Partition.of(2, 1)]
    else:
        shapes = [SP(1), SP(2), SP(2, 1), SP(3), SP(3, 1)]
    shapes = [s for s in shapes if len(s) <= n]
    coeffs = {}
    for s in rng.sample(shapes, rng.randint(1, len(shapes))):
        c = sum((rng.randint(-3, 3) * beta**d for d in range(3)), MPoly())
        if c:
            coeffs[s] = c
    F = reconstruct(coeffs, kind, n).to_poly()
    assert expand_in_basis(F, kind, n) == coeffs


def test_membership_checks():
    for n in (1, 2, 3):
        for lam in sp(3):
            if len(lam) <= n:
                assert cancellation_check(gx_finite(FnKind.GP, lam, n), n)
                assert cancellation_check(gx_finite(FnKind.GQ, lam, n), n, plus_variant=True)
    e2 = x(1) * x(2) + x(1) * x(3) + x(2) * x(3)
    assert not cancellation_check(e2, 3)
    # GP_1 lacks the t (+) t divisibility
    assert not cancellation_check(gx_finite(FnKind.GP, SP(1), 2), 2, plus_variant=True)


def test_rejects_non_members():
    with pytest.raises(NotSymmetric):
        expand_in_basis(x(1), FnKind.GP, 2)
    with pytest.raises(NotInSpan):
        expand_in_basis(x(1) * x(2), FnKind.GP, 2)


def test_expansion_with_parameters_in_coefficients():
    # GP_lam(x|b) in the GP_mu(x) basis carries b in the coefficients
    F = gx_finite(FnKind.GP, SP(2), 2)
    d = expand_in_basis(F, FnKind.GP, 2)
    assert reconstruct(d, FnKind.GP, 2) == lift(F)
    assert any(v.kind == "b" for c in d.values() for v in c.variables())


def _at_b0(v):
    return substitute(v, {VarId("b", k): 0 for k in range(1, 8)})


@pytest.mark.parametrize(
    "type_,kind,n,pairs",
    [
        (LieType.C, FnKind.GC, 2, [(SP(1), SP(1)), (SP(1), SP(2)), (SP(2), SP(2))]),
        (LieType.B, FnKind.GB, 2, [(SP(1), SP(1)), (SP(1), SP(2, 1))]),
        (LieType.D, FnKind.GD, 2, [(SP(1), SP(1)), (SP(1), SP(2))]),
        (LieType.C, FnKind.GC, 3, [(SP(1), SP(2)), (SP(2, 1), SP(1))]),
    ],
)
def test_structure_constants_two_routes(type_, kind, n, pairs):
    # the triangular solve on the restriction table, at b = 0, against the monomial expansion
    table = psi_table(type_, n)
    rank = n + 1 if type_ == LieType.D else n
    for lam, mu in pairs:
        a = {k: _at_b0(v) for k, v in structure_constants_from_table(table, lam, mu).items()}
        a = {k: v for k, v in a.items() if v}
        b = {k: lift(v) for k, v in structure_constants(kind, lam, mu, rank).items() if k in table.shapes}
        assert a == b


def test_equivariant_structure_constants_match_table():
    table = psi_table(LieType.C, 2)
    eq = structure_constants(FnKind.GQ, SP(1), SP(1), 2, equivariant=True)
    tab = structure_constants_from_table(table, SP(1), SP(1))
    for nu in table.shapes:
        assert eq.get(nu, lift(0)) == tab.get(nu, lift(0))
    # shapes beyond the staircase carry their own coefficients
    assert set(eq) - set(table.shapes) == {SP(3), SP(3, 1)}
