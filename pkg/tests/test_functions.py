import pytest
from hypothesis import given
from hypothesis import strategies as st

from kpq.algebra import BETA, MPoly, VarId, lift, oplus
from kpq.algebra.errors import RankTooSmall
from kpq.combinatorics import ExcitedDiagram, EydVariant, LieType, Partition, SimpleIndex, StrictPartition, simple_indices, strict_partitions_in
from kpq.combinatorics.partitions import rho
from kpq.functions import (
    all_backends,
    divided_difference,
    expected_pi,
    grothendieck_g,
    gx_finite,
    hl_backend,
    pi_twice,
    typeA_eyd,
)
from kpq.functions.basis import is_symmetric
from kpq.functions.eyd_formula import diagram_weight, eyd_generic_sum, wt
from kpq.functions.kinds import FnKind
from kpq.identities import staircase_product

SP = StrictPartition.of
beta = MPoly.var(BETA)


def x(i):
    return MPoly.var(VarId("x", i))


def b(i):
    return MPoly.var(VarId("b", i))


def op(a, c):
    return a + c + beta * a * c


def test_one_box_values():
    assert gx_finite(FnKind.GQ, SP(1), 1) == 2 * x(1) + beta * x(1) ** 2
    assert gx_finite(FnKind.GC, SP(1), 1) == 2 * x(1) + beta * x(1) ** 2
    assert gx_finite(FnKind.GB, SP(1), 1) == x(1)
    assert gx_finite(FnKind.GP, SP(1), 1) == op(x(1), b(1))
    assert gx_finite(FnKind.GP, SP(1), 2) == op(x(1), x(2))


def test_hl_backend_special_values():
    zero = [0] * 4
    for m in (1, 2, 3):
        assert hl_backend(FnKind.GP, SP(m), [x(1)], zero) == lift(x(1) ** m)
    assert hl_backend(FnKind.GP, SP(1), [x(1), x(2)], zero) == oplus(x(1), x(2))
    assert hl_backend(FnKind.GP, SP(1), [x(1)], [b(1), b(2)]) == oplus(x(1), b(1))


def test_empty_shape_is_one():
    for kind in (FnKind.GP, FnKind.GQ, FnKind.GB, FnKind.GC, FnKind.GD):
        for n in (1, 2, 3):
            assert all(p == MPoly.const(1) for p in all_backends(kind, StrictPartition(), n).values())


def test_rank_too_small():
    with pytest.raises(RankTooSmall):
        gx_finite(FnKind.GQ, SP(2, 1), 1)


def test_staircase_by_excited_diagrams():
    for n in (1, 2, 3):
        assert gx_finite(FnKind.GQ, rho(n), n, "eyd") == staircase_product(n, True)


def test_type_d_odd_rank_pads_a_zero():
    for lam in (SP(1), SP(2, 1)):
        wide = gx_finite(FnKind.GD, lam, 4)
        assert gx_finite(FnKind.GD, lam, 3) == wide.subs({VarId("x", 4): 0})


@pytest.mark.parametrize("kind", [FnKind.GB, FnKind.GC, FnKind.GD, FnKind.GP, FnKind.GQ])
def test_backends_agree_small(kind):
    for n in (1, 2, 3):
        for lam in strict_partitions_in(SP(3, 1)):
            if len(lam) <= n:
                outs = all_backends(kind, lam, n)
                assert len(set(outs.values())) == 1, (kind, lam, n, sorted(outs))


@given(st.sampled_from(list(strict_partitions_in(SP(3, 2)))), st.sampled_from([FnKind.GP, FnKind.GQ, FnKind.GB]))
def test_outputs_are_symmetric_and_positive(lam, kind):
    n = 3 if len(lam) <= 3 else 4
    F = gx_finite(kind, lam, n)
    assert is_symmetric(F, n)
    assert all(c > 0 for c in F.terms.values())


def test_grothendieck_examples():
    assert grothendieck_g(Partition(()), 2) == MPoly.const(1)
    g1 = grothendieck_g(Partition.of(1), 2)
    assert g1.subs({BETA: 0, VarId("b", 1): 0, VarId("b", 2): 0}) == x(1) + x(2)
    assert grothendieck_g(Partition.of(1), 1) == op(x(1), b(1))


def test_type_a_excited_diagrams_match():
    for n in (1, 2):
        for lam in (Partition(()), Partition.of(1), Partition.of(2), Partition.of(1, 1), Partition.of(2, 1), Partition.of(2, 2)):
            if len(lam) <= n:
                assert typeA_eyd(lam, n) == grothendieck_g(lam, n)


def test_weight_grid_type_c():
    assert wt(LieType.C, (1, 5), 4) == op(x(1), b(1))
    assert wt(LieType.C, (2, 3), 4) == op(x(2), x(3))


def test_example_diagram_weights():
    D = ExcitedDiagram(frozenset({(1, 1), (1, 2), (2, 4), (4, 4), (4, 5), (3, 6)}), 4)

    def grid(type_):
        return lambda box, broken: lift(wt(type_, box, 4, broken))

    def one(p):
        return 1 + beta * p

    wc = (
        op(x(1), x(1)) * op(x(1), x(2)) * op(x(2), x(4)) * one(op(x(1), x(3))) * op(x(3), b(2))
        * one(op(x(2), b(1))) * op(x(4), x(4)) * one(op(x(2), x(2))) * one(op(x(3), x(3))) * op(x(4), b(1))
    )
    assert diagram_weight(D, grid(LieType.C)) == lift(wc)
    DII = ExcitedDiagram(D.boxes, 4, EydVariant.II)
    wd = (
        op(x(1), x(2)) * op(x(1), x(3)) * op(x(2), b(1)) * one(op(x(1), x(4))) * op(x(3), b(3))
        * one(op(x(2), b(2))) * op(x(4), b(1)) * one(op(x(2), x(3))) * op(x(4), b(2))
    )
    assert diagram_weight(DII, grid(LieType.D)) == lift(wd)


def test_generic_sum_zero_grid():
    assert eyd_generic_sum(SP(2, 1), lambda box: 0, 2) == lift(0)


def test_divided_difference_examples():
    for i in (SimpleIndex(1), SimpleIndex(2)):
        assert divided_difference(FnKind.GC, StrictPartition(), i, 2) == -beta
    assert divided_difference(FnKind.GC, SP(3, 1), SimpleIndex(2), 3) == gx_finite(FnKind.GC, SP(2, 1), 3)


@pytest.mark.parametrize("kind,n", [(FnKind.GC, 2), (FnKind.GB, 2), (FnKind.GD, 2)])
def test_pi_trichotomy_and_square(kind, n):
    type_ = {FnKind.GC: LieType.C, FnKind.GB: LieType.B, FnKind.GD: LieType.D}[kind]
    for lam in strict_partitions_in(SP(2, 1)):
        if len(lam) > n:
            continue
        for i in simple_indices(type_, 2):
            got = divided_difference(kind, lam, i, n, "hl", "eyd")
            assert got == expected_pi(kind, lam, i, n)
            assert pi_twice(kind, lam, i, n, "hl", "eyd") == -beta * got
