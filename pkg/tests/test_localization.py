import pytest

from kpq.algebra import BETA, MPoly, RElem, VarId, lift, ominus, substitute
from kpq.algebra.errors import OutOfRank
from kpq.combinatorics import LieType, Partition, SimpleIndex, StrictPartition, sp
from kpq.combinatorics.partitions import Rel, apply_si
from kpq.functions import gx_finite
from kpq.functions.kinds import FnKind
from kpq.identities import beta_scaling
from kpq.localization import (
    PsiTable,
    b_mu,
    beta_minus_one,
    diagonal_value,
    gkm_check,
    localization_table,
    localize,
    pi_on_table,
    psi_table,
    rank_indices,
    sufficient_rank,
    type_a_diagonal,
)

SP = StrictPartition.of
beta = MPoly.var(BETA)


def b(i):
    return MPoly.var(VarId("b", i))


def neg_b(i):
    return ominus(0, b(i))


def test_fixed_points():
    assert b_mu(LieType.C, StrictPartition(), 3).values == (lift(0),) * 3
    assert b_mu(LieType.C, SP(5, 3, 1), 6).values == (neg_b(5), neg_b(3), neg_b(1), lift(0), lift(0), lift(0))
    assert b_mu(LieType.D, SP(5, 3, 2), 6).values[:5] == (neg_b(6), neg_b(4), neg_b(3), neg_b(1), lift(0))
    with pytest.raises(OutOfRank):
        b_mu(LieType.C, SP(4), 3)


def test_sufficient_rank():
    assert sufficient_rank(FnKind.GQ, SP(3), SP(2, 1)) == 2
    # odd length in type D brings in one extra entry
    assert sufficient_rank(FnKind.GP, SP(1), SP(1)) == 2
    assert sufficient_rank(FnKind.GP, StrictPartition(), StrictPartition()) == 1


def test_localize_examples():
    assert localize(FnKind.GP, SP(1), StrictPartition()) == lift(0)
    assert localize(FnKind.GQ, StrictPartition(), SP(2, 1)) == lift(1)
    for mu in sp(3):
        assert localize(FnKind.GB, StrictPartition(), mu) == lift(1)


def test_localize_matches_direct_substitution():
    poly = 2 * MPoly.var(VarId("x", 1)) + beta * MPoly.var(VarId("x", 1)) ** 2
    assert substitute(poly, {VarId("x", 1): neg_b(1)}) == localize(FnKind.GQ, SP(1), SP(1))


def test_localize_is_rank_independent():
    for lam, mu in ((SP(1), SP(2)), (SP(2, 1), SP(2, 1)), (SP(2), SP(3, 1))):
        low = localize(FnKind.GC, lam, mu)
        assert localize(FnKind.GC, lam, mu, 4) == low


@pytest.mark.parametrize("kind", [FnKind.GB, FnKind.GC, FnKind.GD, FnKind.GP, FnKind.GQ])
def test_vanishing_and_diagonal_small(kind):
    type_ = {FnKind.GP: LieType.D, FnKind.GQ: LieType.C}.get(kind) or LieType(kind.name[1])
    for lam in sp(3):
        for mu in sp(3):
            v = localize(kind, lam, mu)
            if not lam.contained_in(mu):
                assert v == lift(0)
            elif lam == mu:
                assert v == diagonal_value(type_, lam)


def test_type_a_vanishing_and_diagonal():
    shapes = [p for p in (Partition(()), Partition.of(1), Partition.of(2), Partition.of(1, 1), Partition.of(2, 1))]
    for lam in shapes:
        for mu in shapes:
            v = localize(FnKind.GA, lam, mu, 2)
            if not lam.contained_in(mu):
                assert v == lift(0)
            elif lam == mu:
                assert v == type_a_diagonal(lam, 2)


def test_psi_table_basics():
    table = psi_table(LieType.C, 3)
    for mu in table.shapes:
        assert table[StrictPartition(), mu] == lift(1)
    for lam in table.shapes:
        assert table[lam, lam] == diagonal_value(LieType.C, lam)


@pytest.mark.parametrize("type_", [LieType.B, LieType.C, LieType.D])
def test_table_equals_localization(type_):
    for n in (1, 2, 3):
        table = psi_table(type_, n)
        assert table.mismatches(localization_table(type_, n)) == []
        assert table.mismatches(psi_table(type_, n, largest=True)) == []


def test_gkm_detector():
    table = psi_table(LieType.C, 3)
    assert gkm_check(table).ok
    ones = PsiTable(LieType.C, 2, {(lam, mu): lift(1) for lam in sp(2) for mu in sp(2)})
    assert gkm_check(ones).ok
    bad_key = (SP(1), SP(2))
    corrupted = dict(table.entries)
    corrupted[bad_key] = corrupted[bad_key] + lift(b(3))
    report = gkm_check(PsiTable(LieType.C, 3, corrupted))
    assert not report.ok
    assert all(e.lam == SP(1) for e in report.failures())
    assert any(e.mu == SP(2) for e in report.failures())


@pytest.mark.parametrize("type_", [LieType.B, LieType.C, LieType.D])
def test_pi_on_table(type_):
    n = 3
    table = psi_table(type_, n)
    for i in rank_indices(type_, n):
        out = pi_on_table(table, i)
        for mu in table.shapes:
            assert out[StrictPartition(), mu] == -beta * table[StrictPartition(), mu]
        for lam in table.shapes:
            low, rel = apply_si(lam, i, type_)
            if rel == Rel.LOWER:
                assert out.row(lam) == table.row(low)
        twice = pi_on_table(out, i)
        assert twice.mismatches(out.map(lambda v: -beta * v)) == []


def test_beta_minus_one():
    x = MPoly.var(VarId("x", 1))
    assert beta_minus_one(2 * x + beta * x * x) == 2 * x - x * x
    assert beta_minus_one(gx_finite(FnKind.GQ, SP(1), 1)) == 2 * x - x * x
    v = beta_minus_one(neg_b(1))
    assert v == lift(-b(1)) / lift(1 - b(1))
    table = beta_minus_one(psi_table(LieType.C, 1))
    assert isinstance(table[SP(1), SP(1)], RElem)


def test_scaling_identity():
    for lam in (SP(1), SP(2)):
        assert beta_scaling(lam, 2)
        assert beta_scaling(lam, 2, doubled=True)


def test_descent_choice_does_not_matter_on_pi():
    table = psi_table(LieType.D, 2)
    assert pi_on_table(table, SimpleIndex(1, True)).mismatches(pi_on_table(psi_table(LieType.D, 2, largest=True), SimpleIndex(1, True))) == []
