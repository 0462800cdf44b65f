import pytest

from kpq import identities as ids
from kpq.algebra import BETA, MPoly, VarId, lift, ominus, oplus
from kpq.combinatorics import Partition, StrictPartition, strict_partitions_in
from kpq.combinatorics.partitions import partitions_in, rho
from kpq.functions import gx_finite
from kpq.functions.kinds import FnKind

SP = StrictPartition.of
beta = MPoly.var(BETA)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_id_c(m):
    assert ids.id_c(m)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("k", [0, 1, 2])
def test_var0(n, k):
    assert ids.var0_iv(n, k)


def test_var0_parity_matters():
    # at n = 2 the symmetrized sum is not the constant 1
    x = [MPoly.var(VarId("x", i)) for i in (1, 2)]
    lhs = oplus(x[0], x[1]) / ominus(x[0], x[1]) + oplus(x[1], x[0]) / ominus(x[1], x[0])
    assert lhs != lift(1)


def test_pf_schur():
    assert ids.pf_schur(2)


@pytest.mark.parametrize("doubled", [False, True])
def test_factorization(doubled):
    box = Partition.of(2, 2)
    for n in (1, 2, 3):
        assert ids.staircase(n, doubled)
        for lam in partitions_in(n, 2):
            if lam.contained_in(box):
                assert ids.factorization(n, lam, doubled)


def test_staircase_is_free_of_parameters():
    for n in (2, 3):
        F = gx_finite(FnKind.GP, rho(n - 1), n)
        assert not any(v.kind == "b" for v in F.variables())


def test_factorization_detects_a_wrong_factor():
    n = 2
    wrong = ids.staircase_product(n, True) * MPoly.var(VarId("x", 1))
    shape = SP(2)
    assert gx_finite(FnKind.GP, shape, n) != wrong


def test_stability():
    for lam in strict_partitions_in(rho(3)):
        for n in (2, 3):
            if len(lam) <= n:
                assert ids.stability_gq(lam, n)
        for n in (3, 4):
            if len(lam) <= n and lam.size <= 4:
                assert ids.stability_gp(lam, n)
    assert ids.stability_gp_single_step_fails()


@pytest.mark.parametrize("lam", [SP(1), SP(2), SP(2, 1)])
def test_beta_scaling(lam):
    assert ids.beta_scaling(lam, 2)
    assert ids.beta_scaling(lam, 2, doubled=True)


@pytest.mark.parametrize("lam", [SP(1), SP(2), SP(2, 1), SP(3, 1)])
@pytest.mark.parametrize("doubled", [False, True])
def test_lowest_part_is_the_factorial_function(lam, doubled):
    for n in (2, 3):
        if len(lam) <= n:
            assert ids.lowest_part_is_factorial(lam, n, doubled)


@pytest.mark.parametrize("lam", [SP(1), SP(2), SP(2, 1), SP(3)])
def test_gp_expansion_is_stable(lam):
    assert ids.gp_expand_consistency(lam)


def test_two_column_grids():
    for rank in (1, 2, 3):
        bound = StrictPartition(tuple(range(rank + 2, 2, -1)))
        for col in (rank, rank + 1):
            g1, g2 = ids.two_column_grids(rank, col)
            for lam in strict_partitions_in(bound):
                if len(lam) <= rank:
                    assert ids.locally_equivalent(g1, g2, lam, rank)


def test_cross_grids():
    for n in (2, 3):
        for i in range(1, n):
            g1, g2 = ids.cross_grids(n, i)
            for lam in strict_partitions_in(StrictPartition(tuple(range(n + 1, 2, -1)))):
                if len(lam) <= n:
                    assert ids.locally_equivalent(g1, g2, lam, n)


def test_worked_example_shapes():
    g1, g2 = ids.cross_grids(2, 1)
    for lam in (SP(3), SP(2)):
        assert ids.locally_equivalent(g1, g2, lam, 2)


def test_corrupted_grid_is_detected():
    g1, g2 = ids.cross_grids(2, 1)
    c = MPoly.var(VarId("c", 1))

    # the plain grid holds c(+)t(+)t at (1,1); replacing it with c breaks equivalence
    def corrupted(box):
        return c if box == (1, 1) else g1(box)

    assert g1((1, 1)) != c
    assert not ids.locally_equivalent(g1, corrupted, SP(2, 1), 2)
