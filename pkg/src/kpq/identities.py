"""Symbolic identities among the functions, checked exactly at small rank.

Every check returns a bool and has no side effects; the verification
suites and the tests call them over ranges of parameters.
"""

from __future__ import annotations

import itertools
from typing import Callable

from .algebra.mpoly import BETA, MPoly, VarId
from .algebra.pfaffian import SquareSkewMatrix, pfaffian
from .algebra.relem import RElem, lift, ominus, oplus, symmetrize
from .combinatorics.partitions import Box, Partition, StrictPartition, rho
from .functions.backends import gx_finite
from .functions.basis import expand_in_basis, reconstruct
from .functions.eyd_formula import eyd_generic_sum
from .functions.grothendieck import grothendieck_g
from .functions.hl import default_params, hl_poly
from .functions.kinds import FnKind, xs
from .functions.pfaffian_formula import pfaffian_poly

_BETA = MPoly.var(BETA)
_T = MPoly.var(VarId("t", 1))


def _op(a: MPoly, c: MPoly) -> MPoly:
    return a + c + _BETA * a * c


def _pair_ratio(xi, xj) -> RElem:
    return oplus(xi, xj) / ominus(xi, xj)


def id_c(m: int) -> bool:
    """sum_i (x_i+x_i)/(x_i-t) prod_{j!=i} (x_i+x_j)/(x_i-x_j) + prod_i (t+x_i)/(t-x_i) = 1 (formal-group +/-)."""
    x = xs(m)
    total = lift(0)
    for i in range(m):
        term = oplus(x[i], x[i]) / ominus(x[i], _T)
        for j in range(m):
            if j != i:
                term = term * _pair_ratio(x[i], x[j])
        total = total + term
    prod = lift(1)
    for i in range(m):
        prod = prod * oplus(_T, x[i]) / ominus(_T, x[i])
    return total + prod == lift(1)


def var0_iv(n: int, k: int) -> bool:
    x = xs(n)
    lhs = lift(0)
    for i in range(n):
        term = lift((1 + _BETA * x[i]) ** k)
        for j in range(n):
            if j != i:
                term = term * _pair_ratio(x[i], x[j])
        lhs = lhs + term
    pk = MPoly.const(1)
    p1 = MPoly.const(1)
    for xi in x:
        pk = pk * (1 + _BETA * xi) ** k
        p1 = p1 * (1 + _BETA * xi)
    rhs = pk - p1 if n % 2 == 0 else pk
    return lhs == lift(rhs)


def pf_schur(m: int) -> bool:
    """Pf((x_i - x_j)/(x_i + x_j)) over 2m variables equals the product of its entries."""
    x = xs(2 * m)

    def entry(i: int, j: int) -> RElem:
        return (lift(x[i]) - lift(x[j])) / oplus(x[i], x[j])

    prod = lift(1)
    for i, j in itertools.combinations(range(2 * m), 2):
        prod = prod * entry(i, j)
    return pfaffian(SquareSkewMatrix.from_function(2 * m, entry)) == prod


def staircase_product(n: int, diagonal: bool) -> MPoly:
    """prod over i<j (i<=j with the diagonal) of x_i + x_j."""
    x = xs(n)
    out = MPoly.const(1)
    for i in range(n):
        for j in range(i if diagonal else i + 1, n):
            out = out * _op(x[i], x[j])
    return out


def _shape_plus(base: StrictPartition, lam: Partition, n: int) -> StrictPartition:
    parts = [base[i] + lam[i] for i in range(1, n + 1)]
    return StrictPartition(tuple(a for a in parts if a))


def _independent_gp_gq(doubled: bool, shape: StrictPartition, n: int) -> dict[str, MPoly]:
    """GP or GQ by routes other than the determinant shortcut of the HL sum."""
    kind = FnKind.GQ if doubled else FnKind.GP
    params = default_params(kind, shape)
    out = {
        "hl-full": hl_poly(shape, n, doubled, params, full=True),
        "pf": pfaffian_poly(shape, n, doubled, params),
    }
    if doubled:
        out["eyd"] = gx_finite(FnKind.GC, shape, n, "eyd")
        out["svt"] = gx_finite(FnKind.GC, shape, n, "svt")
    return out


def factorization(n: int, lam: Partition, doubled: bool) -> bool:
    """GP_{rho_{n-1}+lam} = prod_{i<j}(x_i+x_j) G_lam and GQ_{rho_n+lam} = prod_{i<=j}(x_i+x_j) G_lam."""
    base = rho(n) if doubled else rho(n - 1)
    rhs = staircase_product(n, doubled) * grothendieck_g(lam, n)
    shape = _shape_plus(base, lam, n)
    return all(v == rhs for v in _independent_gp_gq(doubled, shape, n).values())


def staircase(n: int, doubled: bool) -> bool:
    """GP_{rho_{n-1}} and GQ_{rho_n} are the staircase products and carry no b."""
    shape = rho(n) if doubled else rho(n - 1)
    return all(v == staircase_product(n, doubled) for v in _independent_gp_gq(doubled, shape, n).values())


def _drop(F: MPoly, *idx: int) -> MPoly:
    return F.subs({VarId("x", i): 0 for i in idx})


def stability_gq(lam: StrictPartition, n: int) -> bool:
    """GQ_lam(x_1..x_{n-1}, 0 | b) = GQ_lam(x_1..x_{n-1} | b), zero when len(lam) = n."""
    lower = gx_finite(FnKind.GQ, lam, n - 1) if len(lam) <= n - 1 else MPoly()
    return _drop(gx_finite(FnKind.GQ, lam, n), n) == lower


def stability_gp(lam: StrictPartition, n: int) -> bool:
    """GP_lam(x_1..x_{n-2}, 0, 0 | b) = GP_lam(x_1..x_{n-2} | b)."""
    lower = gx_finite(FnKind.GP, lam, n - 2) if len(lam) <= n - 2 else MPoly()
    return _drop(gx_finite(FnKind.GP, lam, n), n - 1, n) == lower


def stability_gp_single_step_fails() -> bool:
    """GP_1(x_1, 0 | b) differs from GP_1(x_1 | b): one-step stability fails for GP."""
    one = StrictPartition.of(1)
    return _drop(gx_finite(FnKind.GP, one, 2), 2) != gx_finite(FnKind.GP, one, 1)


def beta_scaling(lam: StrictPartition, n: int, doubled: bool = False) -> bool:
    """(-beta)^{-|lam|} F_lam(-beta x | -beta b) = GX_lam(x | b) with F_lam the beta = -1 specialization."""
    kind = FnKind.GQ if doubled else FnKind.GP
    G = gx_finite(kind, lam, n)
    F = G.subs({BETA: -1})
    scale = -_BETA
    mapping = {v: scale * MPoly.var(v) for v in F.variables() if v.kind in ("x", "b")}
    lhs = F.subs(mapping).exact_div(scale ** lam.size)
    return lhs is not None and lhs == G


def factorial_hl_beta0(lam: StrictPartition, n: int, doubled: bool) -> MPoly:
    """The factorial P/Q function: the HL symmetrization with beta = 0 throughout."""
    x = xs(n)
    bs = [MPoly.var(VarId("b", k)) for k in range(1, lam.first() + 1)]
    r = len(lam)
    f = lift(1)
    for i, part in enumerate(lam.parts):
        p = MPoly.const(2) * x[i] if doubled else MPoly.const(1)
        for bk in bs[: part - 1 if doubled else part]:
            p = p * (x[i] + bk)
        f = f * p
        for j in range(i + 1, n):
            f = f * lift(x[i] + x[j]) / (lift(x[i]) - lift(x[j]))
    total = symmetrize(f, n)
    out = total.to_poly()
    fact = 1
    for k in range(2, n - r + 1):
        fact *= k
    q = MPoly({m: c // fact for m, c in out.terms.items()})
    if q.scale(fact) != out:
        raise ArithmeticError("(n-r)! does not divide the symmetrization")
    return q


def lowest_part_is_factorial(lam: StrictPartition, n: int, doubled: bool) -> bool:
    kind = FnKind.GQ if doubled else FnKind.GP
    return gx_finite(kind, lam, n).subs({BETA: 0}) == factorial_hl_beta0(lam, n, doubled)


def gp_expand_consistency(lam: StrictPartition) -> bool:
    """The coefficients of GP_lam(x|b) in GP_mu(x) at the least even rank carry over two ranks up."""
    n = len(lam) + (len(lam) % 2) or 2
    d = expand_in_basis(gx_finite(FnKind.GP, lam, n), FnKind.GP, n)
    up = reconstruct(d, FnKind.GP, n + 2)
    return up == lift(gx_finite(FnKind.GP, lam, n + 2))


# local equivalence of weight grids on the shifted region


def _v(kind: str, i: int) -> MPoly:
    return MPoly.var(VarId(kind, i))


def _outside(box: Box) -> MPoly:
    """A distinct free symbol for each box outside the compared region."""
    return _v("y", 16 * box[0] + box[1])


def two_column_grids(rank: int, col: int) -> tuple[Callable[[Box], MPoly], Callable[[Box], MPoly]]:
    """Columns col, col+1 (col >= rank) with row r labelled a_{rank-r}; the bottom row has a_0 = 0 on the left."""
    t = _v("t", 1)

    def grid(swap: bool) -> Callable[[Box], MPoly]:
        def g(box: Box) -> MPoly:
            r, j = box
            a = _v("a", rank - r + 1)
            if j == col:
                if r == rank:
                    return MPoly()
                return a if swap else _op(a, t)
            if j == col + 1:
                return _op(a, t) if swap else a
            return _outside(box)

        return g

    return grid(False), grid(True)


def cross_grids(n: int, i: int) -> tuple[Callable[[Box], MPoly], Callable[[Box], MPoly]]:
    """Columns i, i+1 above the diagonal and rows i, i+1 to its right, for 1 <= i < n."""
    t, c = _v("t", 1), _v("c", 1)
    ctt = _op(_op(c, t), t)

    def grid(swap: bool) -> Callable[[Box], MPoly]:
        def g(box: Box) -> MPoly:
            r, j = box
            if j in (i, i + 1) and r <= i - 1:
                b = _v("b", i - r)
                plain_left = swap
                return (b if j == i else _op(b, t)) if plain_left else (_op(b, t) if j == i else b)
            if (r, j) == (i, i):
                return c if swap else ctt
            if (r, j) == (i, i + 1):
                return _op(c, t)
            if (r, j) == (i + 1, i + 1):
                return ctt if swap else c
            if r in (i, i + 1) and j >= i + 2:
                a = _v("a", j - i - 1)
                upper = r == i
                return (a if upper else _op(a, t)) if swap else (_op(a, t) if upper else a)
            return _outside(box)

        return g

    return grid(False), grid(True)


def locally_equivalent(g1, g2, lam: StrictPartition, n: int) -> bool:
    return eyd_generic_sum(lam, g1, n) == eyd_generic_sum(lam, g2, n)
