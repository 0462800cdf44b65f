"""GP and GQ as a ratio of Pfaffians."""

from __future__ import annotations

from typing import Sequence

from ..algebra.errors import NotPolynomial, RankTooLarge
from ..algebra.mpoly import BETA, MPoly
from ..algebra.pfaffian import SquareSkewMatrix, pfaffian
from ..algebra.relem import RElem, lift, oplus
from ..combinatorics.partitions import StrictPartition
from .hl import _fpow, _op
from .kinds import xs as xvars

_BETA = MPoly.var(BETA)
MAX_RANK = 6


def a0_entry(xi, xj) -> RElem:
    return (lift(xi) - lift(xj)) / oplus(xi, xj)


def pf0(n: int) -> RElem:
    x = list(xvars(n))
    if n % 2:
        x.append(MPoly())
    k = len(x)
    return pfaffian(SquareSkewMatrix.from_function(k, lambda i, j: a0_entry(x[i], x[j])))


def pfaffian_poly(lam: StrictPartition, n: int, doubled: bool, params: Sequence[MPoly]) -> MPoly:
    """prod(1+beta x_i)^m * Pf(A_lam) / Pf_0.

    The prefactor is absorbed by scaling the first n rows and columns of
    A_lam by (1+beta x_i)^m, which multiplies the Pfaffian by exactly that
    product; the B block then becomes polynomial.  The A_0 block has the
    denominators x_i (+) x_j, cleared along the expansion (see
    _cleared_pfaffian), and Pf_0 is the Schur Pfaffian
    prod (x_i - x_j)/(x_i (+) x_j), so only the Vandermonde is left to divide.
    """
    if n > MAX_RANK:
        raise RankTooLarge(f"Pfaffian backend limited to n <= {MAX_RANK}")
    r = len(lam)
    if r > n:
        return MPoly()
    m = r if (n - r) % 2 == 0 else r + 1
    parts = list(lam.parts) + [0]
    x = xvars(n)
    scale = [(1 + _BETA * xi) ** m for xi in x]
    top = [[(x[i] - x[j]) * scale[i] * scale[j] if i != j else MPoly() for j in range(n)] for i in range(n)]
    side = [
        [_fpow(x[i], params, parts[m - k], doubled) * (1 + _BETA * x[i]) ** (m - k) for k in range(1, m + 1)]
        for i in range(n)
    ]
    out = _cleared_pfaffian(n, m, x, top, side)
    for i in range(n):
        for j in range(i + 1, n):
            q = out.exact_div(x[i] - x[j])
            if q is None:
                raise NotPolynomial("Pfaffian ratio not polynomial")
            out = q
    return out


def _cleared_pfaffian(n: int, m: int, x, top, side) -> MPoly:
    """Pf(A) times prod_{i<j<=n} (x_i (+) x_j), with A_ij = top_ij/(x_i (+) x_j).

    For an index set S the memo holds Pf(A_S) times the pair product over
    S restricted to the first n indices; removing f and j reinstates the
    pair factors that touch them.
    """
    size = n + m
    pair = {(i, j): _op(x[i], x[j]) for i in range(n) for j in range(i + 1, n)}
    memo: dict[int, MPoly] = {0: MPoly.const(1)}

    def touching(mask: int, f: int, j: int) -> MPoly:
        out = MPoly.const(1)
        for k in range(n):
            if mask >> k & 1 and k not in (f, j):
                out = out * pair[min(f, k), max(f, k)]
                if j < n:
                    out = out * pair[min(j, k), max(j, k)]
        return out

    def pf(mask: int) -> MPoly:
        if mask in memo:
            return memo[mask]
        idx = [k for k in range(size) if mask >> k & 1]
        f = idx[0]
        total = MPoly()
        for pos, j in enumerate(idx[1:]):
            if f >= n:
                a = MPoly()  # the lower-right block is zero
            elif j < n:
                a = top[f][j]
            else:
                a = side[f][j - n]
            if not a:
                continue
            term = a * pf(mask & ~(1 << f) & ~(1 << j)) * touching(mask, f, j)
            total = total - term if pos % 2 else total + term
        memo[mask] = total
        return total

    return pf((1 << size) - 1)
