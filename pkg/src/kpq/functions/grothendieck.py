"""Factorial Grothendieck polynomials G_lambda(x_1..x_n | b)."""

from __future__ import annotations

from functools import lru_cache

from ..algebra.errors import NotPolynomial, RankTooSmall
from ..algebra.mpoly import BETA, MPoly
from ..algebra.pfaffian import determinant
from ..combinatorics.partitions import Partition
from .hl import _fpow
from .kinds import bs, xs

_BETA = MPoly.var(BETA)


@lru_cache(maxsize=None)
def grothendieck_g(lam: Partition, n: int) -> MPoly:
    """det([x_i|b]^{lam_j+n-j} (1+beta x_i)^{j-1}) divided by the Vandermonde."""
    if len(lam) > n:
        raise RankTooSmall(f"length {len(lam)} exceeds n={n}")
    x = xs(n)
    params = bs(lam[1] + n)
    M = [[_fpow(x[i], params, lam[j + 1] + n - j - 1, False) * (1 + _BETA * x[i]) ** j for j in range(n)] for i in range(n)]
    out = determinant(M).to_poly()
    for i in range(n):
        for j in range(i + 1, n):
            q = out.exact_div(x[i] - x[j])
            if q is None:
                raise NotPolynomial("determinant not divisible by the Vandermonde")
            out = q
    return out
