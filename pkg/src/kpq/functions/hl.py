"""GP and GQ from their Hall-Littlewood type symmetrization."""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Sequence

from ..algebra.errors import DenominatorVanishes, InsufficientParameters, NotPolynomial
from ..algebra.mpoly import BETA, MPoly, VarId
from ..algebra.pfaffian import determinant
from ..algebra.relem import RElem, factorial_power, lift, ominus, oplus
from ..combinatorics.partitions import StrictPartition
from .kinds import FnKind, bs as bvars, xs as xvars

_BETA = MPoly.var(BETA)


def _op(a: MPoly, c: MPoly) -> MPoly:
    return a + c + _BETA * a * c


def _fpow(x: MPoly, params: Sequence[MPoly], k: int, doubled: bool) -> MPoly:
    if k == 0:
        return MPoly.const(1)
    need = k - 1 if doubled else k
    if len(params) < need:
        raise InsufficientParameters(f"need {need} parameters, got {len(params)}")
    out = _op(x, x) if doubled else MPoly.const(1)
    for p in params[:need]:
        out = out * _op(x, p)
    return out


def _sign(perm: Sequence[int]) -> int:
    s = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                s = -s
    return s


def hl_poly(lam: StrictPartition, n: int, doubled: bool, params: Sequence[MPoly], full: bool = False) -> MPoly:
    """HL sum at generic x_1..x_n with polynomial parameters.

    Each summand is N(x)/V(x) with V the Vandermonde product, since
    1/(x_i - x_j in the group law) = (1 + beta x_j)/(x_i - x_j).  The
    antisymmetrized numerator is divided by V exactly.  With full=False the
    sum runs over cosets of S_{n-r} (each coset contributes equally), which
    replaces the final division by (n-r)!.
    """
    r = len(lam)
    if r > n:
        return MPoly()
    x = xvars(n)
    if r >= n - 1 and not full:
        return _hl_det(lam, n, doubled, params)
    N = MPoly.const(1)
    for i in range(r):
        N = N * _fpow(x[i], params, lam.parts[i], doubled)
    for i in range(r):
        for j in range(i + 1, n):
            N = N * _op(x[i], x[j]) * (1 + _BETA * x[j])
    for i in range(r, n):
        for j in range(i + 1, n):
            N = N * (x[i] - x[j])
    total = MPoly()
    seen = set()
    for perm in itertools.permutations(range(n)):
        if not full:
            key = (perm[:r], frozenset(perm[r:]))
            if key in seen:
                continue
            seen.add(key)
        term = N.rename({VarId("x", i + 1): VarId("x", p + 1) for i, p in enumerate(perm)})
        total = total + term if _sign(perm) > 0 else total - term
    total = _vandermonde_div(total, x)
    if full:
        f = math.factorial(n - r)
        if any(c % f for c in total.terms.values()):
            raise NotPolynomial(f"coefficients not divisible by {f}")
        total = MPoly({m: c // f for m, c in total.terms.items()})
    return total


def _vandermonde_div(total: MPoly, x: Sequence[MPoly]) -> MPoly:
    n = len(x)
    for i in range(n):
        for j in range(i + 1, n):
            q = total.exact_div(x[i] - x[j])
            if q is None:
                raise NotPolynomial("antisymmetrized numerator not divisible by the Vandermonde factor")
            total = q
    return total


def _hl_det(lam: StrictPartition, n: int, doubled: bool, params: Sequence[MPoly]) -> MPoly:
    """Case r >= n-1, where every pair i<j carries x_i (+) x_j.

    That product is symmetric and leaves the antisymmetrization, which
    becomes det[h_i(x_j)] with h_i(x) = [x|b]^{lam_i} (1+beta x)^{i-1}.
    """
    x = xvars(n)
    parts = list(lam.parts) + [0] * (n - len(lam))
    h = [[_fpow(xj, params, parts[i], doubled) * (1 + _BETA * xj) ** i for xj in x] for i in range(n)]
    quotient = _vandermonde_div(determinant(h).to_poly(), x)
    S = MPoly.const(1)
    for i in range(n):
        for j in range(i + 1, n):
            S = S * _op(x[i], x[j])
    return S * quotient


def default_params(kind: FnKind, lam: StrictPartition) -> tuple[MPoly, ...]:
    k = lam.first() + 1
    return bvars(k + 1, shift=True) if kind == FnKind.GB else bvars(k)


def _is_generic(xs: Sequence[RElem]) -> bool:
    return all(lift(v) == RElem(MPoly.var(VarId("x", i + 1))) for i, v in enumerate(xs))


def hl_backend(kind: FnKind, lam: StrictPartition, xs: Sequence, bs: Sequence) -> RElem:
    """The HL symmetrization at arbitrary sequences of ring elements."""
    kind = FnKind(kind)
    doubled = kind.doubled
    xs = [lift(v) for v in xs]
    bs = [lift(v) for v in bs]
    n, r = len(xs), len(lam)
    if r > n:
        return lift(0)
    if _is_generic(xs) and all(v.is_poly() for v in bs):
        p = hl_poly(lam, n, doubled, [v.num for v in bs])
        return RElem(p)
    total = lift(0)
    for perm in itertools.permutations(range(n)):
        y = [xs[p] for p in perm]
        term = lift(1)
        for i in range(r):
            term = term * factorial_power(y[i], bs, lam.parts[i], doubled)
        for i in range(r):
            for j in range(i + 1, n):
                d = ominus(y[i], y[j])
                if d.is_zero():
                    raise DenominatorVanishes("repeated values among the variables")
                term = term * oplus(y[i], y[j]) / d
        total = total + term
    return total / math.factorial(n - r)


@lru_cache(maxsize=None)
def gp(lam: StrictPartition, n: int, params: tuple[MPoly, ...] | None = None) -> MPoly:
    if params is None:
        params = bvars(lam.first() + 1)
    return hl_poly(lam, n, False, params)


@lru_cache(maxsize=None)
def gq(lam: StrictPartition, n: int, params: tuple[MPoly, ...] | None = None) -> MPoly:
    if params is None:
        params = bvars(lam.first() + 1)
    return hl_poly(lam, n, True, params)
