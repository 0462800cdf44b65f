"""Finite-rank GB, GC, GD, GP, GQ by any of the four algorithms."""

from __future__ import annotations

from functools import lru_cache

from ..algebra.errors import NotPolynomial, RankTooSmall
from ..algebra.mpoly import MPoly, VarId
from ..combinatorics.partitions import StrictPartition
from .eyd_formula import eyd_poly
from .hl import default_params, hl_poly
from .kinds import KIND_TYPE, FnKind
from .pfaffian_formula import pfaffian_poly
from .svt import svt_sum

BACKENDS = ("hl", "pf", "svt", "eyd")


def _drop_last(p: MPoly, n: int) -> MPoly:
    return p.subs({VarId("x", n + 1): 0})


def _gp_like(kind: FnKind) -> tuple[bool, bool]:
    """(doubled, shifted parameters) for the HL and Pfaffian routes."""
    return kind.doubled, kind == FnKind.GB


def applicable(kind: FnKind, backend: str, n: int | None = None) -> bool:
    if kind == FnKind.GA:
        return False
    if backend in ("hl", "pf"):
        return True
    # the combinatorial routes reach GQ through GC and GP through GD at even rank
    return kind != FnKind.GP or n is None or n % 2 == 0


_COMBINATORIAL_KIND = {FnKind.GQ: FnKind.GC, FnKind.GP: FnKind.GD}


@lru_cache(maxsize=None)
def gx_finite(kind: FnKind, lam: StrictPartition, n: int, backend: str = "hl", wtb: str = "uniform") -> MPoly:
    kind = FnKind(kind)
    if len(lam) > n:
        raise RankTooSmall(f"length {len(lam)} exceeds n={n}")
    if not applicable(kind, backend, n):
        raise ValueError(f"backend {backend} does not apply to {kind} at n={n}")
    if backend in ("svt", "eyd") and kind in _COMBINATORIAL_KIND:
        return gx_finite(_COMBINATORIAL_KIND[kind], lam, n, backend, wtb)
    # type D at odd n is the even rank n+1 with the last variable set to 0
    if kind == FnKind.GD and n % 2:
        return _drop_last(gx_finite(kind, lam, n + 1, backend, wtb), n)
    if backend in ("hl", "pf"):
        doubled, _ = _gp_like(kind)
        params = default_params(kind, lam)
        f = hl_poly if backend == "hl" else pfaffian_poly
        return f(lam, n, doubled, params)
    type_ = KIND_TYPE[kind]
    if backend == "svt":
        out = svt_sum(type_, lam, n)
        if not out.is_poly():
            raise NotPolynomial(f"tableau sum not polynomial for {kind} {lam} n={n}")
        return out.num
    return eyd_poly(type_, lam, n, wtb)


def all_backends(kind: FnKind, lam: StrictPartition, n: int) -> dict[str, MPoly]:
    return {bk: gx_finite(kind, lam, n, bk) for bk in BACKENDS if applicable(kind, bk, n)}
