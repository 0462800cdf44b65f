"""Excited Young diagram formulas with generic and standard weight grids."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Mapping

from ..algebra.mpoly import BETA, MPoly, VarId
from ..algebra.relem import RElem, lift, oplus
from ..combinatorics.eyd import (
    ExcitedDiagram,
    EydVariant,
    broken_boxes,
    enumerate_eyd,
    enumerate_eyd_a,
)
from ..combinatorics.partitions import Box, LieType, Partition, StrictPartition

_BETA = MPoly.var(BETA)

WeightGrid = Mapping[Box, object] | Callable[[Box], object]

# type B weight readings: "uniform" (confirmed by the HL oracle), "doubled-diagonal"
# (x_i (+) x_i on broken diagonal boxes), "plain" (x_i for every j <= n)
WTB_CONVENTIONS = ("uniform", "doubled-diagonal", "plain")


def _x(i: int) -> MPoly:
    return MPoly.var(VarId("x", i))


def _b(k: int) -> MPoly:
    return MPoly.var(VarId("b", k))


def _op(a: MPoly, c: MPoly) -> MPoly:
    return a + c + _BETA * a * c


def wt(type_: LieType, box: Box, n: int, broken: bool = False, wtb: str = "uniform") -> MPoly:
    i, j = box
    if type_ == LieType.C:
        return _op(_x(i), _x(j)) if j <= n else _op(_x(i), _b(j - n))
    if type_ == LieType.D:
        return _op(_x(i), _x(j + 1)) if j <= n - 1 else _op(_x(i), _b(j - n + 1))
    if type_ == LieType.B:
        if j > n:
            return _op(_x(i), _b(j - n))
        if wtb == "plain":
            return _x(i)
        if i == j and not (broken and wtb == "doubled-diagonal"):
            return _x(i)
        return _op(_x(i), _x(j))
    if type_ == LieType.A:
        return _op(_x(i), _b(j))
    raise ValueError(type_)


def diagram_weight(D: ExcitedDiagram, grid: Callable[[Box, bool], RElem]) -> RElem:
    out = lift(1)
    for box in sorted(D.boxes):
        out = out * grid(box, False)
    for box in sorted(broken_boxes(D)):
        out = out * (1 + lift(grid(box, True)) * _BETA)
    return out


def _as_grid(grid: WeightGrid) -> Callable[[Box, bool], RElem]:
    if callable(grid):
        return lambda box, broken: lift(grid(box))
    return lambda box, broken: lift(grid.get(box, 0))


def eyd_generic_sum(lam: StrictPartition | Partition, grid: WeightGrid, n: int, variant: EydVariant | str = EydVariant.I) -> RElem:
    g = _as_grid(grid)
    diagrams = enumerate_eyd_a(lam, n) if isinstance(lam, Partition) else enumerate_eyd(lam, n, variant)
    total = lift(0)
    for D in diagrams:
        total = total + diagram_weight(D, g)
    return total


def eyd_poly(type_: LieType, lam: StrictPartition, n: int, wtb: str = "uniform") -> MPoly:
    """Sum of diagram weights; everything stays polynomial."""
    variant = EydVariant.II if type_ == LieType.D else EydVariant.I
    cache: dict[tuple[Box, bool], MPoly] = {}

    def w(box: Box, broken: bool) -> MPoly:
        key = (box, broken)
        if key not in cache:
            cache[key] = wt(type_, box, n, broken, wtb)
        return cache[key]

    total = MPoly()
    for D in enumerate_eyd(lam, n, variant):
        total = total + _product(D, w)
    return total


def _product(D: ExcitedDiagram, w) -> MPoly:
    factors = [w(box, False) for box in sorted(D.boxes)]
    factors += [1 + _BETA * w(box, True) for box in sorted(broken_boxes(D))]
    # multiply small factors first to keep intermediate products small
    factors.sort(key=len)
    out = MPoly.const(1)
    for f in factors:
        out = out * f
    return out


@lru_cache(maxsize=None)
def typeA_eyd(lam: Partition, n: int) -> MPoly:
    total = MPoly()
    for D in enumerate_eyd_a(lam, n):
        total = total + _product(D, lambda box, broken: wt(LieType.A, box, n))
    return total
