"""Set-valued shifted tableau formulas for GB, GC, GD."""

from __future__ import annotations

from functools import lru_cache

from ..algebra.mpoly import BETA, MPoly, VarId
from ..algebra.relem import RElem, lift, ominus, oplus
from ..combinatorics.partitions import Box, LieType, StrictPartition, shifted_diagram
from ..combinatorics.tableaux import (
    SetValuedTableau,
    SvtVariant,
    cell_allowed,
    enumerate_svt,
    is_primed,
    letter_index,
    may_follow_above,
    may_follow_left,
)

_BETA = MPoly.var(BETA)

VARIANT = {LieType.B: SvtVariant.TDOUBLEPRIME, LieType.C: SvtVariant.T, LieType.D: SvtVariant.TPRIME}


def _b(k: int) -> MPoly:
    return MPoly.var(VarId("b", k)) if k > 0 else MPoly()


@lru_cache(maxsize=None)
def cell_weight(type_: LieType, box: Box, code: int) -> RElem:
    """Weight of one letter in one cell: x_a (+) b_off, or x_a (-) b_off if primed."""
    i, j = box
    off = j - i + (1 if type_ == LieType.D else 0)
    xa = MPoly.var(VarId("x", letter_index(code)))
    return ominus(xa, _b(off)) if is_primed(code) else oplus(xa, _b(off))


def tableau_weight(T: SetValuedTableau, type_: LieType) -> RElem:
    out = lift(1)
    for box, s in T.cells:
        for c in s:
            out = out * cell_weight(type_, box, c)
    return out * _BETA ** (T.weight_size - T.shape.size)


def svt_sum_bruteforce(type_: LieType, lam: StrictPartition, n: int) -> RElem:
    total = lift(0)
    for T in enumerate_svt(lam, n, VARIANT[type_]):
        total = total + tableau_weight(T, type_)
    return total


@lru_cache(maxsize=None)
def _cell_factor(type_: LieType, box: Box, left: int, above: int, top: int, n: int) -> RElem:
    """Sum over all cell contents whose largest letter is `top`.

    With the max letter of every cell fixed, the smaller letters of a cell
    can be chosen independently: a letter a < top is allowed iff it clears
    the left and upper neighbours' max letters, so the cell contributes
    w(top) * prod over allowed a of (1 + beta w(a)).
    """
    variant = VARIANT[type_]
    out = cell_weight(type_, box, top)
    for a in range(1, top):
        if not cell_allowed(a, box, variant):
            continue
        if left and not may_follow_left(a, left):
            continue
        if above and not may_follow_above(a, above):
            continue
        out = out * (1 + _BETA * cell_weight(type_, box, a))
    return out


def svt_sum(type_: LieType, lam: StrictPartition, n: int) -> RElem:
    """Transfer-matrix evaluation over row-major cells, grouped by cell maxima.

    The state records the max letter last placed in each column still
    needed by later cells.
    """
    variant = VARIANT[type_]
    boxes = sorted(shifted_diagram(lam))
    states: dict[tuple[tuple[int, int], ...], RElem] = {(): lift(1)}
    for (i, j) in boxes:
        new: dict[tuple[tuple[int, int], ...], RElem] = {}
        for state, acc in states.items():
            cols = dict(state)
            left = cols.get(j - 1, 0) if j > i else 0
            above = cols.get(j, 0) if i > 1 else 0
            lo = max(left, above, 1)
            for top in range(lo, 2 * n + 1):
                if not cell_allowed(top, (i, j), variant):
                    continue
                if left and not may_follow_left(top, left):
                    continue
                if above and not may_follow_above(top, above):
                    continue
                cols2 = dict(cols)
                cols2[j] = top
                # columns left of the current row start are no longer needed
                key = tuple(sorted((c, v) for c, v in cols2.items() if c >= i))
                term = acc * _cell_factor(type_, (i, j), left, above, top, n)
                new[key] = new[key] + term if key in new else term
        states = new
    total = lift(0)
    for acc in states.values():
        total = total + acc
    return total
