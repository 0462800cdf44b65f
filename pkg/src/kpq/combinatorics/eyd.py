"""Excited Young diagrams in the shifted region D_n and their broken boxes."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from ..algebra.errors import RankTooSmall
from .partitions import Box, Partition, StrictPartition, shifted_diagram


class EydVariant(str, enum.Enum):
    I = "I"
    II = "II"


@dataclass(frozen=True)
class ExcitedDiagram:
    boxes: frozenset[Box]
    n: int
    variant: EydVariant = EydVariant.I
    shifted: bool = True

    def __str__(self) -> str:
        return "[" + ", ".join(f"({i},{j})" for i, j in sorted(self.boxes)) + "]"


def _moves(d: frozenset[Box], n: int, variant: EydVariant, shifted: bool) -> Iterator[frozenset[Box]]:
    for (i, j) in d:
        if i + 1 > n:
            continue
        if shifted and i == j and variant == EydVariant.II:
            if i + 2 <= n and not ({(i, i + 1), (i + 1, i + 1), (i + 1, i + 2), (i + 2, i + 2)} & d):
                yield (d - {(i, j)}) | {(i + 2, i + 2)}
            continue
        blockers = {(i + 1, j + 1), (i, j + 1)}
        if not (shifted and i == j):
            blockers.add((i + 1, j))
        if not (blockers & d):
            yield (d - {(i, j)}) | {(i + 1, j + 1)}


def _closure(start: frozenset[Box], n: int, variant: EydVariant, shifted: bool) -> list[frozenset[Box]]:
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        d = queue.popleft()
        for e in _moves(d, n, variant, shifted):
            if e not in seen:
                seen.add(e)
                order.append(e)
                queue.append(e)
    return order


def enumerate_eyd(lam: StrictPartition, n: int, variant: EydVariant | str = EydVariant.I) -> Iterator[ExcitedDiagram]:
    variant = EydVariant(variant)
    if len(lam) > n:
        raise RankTooSmall(f"length {len(lam)} exceeds rank {n}")
    if variant == EydVariant.II and n % 2:
        raise ValueError("variant II needs even n")
    for d in _closure(shifted_diagram(lam), n, variant, True):
        yield ExcitedDiagram(d, n, variant)


def enumerate_eyd_a(lam: Partition, n: int) -> Iterator[ExcitedDiagram]:
    """Ordinary excited diagrams of a Young diagram in rows 1..n."""
    if len(lam) > n:
        raise RankTooSmall(f"length {len(lam)} exceeds rank {n}")
    for d in _closure(frozenset(lam.boxes()), n, EydVariant.I, False):
        yield ExcitedDiagram(d, n, EydVariant.I, shifted=False)


def broken_boxes(D: ExcitedDiagram) -> frozenset[Box]:
    """Boxes outside D that a diagonal slide could return into.

    A box (i,j) is broken if walking down its diagonal reaches a box of D
    after k steps, with the diagonal in between empty and, at each step s < k,
    the right neighbour (i+s, j+s+1) and the lower neighbour (i+s+1, j+s)
    empty.  For variant II a diagonal box needs k even.
    """
    d = D.boxes
    n = D.n
    out = set()
    by_diag: dict[int, list[int]] = {}
    for (i, j) in d:
        by_diag.setdefault(j - i, []).append(i)
    for diag, rows in by_diag.items():
        rows.sort()
        for r in rows:
            # walk upwards from the box (r, r+diag) while conditions allow
            k = 1
            while r - k >= 1:
                i, j = r - k, r - k + diag
                if (D.shifted and j < i) or j < 1:
                    break
                if (i, j) in d:
                    break
                ok = True
                for s in range(k):
                    if (i + s, j + s + 1) in d or (i + s + 1, j + s) in d:
                        ok = False
                        break
                if not ok:
                    break
                if not (D.shifted and D.variant == EydVariant.II and i == j and k % 2):
                    out.add((i, j))
                k += 1
    return frozenset(b for b in out if b[0] <= n)
