"""Set-valued shifted tableaux over the primed alphabet 1' < 1 < 2' < 2 < ...

Letters are encoded as integers: a' -> 2a-1 and a -> 2a, so the alphabet
order is integer order and a letter is primed iff its code is odd.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator

from .partitions import Box, StrictPartition, shifted_diagram


class SvtVariant(str, enum.Enum):
    T = "T"
    TPRIME = "Tprime"
    TDOUBLEPRIME = "Tdoubleprime"


def letter(a: int, primed: bool) -> int:
    return 2 * a - 1 if primed else 2 * a


def is_primed(code: int) -> bool:
    return code % 2 == 1


def letter_index(code: int) -> int:
    return (code + 1) // 2


def letter_str(code: int) -> str:
    return f"{letter_index(code)}'" if is_primed(code) else str(letter_index(code))


def diagonal_allowed(code: int, row: int, variant: SvtVariant) -> bool:
    if variant == SvtVariant.T:
        return True
    if variant == SvtVariant.TDOUBLEPRIME:
        return not is_primed(code)
    # Tprime: odd rows draw from 1, 2', 3, 4', ...; even rows from 1', 2, 3', 4, ...
    a = letter_index(code)
    unprimed_wanted = (a % 2 == 1) == (row % 2 == 1)
    return is_primed(code) != unprimed_wanted


def cell_allowed(code: int, box: Box, variant: SvtVariant) -> bool:
    i, j = box
    return i != j or diagonal_allowed(code, i, variant)


def may_follow_left(code: int, left_max: int) -> bool:
    """A letter in a cell may equal the left neighbour's max only if unprimed."""
    return code > left_max or (code == left_max and not is_primed(code))


def may_follow_above(code: int, above_max: int) -> bool:
    """A letter may equal the upper neighbour's max only if primed."""
    return code > above_max or (code == above_max and is_primed(code))


@dataclass(frozen=True)
class SetValuedTableau:
    shape: StrictPartition
    cells: tuple[tuple[Box, frozenset[int]], ...]

    def cell(self, box: Box) -> frozenset[int]:
        return dict(self.cells)[box]

    @property
    def weight_size(self) -> int:
        return sum(len(s) for _, s in self.cells)

    def is_valid(self, n: int, variant: SvtVariant) -> bool:
        d = dict(self.cells)
        if set(d) != set(shifted_diagram(self.shape)):
            return False
        for (i, j), s in d.items():
            if not s or max(s) > 2 * n:
                return False
            if i == j and not all(diagonal_allowed(c, i, variant) for c in s):
                return False
            if (i, j - 1) in d:
                lm = max(d[(i, j - 1)])
                if not all(may_follow_left(c, lm) for c in s) or min(s) < lm:
                    return False
            if (i - 1, j) in d:
                um = max(d[(i - 1, j)])
                if not all(may_follow_above(c, um) for c in s) or min(s) < um:
                    return False
        return True

    def __str__(self) -> str:
        rows: dict[int, list[str]] = {}
        for (i, j), s in sorted(self.cells):
            cell = "{" + ",".join(letter_str(c) for c in sorted(s)) + "}"
            rows.setdefault(i, []).append(cell)
        return "\n".join("  " * (i - 1) + " ".join(r) for i, r in sorted(rows.items()))


def from_rows(shape: StrictPartition, rows: list[list[object]]) -> SetValuedTableau:
    """Build a tableau from rows of letters like 1, "2'", or sets of them."""

    def code(tok) -> int:
        s = str(tok)
        return letter(int(s.rstrip("'")), s.endswith("'"))

    cells = []
    for i, row in enumerate(rows, 1):
        for k, entry in enumerate(row):
            toks = entry if isinstance(entry, (set, frozenset, list, tuple)) else [entry]
            cells.append(((i, i + k), frozenset(code(t) for t in toks)))
    return SetValuedTableau(shape, tuple(sorted(cells)))


def _subsets_from(lo: int, hi: int) -> list[tuple[int, ...]]:
    letters = range(lo, hi + 1)
    out = []
    for r in range(1, hi - lo + 2):
        out += list(itertools.combinations(letters, r))
    return out


def enumerate_svt(lam: StrictPartition, n: int, variant: SvtVariant | str = SvtVariant.T) -> Iterator[SetValuedTableau]:
    variant = SvtVariant(variant)
    boxes = sorted(shifted_diagram(lam))
    top = 2 * n

    def rec(k: int, filled: dict[Box, frozenset[int]]):
        if k == len(boxes):
            yield SetValuedTableau(lam, tuple((b, filled[b]) for b in boxes))
            return
        i, j = boxes[k]
        lm = max(filled[(i, j - 1)]) if (i, j - 1) in filled else 0
        um = max(filled[(i - 1, j)]) if (i - 1, j) in filled else 0
        lo = max(lm, um, 1)
        for s in _subsets_from(lo, top):
            if not all(cell_allowed(c, (i, j), variant) for c in s):
                continue
            if lm and not may_follow_left(s[0], lm):
                continue
            if um and not may_follow_above(s[0], um):
                continue
            filled[(i, j)] = frozenset(s)
            yield from rec(k + 1, filled)
            del filled[(i, j)]

    yield from rec(0, {})
