"""Strict partitions, shifted diagrams, contents and the simple-reflection action."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

Box = tuple[int, int]


@dataclass(frozen=True, order=True)
class StrictPartition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        p = tuple(self.parts)
        object.__setattr__(self, "parts", p)
        if any(a <= 0 for a in p) or any(a <= c for a, c in zip(p, p[1:])):
            raise ValueError(f"not a strict partition: {p}")

    @staticmethod
    def of(*parts: int) -> "StrictPartition":
        return StrictPartition(tuple(parts))

    @staticmethod
    def parse(text: str) -> "StrictPartition":
        text = text.strip()
        if text in ("-", "", "()", "0"):
            return StrictPartition()
        return StrictPartition(tuple(int(t) for t in text.strip("()").split(",") if t.strip()))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, k: int) -> int:
        """1-based part access, 0 beyond the length."""
        return self.parts[k - 1] if 1 <= k <= len(self.parts) else 0

    def first(self) -> int:
        return self.parts[0] if self.parts else 0

    def contained_in(self, other: "StrictPartition") -> bool:
        return len(self) <= len(other) and all(a <= c for a, c in zip(self.parts, other.parts))

    def as_set(self) -> frozenset[int]:
        return frozenset(self.parts)

    @staticmethod
    def from_set(s) -> "StrictPartition":
        return StrictPartition(tuple(sorted(s, reverse=True)))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "-"

    def __repr__(self) -> str:
        return f"SP({self})"


def rho(n: int) -> StrictPartition:
    return StrictPartition(tuple(range(n, 0, -1)))


@lru_cache(maxsize=None)
def strict_partitions_in(bound: StrictPartition) -> tuple[StrictPartition, ...]:
    """All strict partitions contained in bound, sorted by size then parts."""
    out = []
    top = bound.first()
    for r in range(len(bound) + 1):
        for combo in itertools.combinations(range(top, 0, -1), r):
            lam = StrictPartition(combo)
            if lam.contained_in(bound):
                out.append(lam)
    return tuple(sorted(out, key=lambda l: (l.size, l.parts)))


def sp(n: int) -> tuple[StrictPartition, ...]:
    """SP(n): strict partitions inside the staircase of size n."""
    return strict_partitions_in(rho(n))


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        p = tuple(a for a in self.parts if a)
        object.__setattr__(self, "parts", p)
        if any(a < 0 for a in p) or any(a < c for a, c in zip(p, p[1:])):
            raise ValueError(f"not a partition: {p}")

    @staticmethod
    def of(*parts: int) -> "Partition":
        return Partition(tuple(parts))

    @staticmethod
    def parse(text: str) -> "Partition":
        text = text.strip()
        if text in ("-", ""):
            return Partition()
        return Partition(tuple(int(t) for t in text.split(",")))

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, k: int) -> int:
        return self.parts[k - 1] if 1 <= k <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(tuple(sum(1 for a in self.parts if a > j) for j in range(self.parts[0])))

    def contained_in(self, other: "Partition") -> bool:
        return len(self) <= len(other) and all(a <= c for a, c in zip(self.parts, other.parts))

    def boxes(self) -> list[Box]:
        return [(i + 1, j + 1) for i, a in enumerate(self.parts) for j in range(a)]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "-"


def partitions_in(rows: int, cols: int) -> list[Partition]:
    out = []

    def rec(prefix: list[int], k: int, cap: int):
        if k == rows:
            out.append(Partition(tuple(prefix)))
            return
        for a in range(cap, -1, -1):
            rec(prefix + [a], k + 1, a)

    rec([], 0, cols)
    return sorted(out, key=lambda p: (p.size, p.parts))


def shifted_diagram(lam: StrictPartition) -> frozenset[Box]:
    return frozenset((i, j) for i, a in enumerate(lam.parts, 1) for j in range(i, a + i))


class LieType(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class SimpleIndex:
    """Generator index: 0, 1, 2, ... for B/C; 1h (hat), 1, 2, ... for D."""

    value: int
    hat: bool = False

    def __post_init__(self):
        if self.hat and self.value != 1:
            raise ValueError("only 1 carries a hat")

    @staticmethod
    def parse(text: str) -> "SimpleIndex":
        text = text.strip()
        if text in ("1h", "1^", "1hat"):
            return SimpleIndex(1, True)
        return SimpleIndex(int(text))

    def __str__(self) -> str:
        return "1h" if self.hat else str(self.value)


HAT = SimpleIndex(1, True)


def simple_indices(type_: LieType, top: int) -> list[SimpleIndex]:
    """Generators with index value <= top."""
    if type_ == LieType.D:
        return [HAT] + [SimpleIndex(i) for i in range(1, top + 1)]
    return [SimpleIndex(i) for i in range(0, top + 1)]


# Which diagonal rows carry 1h in type D: odd rows ("odd-hat") or even rows ("even-hat").
DIAGONAL_CONVENTIONS = ("odd-hat", "even-hat")


def content(box: Box, type_: LieType, parity: str = "odd-hat") -> SimpleIndex:
    i, j = box
    if type_ in (LieType.B, LieType.C):
        return SimpleIndex(j - i)
    if type_ != LieType.D:
        raise ValueError("contents are defined for types B, C, D")
    if i < j:
        return SimpleIndex(j - i + 1)
    odd_hat = parity == "odd-hat"
    return HAT if (i % 2 == 1) == odd_hat else SimpleIndex(1)


class Rel(str, enum.Enum):
    LOWER = "Lower"
    HIGHER = "Higher"
    FIXED = "Fixed"


def _removals(lam: StrictPartition) -> Iterator[tuple[Box, StrictPartition]]:
    p = list(lam.parts)
    for k in range(len(p)):
        q = p[:]
        q[k] -= 1
        q = [a for a in q if a]
        if all(a > c for a, c in zip(q, q[1:])):
            yield (k + 1, p[k] + k), StrictPartition(tuple(q))


def _additions(lam: StrictPartition) -> Iterator[tuple[Box, StrictPartition]]:
    p = list(lam.parts) + [0]
    for k in range(len(p)):
        q = p[:]
        q[k] += 1
        q = [a for a in q if a]
        if all(a > c for a, c in zip(q, q[1:])):
            yield (k + 1, p[k] + k + 1), StrictPartition(tuple(q))


def apply_si(lam: StrictPartition, i: SimpleIndex, type_: LieType, parity: str = "odd-hat") -> tuple[StrictPartition, Rel]:
    low = [mu for box, mu in _removals(lam) if content(box, type_, parity) == i]
    high = [mu for box, mu in _additions(lam) if content(box, type_, parity) == i]
    if low and high:
        raise AssertionError(f"{lam} both {i}-removable and {i}-addable")
    if low:
        return low[0], Rel.LOWER
    if high:
        return high[0], Rel.HIGHER
    return lam, Rel.FIXED
