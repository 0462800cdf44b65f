"""Function kinds and their parameter conventions."""

from __future__ import annotations

import enum

from ..algebra.mpoly import MPoly, VarId
from ..combinatorics.partitions import LieType


class FnKind(str, enum.Enum):
    GP = "GP"
    GQ = "GQ"
    GB = "GB"
    GC = "GC"
    GD = "GD"
    GA = "GrothendieckA"

    @staticmethod
    def parse(text: str) -> "FnKind":
        t = text.strip()
        for k in FnKind:
            if t.lower() in (k.name.lower(), k.value.lower()):
                return k
        raise ValueError(f"unknown function kind {text!r}")

    @property
    def doubled(self) -> bool:
        """Q-type functions use the doubled factorial power."""
        return self in (FnKind.GQ, FnKind.GC)

    def __str__(self) -> str:
        return self.name


TYPE_KIND = {LieType.B: FnKind.GB, LieType.C: FnKind.GC, LieType.D: FnKind.GD, LieType.A: FnKind.GA}
KIND_TYPE = {v: k for k, v in TYPE_KIND.items()}


def xs(n: int) -> tuple[MPoly, ...]:
    return tuple(MPoly.var(VarId("x", i)) for i in range(1, n + 1))


def bs(k: int, shift: bool = False) -> tuple[MPoly, ...]:
    """b_1..b_k, or (0, b_1, ..., b_{k-1}) when shift is set."""
    if shift:
        return (MPoly(),) + tuple(MPoly.var(VarId("b", i)) for i in range(1, k))
    return tuple(MPoly.var(VarId("b", i)) for i in range(1, k + 1))
