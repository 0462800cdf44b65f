"""Pfaffians and determinants by memoized expansion (division free)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import OddSize
from .relem import RElem, lift


@dataclass(frozen=True)
class SquareSkewMatrix:
    size: int
    upper: tuple[tuple[RElem, ...], ...]  # upper[i][j - i - 1] = A[i][j], j > i

    @staticmethod
    def from_function(size: int, entry: Callable[[int, int], object]) -> "SquareSkewMatrix":
        rows = tuple(tuple(lift(entry(i, j)) for j in range(i + 1, size)) for i in range(size))
        return SquareSkewMatrix(size, rows)

    @staticmethod
    def from_rows(rows: Sequence[Sequence[object]]) -> "SquareSkewMatrix":
        n = len(rows)
        for i in range(n):
            for j in range(n):
                if lift(rows[i][j]) != -lift(rows[j][i]):
                    raise ValueError("matrix is not skew-symmetric")
        return SquareSkewMatrix.from_function(n, lambda i, j: rows[i][j])

    def __getitem__(self, ij: tuple[int, int]) -> RElem:
        i, j = ij
        if i == j:
            return lift(0)
        if i < j:
            return self.upper[i][j - i - 1]
        return -self.upper[j][i - j - 1]

    def dense(self) -> list[list[RElem]]:
        return [[self[i, j] for j in range(self.size)] for i in range(self.size)]


def pfaffian(A: SquareSkewMatrix) -> RElem:
    n = A.size
    if n % 2:
        raise OddSize(f"Pfaffian of odd size {n}")
    memo: dict[int, RElem] = {0: lift(1)}

    def pf(mask: int) -> RElem:
        if mask in memo:
            return memo[mask]
        idx = [k for k in range(n) if mask >> k & 1]
        first = idx[0]
        total = lift(0)
        for pos, j in enumerate(idx[1:]):
            a = A[first, j]
            if a.is_zero():
                continue
            sub = pf(mask & ~(1 << first) & ~(1 << j))
            term = a * sub
            total = total - term if pos % 2 else total + term
        memo[mask] = total
        return total

    return pf((1 << n) - 1)


def determinant(M: Sequence[Sequence[object]]) -> RElem:
    """Laplace expansion along rows, memoized on the set of used columns."""
    n = len(M)
    rows = [[lift(v) for v in r] for r in M]
    memo: dict[int, RElem] = {}

    def det(row: int, used: int) -> RElem:
        if row == n:
            return lift(1)
        if used in memo:
            return memo[used]
        total = lift(0)
        sign = 1
        for j in range(n):
            if used >> j & 1:
                continue
            a = rows[row][j]
            if not a.is_zero():
                term = a * det(row + 1, used | 1 << j)
                total = total + term if sign > 0 else total - term
            sign = -sign  # alternates over free columns only
        memo[used] = total
        return total

    return det(0, 0)
