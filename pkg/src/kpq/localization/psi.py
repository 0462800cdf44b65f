"""Restriction tables of Schubert classes: the recurrence oracle, GKM checks, pi_i."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from ..algebra.errors import NotDivisible
from ..algebra.mpoly import BETA, MPoly, VarId
from ..algebra.relem import RElem, lift
from ..combinatorics.partitions import LieType, Rel, SimpleIndex, StrictPartition, apply_si, simple_indices, sp
from ..combinatorics.weyl import Root, act, e_of_root, positive_roots, reflection_action, simple_root
from ..functions.kinds import TYPE_KIND
from .points import localize

_BETA = MPoly.var(BETA)

Key = tuple[StrictPartition, StrictPartition]


@dataclass(frozen=True)
class PsiTable:
    """entries[(lam, mu)] = psi_lam(mu) for lam, mu in SP(n)."""

    type: LieType
    n: int
    entries: dict[Key, RElem] = field(compare=True)

    @property
    def shapes(self) -> tuple[StrictPartition, ...]:
        return sp(self.n)

    def __getitem__(self, key: Key) -> RElem:
        return self.entries[key]

    def row(self, lam: StrictPartition) -> dict[StrictPartition, RElem]:
        return {mu: self.entries[lam, mu] for mu in self.shapes}

    def map(self, fn: Callable[[RElem], RElem]) -> "PsiTable":
        return PsiTable(self.type, self.n, {k: fn(v) for k, v in self.entries.items()})

    def mismatches(self, other: "PsiTable") -> list[Key]:
        return [k for k in self.entries if self.entries[k] != other.entries.get(k)]


def rank_indices(type_: LieType, n: int) -> list[SimpleIndex]:
    """Simple reflections acting on SP(n): s_0..s_{n-1} (B, C); s_1hat, s_1..s_n (D)."""
    return simple_indices(type_, n if type_ == LieType.D else n - 1)


def root_rank(type_: LieType, n: int) -> int:
    return n + 1 if type_ == LieType.D else n


def descent(mu: StrictPartition, type_: LieType, n: int, largest: bool = False) -> SimpleIndex:
    idx = rank_indices(type_, n)
    for i in reversed(idx) if largest else idx:
        if apply_si(mu, i, type_)[1] == Rel.LOWER:
            return i
    raise ValueError(f"{mu} has no descent")


def psi_table(type_: LieType, n: int, largest: bool = False) -> PsiTable:
    """Build the table by induction on |mu| with the left-hand recurrence.

    For mu != empty pick a descent i (smallest, or largest when asked):
        psi_lam(mu) = (1 + beta e(-a_i)) s_i psi_lam(s_i mu) + e(-a_i) s_i psi_{s_i lam}(s_i mu)
    if s_i lam < lam, and s_i psi_lam(s_i mu) otherwise.
    """
    type_ = LieType(type_)
    shapes = sp(n)
    empty = StrictPartition()
    entries: dict[Key, RElem] = {}
    for lam in shapes:
        entries[lam, empty] = lift(1 if lam == empty else 0)
    for mu in shapes:
        if mu == empty:
            continue
        i = descent(mu, type_, n, largest)
        nu = apply_si(mu, i, type_)[0]
        em = e_of_root(-simple_root(i, type_))
        for lam in shapes:
            low, rel = apply_si(lam, i, type_)
            prev = act(i, entries[lam, nu])
            if rel == Rel.LOWER:
                entries[lam, mu] = (1 + _BETA * em) * prev + em * act(i, entries[low, nu])
            else:
                entries[lam, mu] = prev
    return PsiTable(type_, n, entries)


def localization_table(type_: LieType, n: int, backend: str | None = None) -> PsiTable:
    type_ = LieType(type_)
    kind = TYPE_KIND[type_]
    shapes = sp(n)
    return PsiTable(type_, n, {(lam, mu): localize(kind, lam, mu, None, backend) for lam in shapes for mu in shapes})


# GKM condition


@dataclass(frozen=True)
class GkmEntry:
    lam: StrictPartition
    mu: StrictPartition
    root: Root
    ok: bool
    detail: str


@dataclass(frozen=True)
class GkmReport:
    entries: tuple[GkmEntry, ...]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def failures(self) -> list[GkmEntry]:
        return [e for e in self.entries if not e.ok]


def is_unit_factor(f: MPoly) -> bool:
    """f = 1 + beta b_k, one of the inverted elements of R."""
    if len(f) != 2 or f.constant_term() != 1:
        return False
    vs = f.variables()
    return len(vs) == 2 and BETA in vs and all(v == BETA or v.kind == "b" for v in vs) and f.total_degree() == 2


def divides_in_r(value: RElem, e: RElem) -> MPoly | None:
    """Quotient of the cleared numerator of value by the polynomial part of e, or None."""
    if any(not is_unit_factor(f) for f, _ in value.den):
        return None
    return value.num.exact_div(e.num)


def _pairs(type_: LieType, n: int) -> Iterator[tuple[StrictPartition, Root, StrictPartition]]:
    for mu in sp(n):
        for a in positive_roots(type_, root_rank(type_, n)):
            yield mu, a, reflection_action(mu, a, type_)


def gkm_check(table: PsiTable) -> GkmReport:
    out = []
    for mu, a, nu in _pairs(table.type, table.n):
        e = e_of_root(a)
        for lam in table.shapes:
            diff = table[lam, nu] - table[lam, mu]
            if not diff:
                out.append(GkmEntry(lam, mu, a, True, "0"))
                continue
            q = divides_in_r(diff, e)
            if q is None:
                out.append(GkmEntry(lam, mu, a, False, f"{diff} not divisible by {e.num}"))
            else:
                out.append(GkmEntry(lam, mu, a, True, str(q)))
    return GkmReport(tuple(out))


def pi_on_table(table: PsiTable, i: SimpleIndex) -> PsiTable:
    """(pi_i psi)(mu) = (s_i psi(s_i mu) - (1 + beta e(a_i)) psi(mu)) / e(a_i), row by row."""
    type_ = table.type
    e = e_of_root(simple_root(i, type_))
    out: dict[Key, RElem] = {}
    for mu in table.shapes:
        nu = apply_si(mu, i, type_)[0]
        for lam in table.shapes:
            diff = act(i, table[lam, nu]) - (1 + _BETA * e) * table[lam, mu]
            q = divides_in_r(diff, e)
            if q is None:
                raise NotDivisible(f"pi_{i} on row {lam} at {mu}: {diff}")
            out[lam, mu] = RElem.build(q, dict(diff.den)) / RElem.build(MPoly.const(1), dict(e.den))
    return PsiTable(type_, table.n, out)


def beta_minus_one(obj):
    """Set beta = -1 in a polynomial, an R-element or a whole table."""
    if isinstance(obj, PsiTable):
        return obj.map(beta_minus_one)
    if isinstance(obj, RElem):
        return obj.map_coeffs(lambda p: p.subs({BETA: -1}))
    return MPoly.lift(obj).subs({BETA: -1})


def structure_constants_from_table(table: PsiTable, lam: StrictPartition, mu: StrictPartition) -> dict[StrictPartition, RElem]:
    """c_nu with psi_lam psi_mu = sum c_nu psi_nu, solved upward along SP(n)."""
    residual = {k: table[lam, k] * table[mu, k] for k in table.shapes}
    out = {}
    for nu in table.shapes:
        r = residual[nu]
        if not r:
            continue
        c = r / table[nu, nu]
        out[nu] = c
        for k in table.shapes:
            if table[nu, k]:
                residual[k] = residual[k] - c * table[nu, k]
    return out
