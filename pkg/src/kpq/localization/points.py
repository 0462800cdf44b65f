"""Fixed-point sequences b_mu and the localization of GX_lambda."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..algebra.errors import OutOfRank
from ..algebra.mpoly import MPoly, VarId
from ..algebra.relem import RElem, lift, ominus, substitute
from ..combinatorics.partitions import LieType, Partition, StrictPartition
from ..combinatorics.weyl import b_value, e_of_root, inv_set
from ..functions.backends import gx_finite
from ..functions.grothendieck import grothendieck_g
from ..functions.kinds import FnKind

# GP and GQ localize at the type D and type C points respectively
KIND_POINT_TYPE = {
    FnKind.GB: LieType.B,
    FnKind.GC: LieType.C,
    FnKind.GQ: LieType.C,
    FnKind.GD: LieType.D,
    FnKind.GP: LieType.D,
    FnKind.GA: LieType.A,
}


@dataclass(frozen=True)
class LocalizationPoint:
    type: LieType
    mu: StrictPartition | Partition
    values: tuple[RElem, ...]

    @property
    def support(self) -> int:
        """Number of leading nonzero entries."""
        return sum(1 for v in self.values if v)

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def b_mu(type_: LieType, mu: StrictPartition | Partition, n: int) -> LocalizationPoint:
    type_ = LieType(type_)
    if type_ == LieType.A:
        mu = mu if isinstance(mu, Partition) else Partition(tuple(mu.parts))
        if len(mu) > n:
            raise OutOfRank(f"{mu} has more than {n} rows")
        vals = tuple(b_value(-(mu[i] + n - i + 1)) for i in range(1, n + 1))
        return LocalizationPoint(type_, mu, vals)
    if mu.first() > n:
        raise OutOfRank(f"{mu} is not inside the staircase of size {n}")
    if type_ == LieType.D:
        vals = [b_value(-(a + 1)) for a in mu.parts]
        if len(mu) % 2:
            vals.append(b_value(-1))
        width = n + 1
    else:
        vals = [b_value(-a) for a in mu.parts]
        width = n
    vals += [lift(0)] * (width - len(vals))
    return LocalizationPoint(type_, mu, tuple(vals))


def sufficient_rank(kind: FnKind, lam, mu) -> int:
    """Smallest rank that sees every nonzero entry of b_mu and fits lam."""
    kind = FnKind(kind)
    if kind == FnKind.GA:
        return max(len(lam), len(mu), 1)
    nonzero = len(mu) + (1 if KIND_POINT_TYPE[kind] == LieType.D and len(mu) % 2 else 0)
    return max(len(lam), nonzero, 1)


def _polynomial(kind: FnKind, lam, n: int, backend: str | None) -> MPoly:
    if kind == FnKind.GA:
        return grothendieck_g(Partition(tuple(lam.parts)), n)
    if kind == FnKind.GP:
        # the even-rank GP agrees with GD; odd ranks are padded with a zero
        kind = FnKind.GD
    elif kind == FnKind.GQ:
        kind = FnKind.GC
    return gx_finite(kind, lam, n, backend or "eyd")


@lru_cache(maxsize=None)
def localize(kind: FnKind, lam, mu, n: int | None = None, backend: str | None = None) -> RElem:
    """GX_lam(b_mu | b) from the polynomial at a sufficient rank.

    The rational HL expression is never evaluated at b_mu: the repeated
    zeros of b_mu annihilate its denominators.  Substituting into the
    polynomial avoids this.
    """
    kind = FnKind(kind)
    type_ = KIND_POINT_TYPE[kind]
    if n is None:
        n = sufficient_rank(kind, lam, mu)
    if len(lam) > n:
        return lift(0)
    if type_ == LieType.A:
        point = b_mu(type_, mu, n)
    else:
        point = b_mu(type_, mu, max(n, mu.first()))
    F = _polynomial(kind, lam, n, backend)
    vals = point.values
    if any(vals[n:]):
        raise OutOfRank(f"rank {n} is too small for the point of {mu}")
    zero = {VarId("x", i): 0 for i in range(1, n + 1) if i > len(vals) or not vals[i - 1]}
    F = F.subs(zero)
    assignment = {VarId("x", i): vals[i - 1] for i in range(1, n + 1) if VarId("x", i) not in zero}
    return substitute(F, assignment)


def diagonal_value(type_: LieType, lam: StrictPartition) -> RElem:
    """prod over Inv(lam) of e(-alpha)."""
    out = lift(1)
    for a in inv_set(lam, LieType(type_)):
        out = out * e_of_root(-a)
    return out


def type_a_diagonal(lam: Partition, n: int) -> RElem:
    """prod over boxes (i,j) of lam of b_{n+j-lam'_j} (-) b_{lam_i+n-i+1}."""
    conj = lam.conjugate()
    out = lift(1)
    for i, j in lam.boxes():
        bj = MPoly.var(VarId("b", n + j - conj[j]))
        bi = MPoly.var(VarId("b", lam[i] + n - i + 1))
        out = out * ominus(bj, bi)
    return out
