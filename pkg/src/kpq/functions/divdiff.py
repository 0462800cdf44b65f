"""Divided difference operators pi_i on GB, GC, GD at finite rank."""

from __future__ import annotations

from ..algebra.errors import NotDivisible
from ..algebra.mpoly import BETA, MPoly, VarId
from ..algebra.relem import RElem, lift, substitute
from ..combinatorics.partitions import LieType, Rel, SimpleIndex, StrictPartition, apply_si
from ..combinatorics.weyl import act, b_value, e_of_root, simple_reflection_assignment, simple_root
from .backends import gx_finite
from .kinds import KIND_TYPE, FnKind

_BETA = MPoly.var(BETA)


def s_i_image(
    kind: FnKind,
    lam: StrictPartition,
    i: SimpleIndex,
    n: int,
    backend: str = "hl",
    extended_backend: str | None = None,
    wtb: str = "uniform",
) -> RElem:
    """s_i applied to GX_lam^(n).

    For i >= 1 only the parameters move.  For s_0 and s_1hat the function
    is evaluated with extra variables equal to b_1 (and b_2), taken from the
    polynomial at rank n+1 (n+2) followed by a simultaneous substitution.
    The larger rank may use a different (faster) backend.
    """
    if not i.hat and i.value > 0:
        return act(i, gx_finite(kind, lam, n, backend, wtb))
    extra, assignment = _extension(i, n)
    return substitute(gx_finite(kind, lam, n + extra, extended_backend or backend, wtb), assignment)


def divided_difference(
    kind: FnKind,
    lam: StrictPartition,
    i: SimpleIndex,
    n: int,
    backend: str = "hl",
    extended_backend: str | None = None,
    wtb: str = "uniform",
) -> MPoly:
    kind = FnKind(kind)
    F = gx_finite(kind, lam, n, backend, wtb)
    out = _quotient(s_i_image(kind, lam, i, n, backend, extended_backend, wtb), F, i, KIND_TYPE[kind])
    if not out.is_poly():
        raise NotDivisible(f"pi_{i} of {kind} {lam} (n={n}) left denominator {out}")
    return out.num


def _quotient(sF: RElem, F: MPoly | RElem, i: SimpleIndex, type_: LieType) -> RElem:
    e = e_of_root(simple_root(i, type_))
    return (sF - (1 + _BETA * e) * lift(F)) / e


def _extension(i: SimpleIndex, n: int) -> tuple[int, dict[VarId, RElem]]:
    extra = 2 if i.hat else 1
    assignment = dict(simple_reflection_assignment(i))
    for k in range(1, extra + 1):
        assignment[VarId("x", n + k)] = b_value(k)
    return extra, assignment


def pi_twice(
    kind: FnKind,
    lam: StrictPartition,
    i: SimpleIndex,
    n: int,
    backend: str = "hl",
    extended_backend: str | None = None,
    wtb: str = "uniform",
) -> MPoly:
    """pi_i applied twice to GX_lam^(n).

    For s_0 and s_1hat the first result is also needed at the larger rank,
    where it is computed the same way.
    """
    kind = FnKind(kind)
    type_ = KIND_TYPE[kind]
    first = divided_difference(kind, lam, i, n, backend, extended_backend, wtb)
    if not i.hat and i.value > 0:
        out = _quotient(act(i, first), first, i, type_)
    else:
        extra, assignment = _extension(i, n)
        wide = divided_difference(kind, lam, i, n + extra, extended_backend or backend, None, wtb)
        out = _quotient(substitute(wide, assignment), first, i, type_)
    if not out.is_poly():
        raise NotDivisible(f"pi_{i}^2 of {kind} {lam} (n={n}) left denominator {out}")
    return out.num


def divided_difference_of(F: RElem | MPoly, i: SimpleIndex, type_: LieType) -> RElem:
    """pi_i on an element on which s_i acts through the parameters only."""
    if i.hat or i.value == 0:
        raise ValueError("s_0 and s_1hat need the extended evaluation; use divided_difference")
    return _quotient(act(i, lift(F)), F, i, type_)


def expected_pi(
    kind: FnKind,
    lam: StrictPartition,
    i: SimpleIndex,
    n: int,
    parity: str = "odd-hat",
    backend: str = "hl",
    wtb: str = "uniform",
) -> MPoly:
    """The right-hand side predicted by the trichotomy for s_i lam."""
    kind = FnKind(kind)
    mu, rel = apply_si(lam, i, KIND_TYPE[kind], parity)
    if rel == Rel.LOWER:
        return gx_finite(kind, mu, n, backend, wtb)
    return -_BETA * gx_finite(kind, lam, n, backend, wtb)
