"""Expansion of symmetric polynomials in the GP, GQ and G bases.

Non-equivariant expansions use the basis at b = 0 and reduce by the
lowest-degree term: the lowest homogeneous part of GP_nu is P_nu, whose
lex-largest monomial is x^nu with coefficient 1 (2^len(nu) for GQ_nu).  The
parameters b may still occur in the input and then end up in the
coefficients.  Equivariant expansions use the basis with parameters and a
fraction-free solve; its intermediate entries grow quickly, so it is meant
for small ranks only.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from ..algebra.errors import NotInSpan, NotSymmetric
from ..algebra.mpoly import MPoly, VarId, decode, encode
from ..algebra.relem import RElem, lift, ominus, substitute
from ..combinatorics.partitions import Partition, StrictPartition
from .backends import gx_finite
from .grothendieck import grothendieck_g
from .kinds import FnKind

Shape = StrictPartition | Partition


def x_split(F: MPoly, n: int) -> dict[tuple[int, ...], MPoly]:
    """F as a polynomial in x_1..x_n: exponent vector -> coefficient in the other variables."""
    xv = [VarId("x", i) for i in range(1, n + 1)]
    out: dict[tuple[int, ...], dict[int, int]] = {}
    for m, c in F.terms.items():
        exps = decode(m)
        alpha = tuple(exps.pop(v, 0) for v in xv)
        if any(v.kind == "x" for v in exps):
            raise ValueError(f"variable beyond x{n} in input")
        out.setdefault(alpha, {})[encode(exps)] = c
    return {a: MPoly(t) for a, t in out.items()}


def is_symmetric(F: MPoly, n: int) -> bool:
    xv = [VarId("x", i) for i in range(1, n + 1)]
    for k in range(n - 1):
        if F.rename({xv[k]: xv[k + 1], xv[k + 1]: xv[k]}) != F:
            return False
    return True


def _strip_b(F: MPoly) -> MPoly:
    return MPoly({m: c for m, c in F.terms.items() if not any(v.kind == "b" for v in decode(m))})


@lru_cache(maxsize=None)
def basis_element(kind: FnKind, shape: Shape, n: int, equivariant: bool) -> MPoly:
    kind = FnKind(kind)
    if kind == FnKind.GA:
        F = grothendieck_g(Partition(tuple(shape.parts)), n)
    else:
        F = gx_finite(kind, StrictPartition(tuple(shape.parts)), n)
    return F if equivariant else _strip_b(F)


def _shape(kind: FnKind, alpha: tuple[int, ...]) -> Shape | None:
    parts = tuple(a for a in alpha if a)
    if list(alpha) != sorted(alpha, reverse=True):
        return None
    if kind == FnKind.GA:
        return Partition(parts)
    if len(set(parts)) != len(parts):
        return None
    return StrictPartition(parts)


def _lead_coefficient(kind: FnKind, shape: Shape) -> int:
    return 2 ** len(shape) if kind in (FnKind.GQ, FnKind.GC) else 1


def _plus_kind(kind: FnKind) -> bool:
    return kind in (FnKind.GQ, FnKind.GC)


def expand_in_basis(F: MPoly, kind: FnKind, n: int, equivariant: bool = False) -> dict:
    kind = FnKind(kind)
    F = MPoly.lift(F)
    if not is_symmetric(F, n):
        raise NotSymmetric("input is not symmetric in the x variables")
    if equivariant:
        return _expand_equivariant(F, kind, n)
    if kind != FnKind.GA and not cancellation_check(F, n, _plus_kind(kind)):
        raise NotInSpan("input lacks the cancellation property")
    return _expand_lowest(F, kind, n)


def _lowest_key(alpha: tuple[int, ...]):
    # smallest degree first; within a degree the lex-largest exponent first
    return (sum(alpha), tuple(-a for a in alpha))


def _expand_lowest(F: MPoly, kind: FnKind, n: int) -> dict:
    exps = list(x_split(F, n))
    # each x_i has degree at most nu_1 in the basis element of shape nu
    max_part = max((max(a, default=0) for a in exps), default=0)
    out: dict = {}
    residual = F
    while residual:
        parts = x_split(residual, n)
        alpha = min(parts, key=_lowest_key)
        shape = _shape(kind, alpha)
        if shape is None or shape in out:
            raise NotInSpan(f"leading exponent {alpha} is not a basis index")
        if len(shape) and shape[1] > max_part:
            raise NotInSpan(f"leading exponent {alpha} exceeds the degree bounds of the input")
        coeff = parts[alpha]
        lead = _lead_coefficient(kind, shape)
        if lead != 1:
            if any(c % lead for c in coeff.terms.values()):
                raise NotInSpan(f"coefficient of x^{alpha} not divisible by {lead}")
            coeff = MPoly({m: c // lead for m, c in coeff.terms.items()})
        out[shape] = coeff
        residual = residual - coeff * basis_element(kind, shape, n, False)
    return out


def _candidates(kind: FnKind, n: int, m: int) -> list[Shape]:
    from ..combinatorics.partitions import partitions_in, strict_partitions_in

    if kind == FnKind.GA:
        return partitions_in(n, m)
    bound = StrictPartition(tuple(range(m, max(m - n, 0), -1)))
    return [lam for lam in strict_partitions_in(bound) if len(lam) <= n]


def _expand_equivariant(F: MPoly, kind: FnKind, n: int) -> dict:
    """Solve the square system on the coefficients of x^nu, nu a candidate shape.

    Fraction-free elimination keeps every intermediate entry a polynomial;
    the solution is N/D with D the determinant, which must be a unit of R
    (a product of factors 1 + beta b_i).  The full reconstruction is then
    compared with F, which also covers the monomials outside the square
    system.
    """
    m = max((max(a, default=0) for a in x_split(F, n)), default=0)
    shapes = _candidates(kind, n, m)
    alphas = [tuple(s.parts) + (0,) * (n - len(s)) for s in shapes]
    cols = [x_split(basis_element(kind, s, n, True), n) for s in shapes]
    target = x_split(F, n)
    A = [[cols[j].get(a, MPoly()) for j in range(len(shapes))] for a in alphas]
    rhs = [target.get(a, MPoly()) for a in alphas]
    nums, det = _bareiss_solve(A, rhs)
    out = {}
    for s, num in zip(shapes, nums):
        if not num:
            continue
        g = gcd(num.content(), det.content())
        den = MPoly({m: c // g for m, c in det.terms.items()})
        num = MPoly({m: c // g for m, c in num.terms.items()})
        if den.content() != 1:
            raise NotInSpan(f"coefficient of {s} has a non-unit integer denominator")
        out[s] = lift(num) / lift(den)
    if reconstruct(out, kind, n, True) != lift(F):
        raise NotInSpan("residual is nonzero after solving")
    return out


def _bareiss_solve(A: list[list[MPoly]], rhs: list[MPoly]) -> tuple[list[MPoly], MPoly]:
    """Numerators and common denominator of the solution of A x = rhs."""
    N = len(A)
    A = [row[:] + [r] for row, r in zip(A, rhs)]
    prev = MPoly.const(1)
    for k in range(N):
        p = next((i for i in range(k, N) if A[i][k]), None)
        if p is None:
            raise NotInSpan("basis matrix is singular")
        A[k], A[p] = A[p], A[k]
        for i in range(k + 1, N):
            for j in range(k + 1, N + 1):
                q = (A[k][k] * A[i][j] - A[i][k] * A[k][j]).exact_div(prev)
                if q is None:
                    raise ArithmeticError("fraction-free elimination lost exactness")
                A[i][j] = q
            A[i][k] = MPoly()
        prev = A[k][k]
    det = A[N - 1][N - 1] if N else MPoly.const(1)
    nums = [MPoly()] * N
    for i in range(N - 1, -1, -1):
        acc = det * A[i][N]
        for j in range(i + 1, N):
            acc = acc - A[i][j] * nums[j]
        q = acc.exact_div(A[i][i])
        if q is None:
            raise ArithmeticError("back substitution lost exactness")
        nums[i] = q
    return nums, det


def reconstruct(coeffs: dict, kind: FnKind, n: int, equivariant: bool = False) -> RElem:
    total = lift(0)
    for s, c in coeffs.items():
        total = total + lift(c) * basis_element(FnKind(kind), s, n, equivariant)
    return total


def structure_constants(kind: FnKind, lam: StrictPartition, mu: StrictPartition, n: int, equivariant: bool = False) -> dict:
    kind = FnKind(kind)
    prod = basis_element(kind, lam, n, equivariant) * basis_element(kind, mu, n, equivariant)
    return expand_in_basis(prod, kind, n, equivariant)


def cancellation_check(F: MPoly, n: int, plus_variant: bool = False) -> bool:
    """F(t, (-)t, x_3, ...) is independent of t; the plus variant also asks
    F(t, x_2, ...) - F(0, x_2, ...) to be divisible by t (+) t."""
    F = MPoly.lift(F)
    if not is_symmetric(F, n):
        return False
    if n >= 2:
        t = VarId("t", 1)
        lhs = substitute(F, {VarId("x", 1): lift(MPoly.var(t)), VarId("x", 2): ominus(0, MPoly.var(t))})
        rhs = substitute(F, {VarId("x", 1): 0, VarId("x", 2): 0})
        if lhs != rhs:
            return False
    if plus_variant and n >= 1:
        t = MPoly.var(VarId("t", 1))
        diff = F.subs({VarId("x", 1): t}) - F.subs({VarId("x", 1): 0})
        tt = t * 2 + MPoly.var(VarId("beta")) * t * t
        if diff.exact_div(tt) is None:
            return False
    return True
