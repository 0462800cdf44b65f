"""Rational elements: polynomial numerator over a factored denominator.

Denominator factors are kept as certified irreducible polynomials in a
normalized form, so a reduced element has a unique representation and
equality is structural.  Irreducibility is certified by the degree-one
criterion: if p = A*v + B with gcd(A, B) = 1 then p is irreducible.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import DenominatorVanishes, DivisionByZero, InsufficientParameters, UntrackedDenominator
from .mpoly import BETA, FIELD, MASK, MPoly, VarId, slot, var_of_slot

_P = (1 << 61) - 1
_ONE = MPoly.const(1)
_BETA = MPoly.var(BETA)


def _is_unit(p: MPoly) -> bool:
    return p.is_const() and p.constant_term() in (1, -1)


def _single_var(p: MPoly) -> bool:
    if len(p) != 1:
        return False
    (m, c), = p.terms.items()
    # one variable to the first power: a single field holding exactly 1
    return c == 1 and m != 0 and m & (m - 1) == 0 and (m.bit_length() - 1) % FIELD == 0


@lru_cache(maxsize=4096)
def is_irreducible(p: MPoly) -> bool:
    """Certify irreducibility over Z; False means 'not certified'."""
    if p.is_const():
        return False
    if len(p) == 1:
        return _single_var(p) or (_single_var(-p))
    if p.content() != 1:
        return False
    for s in sorted(p.slots()):
        v = var_of_slot(s)
        parts = p.split(v)
        if max(parts) != 1:
            continue
        a, b = parts[1], parts.get(0, MPoly())
        if b.is_zero():
            continue
        if _is_unit(a) or _is_unit(b):
            return True
        if len(a) == 1 and len(b) == 1:
            (ma, ca), = a.terms.items()
            (mb, cb), = b.terms.items()
            from math import gcd

            if gcd(ca, cb) == 1 and not (ma & _field_or(mb)) and not (mb & _field_or(ma)):
                return True
        if is_irreducible(a) and divides(a, b) is None:
            return True
        if is_irreducible(b) and divides(b, a) is None:
            return True
    return False


def _field_or(m: int) -> int:
    """Mask with every field of m that is nonzero set to all ones."""
    out = 0
    sh = 0
    while m:
        if m & MASK:
            out |= MASK << sh
        m >>= FIELD
        sh += FIELD
    return out


def pivot_slot(p: MPoly) -> int | None:
    for s in sorted(p.slots()):
        if max(p.split(var_of_slot(s))) == 1:
            return s
    return None


_rng = random.Random(20240613)
_POINTS = [_rng.randrange(2, _P) for _ in range(512)]


def _point(slots: Iterable[int], salt: int) -> dict[int, int]:
    return {s: _POINTS[(s * 7 + salt * 131) % len(_POINTS)] for s in slots}


def divides(p: MPoly, f: MPoly) -> MPoly | None:
    """f / p when p divides f exactly, else None.  Uses a modular pre-check."""
    if f.is_zero():
        return MPoly()
    s = pivot_slot(p) if len(p) > 1 else None
    if s is not None and len(f) > 8:
        parts = p.split(var_of_slot(s))
        a, b = parts[1], parts.get(0, MPoly())
        slots = f.slots() | p.slots()
        for salt in range(3):
            pt = _point(slots, salt)
            av = a.eval_mod(pt, _P)
            if av:
                pt[s] = (-b.eval_mod(pt, _P)) * pow(av, -1, _P) % _P
                if f.eval_mod(pt, _P):
                    return None
                break
    return f.exact_div(p)


def normalize(p: MPoly) -> tuple[MPoly, int]:
    """Return (q, sign) with p = sign*q and q's graded-lex leading coefficient positive."""
    _, c = p.leading_canonical()
    return (p, 1) if c > 0 else (-p, -1)


def _candidates(p: MPoly) -> list[MPoly]:
    vs = [v for v in p.variables() if v != BETA]
    out = []
    for v in vs:
        out.append(1 + _BETA * MPoly.var(v))
    for u, v in itertools.combinations(vs, 2):
        U, V = MPoly.var(u), MPoly.var(v)
        out += [U - V, U + V, U + V + _BETA * U * V]
    for v in vs:
        out.append(2 + _BETA * MPoly.var(v))
    return out


def factor_tracked(q: MPoly) -> tuple[int, dict[MPoly, int]]:
    """Split q into unit * prod of certified irreducibles, or raise UntrackedDenominator."""
    if q.is_zero():
        raise DivisionByZero("zero denominator")
    if q.is_const():
        c = q.constant_term()
        if c in (1, -1):
            return c, {}
        raise UntrackedDenominator(f"integer denominator {c}")
    if q.content() != 1:
        raise UntrackedDenominator(f"non-unit content in {q}")
    unit = 1
    out: dict[MPoly, int] = {}
    g = q.monomial_gcd()
    if g:
        q = q.exact_div(MPoly({g: 1}))
        s = 0
        while g:
            e = g & MASK
            if e:
                out[MPoly.var(var_of_slot(s))] = e
            g >>= FIELD
            s += 1
    stack = [q]
    while stack:
        p = stack.pop()
        if p.is_const():
            c = p.constant_term()
            if c not in (1, -1):
                raise UntrackedDenominator(f"integer factor {c}")
            unit *= c
            continue
        if is_irreducible(p):
            n, sg = normalize(p)
            unit *= sg
            out[n] = out.get(n, 0) + 1
            continue
        for cand in _candidates(p):
            d = p.exact_div(cand)
            if d is not None:
                stack += [cand, d]
                break
        else:
            raise UntrackedDenominator(f"cannot factor denominator {p}")
    return unit, out


class RElem:
    """num / prod(f^e for f, e in den), reduced."""

    __slots__ = ("num", "den", "_h")

    def __init__(self, num: MPoly, den: tuple[tuple[MPoly, int], ...] = ()):
        self.num = num
        self.den = den
        self._h = None

    @staticmethod
    def build(num: MPoly, den: Mapping[MPoly, int]) -> "RElem":
        if num.is_zero():
            return RElem(MPoly())
        kept = []
        for f, e in den.items():
            while e > 0:
                q = divides(f, num)
                if q is None:
                    break
                num = q
                e -= 1
            if e > 0:
                kept.append((f, e))
        kept.sort(key=lambda fe: fe[0].sort_key())
        return RElem(num, tuple(kept))

    @staticmethod
    def lift(v) -> "RElem":
        if isinstance(v, RElem):
            return v
        if isinstance(v, MPoly):
            return RElem(v)
        if isinstance(v, int):
            return RElem(MPoly.const(v))
        raise TypeError(f"cannot lift {type(v).__name__}")

    @staticmethod
    def var(name: str | VarId) -> "RElem":
        return RElem(MPoly.var(name))

    # queries
    def is_poly(self) -> bool:
        return not self.den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def den_dict(self) -> dict[MPoly, int]:
        return dict(self.den)

    def den_poly(self) -> MPoly:
        out = _ONE
        for f, e in self.den:
            out = out * f**e
        return out

    def to_poly(self) -> MPoly:
        from .errors import NotPolynomial

        if self.den:
            raise NotPolynomial(f"nonempty denominator: {self}")
        return self.num

    # arithmetic
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, MPoly)):
            other = RElem.lift(other)
        if not isinstance(other, RElem):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._h is None:
            self._h = hash((self.num, self.den))
        return self._h

    def __neg__(self) -> "RElem":
        return RElem(-self.num, self.den)

    def __add__(self, other) -> "RElem":
        try:
            other = RElem.lift(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RElem.build(self.num + other.num, dict(self.den))
        d1, d2 = dict(self.den), dict(other.den)
        lcm = dict(d1)
        for f, e in d2.items():
            lcm[f] = max(lcm.get(f, 0), e)
        n1, n2 = self.num, other.num
        for f, e in lcm.items():
            if e > d1.get(f, 0):
                n1 = n1 * f ** (e - d1.get(f, 0))
            if e > d2.get(f, 0):
                n2 = n2 * f ** (e - d2.get(f, 0))
        return RElem.build(n1 + n2, lcm)

    __radd__ = __add__

    def __sub__(self, other) -> "RElem":
        try:
            other = RElem.lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RElem":
        return RElem.lift(other) + (-self)

    def __mul__(self, other) -> "RElem":
        try:
            other = RElem.lift(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RElem(MPoly())
        if not self.den and not other.den:
            return RElem(self.num * other.num)
        den = dict(self.den)
        for f, e in other.den:
            den[f] = den.get(f, 0) + e
        return RElem.build(self.num * other.num, den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RElem":
        other = RElem.lift(other)
        if other.is_zero():
            raise DivisionByZero("division by zero element")
        num = self.num
        for f, e in other.den:
            num = num * f**e
        den = dict(self.den)
        q = divides(other.num, num)
        if q is not None:
            return RElem.build(q, den)
        unit, fs = factor_tracked(other.num)
        for f, e in fs.items():
            den[f] = den.get(f, 0) + e
        return RElem.build(num * unit, den)

    def __rtruediv__(self, other) -> "RElem":
        return RElem.lift(other) / self

    def __pow__(self, e: int) -> "RElem":
        if e < 0:
            return RElem.lift(1) / self**(-e)
        return RElem.build(self.num**e, {f: k * e for f, k in self.den}) if self.den else RElem(self.num**e)

    def rename(self, mapping: Mapping[VarId, VarId]) -> "RElem":
        num = self.num.rename(mapping)
        den: dict[MPoly, int] = {}
        for f, e in self.den:
            g, sg = normalize(f.rename(mapping))
            if sg < 0 and e % 2:
                num = -num
            den[g] = den.get(g, 0) + e
        return RElem.build(num, den)

    def map_coeffs(self, fn) -> "RElem":
        """Apply a polynomial map to numerator and denominator factors."""
        num = RElem.lift(fn(self.num))
        for f, e in self.den:
            g = RElem.lift(fn(f))
            # divide one factor at a time so each stays irreducible
            for _ in range(e):
                num = num / g
        return num

    def __str__(self) -> str:
        if not self.den:
            return str(self.num)
        den = "*".join(f"({f})" + (f"^{e}" if e > 1 else "") for f, e in self.den)
        return f"({self.num})/({den})"

    def __repr__(self) -> str:
        return f"RElem({self})"


Scalar = RElem | MPoly | int


def lift(v: Scalar) -> RElem:
    return RElem.lift(v)


def oplus(a: Scalar, b: Scalar) -> RElem:
    a, b = lift(a), lift(b)
    return a + b + a * b * _BETA


def ominus(a: Scalar, b: Scalar) -> RElem:
    a, b = lift(a), lift(b)
    return (a - b) / (1 + b * _BETA)


def neg(a: Scalar) -> RElem:
    """The formal inverse 0 ominus a."""
    return ominus(0, a)


def factorial_power(x: Scalar, bs: Sequence[Scalar], k: int, doubled: bool = False) -> RElem:
    need = k - 1 if doubled else k
    if k == 0:
        return lift(1)
    if len(bs) < need:
        raise InsufficientParameters(f"need {need} parameters, got {len(bs)}")
    out = oplus(x, x) if doubled else lift(1)
    for bk in bs[: (k - 1 if doubled else k)]:
        out = out * oplus(x, bk)
    return out


def _subs_poly(p: MPoly, assignment: Mapping[VarId, RElem]) -> RElem:
    present = p.slots()
    items = [(FIELD * slot(v), val) for v, val in assignment.items() if slot(v) in present]
    if not items:
        return RElem(p)
    degs = []
    for sh, _ in items:
        degs.append(max((m >> sh) & MASK for m in p.terms))
    groups: dict[tuple[int, ...], dict[int, int]] = {}
    for m, c in p.terms.items():
        es = []
        rest = m
        for sh, _ in items:
            e = (m >> sh) & MASK
            es.append(e)
            rest -= e << sh
        groups.setdefault(tuple(es), {})[rest] = c
    den: dict[MPoly, int] = {}
    dpolys = []
    for (sh, val), E in zip(items, degs):
        for f, e in val.den:
            den[f] = den.get(f, 0) + e * E
        dpolys.append(val.den_poly())
    cache: dict[tuple[int, int, int], MPoly] = {}

    def factor(k: int, e: int) -> MPoly:
        key = (k, e, degs[k])
        if key not in cache:
            val = items[k][1]
            cache[key] = val.num**e * dpolys[k] ** (degs[k] - e)
        return cache[key]

    num = MPoly()
    for es, t in groups.items():
        term = MPoly(t)
        for k, e in enumerate(es):
            if e or items[k][1].den:
                term = term * factor(k, e)
        num = num + term
    return RElem.build(num, den)


def substitute(p: MPoly | RElem, assignment: Mapping[VarId, Scalar]) -> RElem:
    assignment = {v: lift(val) for v, val in assignment.items()}
    if isinstance(p, MPoly):
        return _subs_poly(p, assignment)
    out = _subs_poly(p.num, assignment)
    for f, e in p.den:
        img = _subs_poly(f, assignment)
        if img.is_zero():
            raise DenominatorVanishes(f"factor {f} vanishes under substitution")
        out = out / img**e
    return out


def x_perm(perm: Sequence[int]) -> dict[VarId, VarId]:
    """Variable map sending x_{i+1} to x_{perm[i]+1}."""
    return {VarId("x", i + 1): VarId("x", j + 1) for i, j in enumerate(perm)}


def symmetrize(f: Scalar, n: int) -> RElem:
    f = lift(f)
    total = lift(0)
    for perm in itertools.permutations(range(n)):
        total = total + f.rename(x_perm(perm))
    return total
