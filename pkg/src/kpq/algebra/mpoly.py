"""Sparse multivariate polynomials over Z.

Monomials are packed into a single Python int: every variable owns a fixed
12-bit field, so multiplying monomials is integer addition and comparing
packed ints gives a lex monomial order usable for division.
"""

from __future__ import annotations

import heapq
import random
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import DivisionByZero

FIELD = 12
MASK = (1 << FIELD) - 1
GUARD = 1 << (FIELD - 1)
MAX_EXP = GUARD - 1

# canonical variable order: beta < b < x < auxiliary kinds
KINDS = ("beta", "b", "x", "a", "c", "t", "u", "y")
_RANK = {k: r for r, k in enumerate(KINDS)}
_NK = len(KINDS) - 1


@dataclass(frozen=True)
class VarId:
    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind not in _RANK:
            raise ValueError(f"unknown variable kind {self.kind!r}")
        if self.kind == "beta" and self.index != 0:
            raise ValueError("beta carries no index")
        if self.kind in ("b", "x") and self.index < 1:
            raise ValueError("b and x indices start at 1")
        if self.index < 0:
            raise ValueError("negative index")

    @property
    def key(self) -> tuple[int, int]:
        return (_RANK[self.kind], self.index)

    def __lt__(self, other: "VarId") -> bool:
        return self.key < other.key

    @property
    def name(self) -> str:
        return "beta" if self.kind == "beta" else f"{self.kind}{self.index}"

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return self.name

    @staticmethod
    def parse(name: str) -> "VarId":
        if name == "beta":
            return BETA
        m = re.fullmatch(r"([a-z])(\d+)", name)
        if not m:
            raise ValueError(f"bad variable name {name!r}")
        return VarId(m.group(1), int(m.group(2)))


BETA = VarId("beta")


@lru_cache(maxsize=None)
def slot(v: VarId) -> int:
    if v.kind == "beta":
        return 0
    return 1 + _NK * v.index + _RANK[v.kind] - 1


@lru_cache(maxsize=None)
def var_of_slot(s: int) -> VarId:
    if s == 0:
        return BETA
    index, r = divmod(s - 1, _NK)
    return VarId(KINDS[r + 1], index)


@lru_cache(maxsize=None)
def _guards(nfields: int) -> int:
    g = 0
    for k in range(nfields):
        g |= GUARD << (FIELD * k)
    return g


def mono_divides(a: int, m: int) -> bool:
    """True if monomial a divides monomial m."""
    g = _guards(m.bit_length() // FIELD + 2)
    return ((m | g) - a) & g == g


def decode(m: int) -> dict[VarId, int]:
    out = {}
    s = 0
    while m:
        e = m & MASK
        if e:
            out[var_of_slot(s)] = e
        m >>= FIELD
        s += 1
    return out


def encode(exps: Mapping[VarId, int]) -> int:
    m = 0
    for v, e in exps.items():
        if e < 0 or e > MAX_EXP:
            raise ValueError(f"exponent {e} out of range")
        m += e << (FIELD * slot(v))
    return m


def mono_degree(m: int) -> int:
    d = 0
    while m:
        d += m & MASK
        m >>= FIELD
    return d


def _canon_key(m: int):
    exps = decode(m)
    deg = sum(exps.values())
    # graded lex: lower degree first, then larger exponent on smaller variable first
    vec = tuple(sorted(((v.key, -e) for v, e in exps.items())))
    return (deg, vec)


class MPoly:
    """Immutable sparse polynomial; terms map packed monomial -> int."""

    __slots__ = ("_t", "_h")

    def __init__(self, terms: dict[int, int] | None = None):
        self._t = terms if terms is not None else {}
        self._h = None

    # construction
    @staticmethod
    def const(c: int) -> "MPoly":
        return MPoly({0: c} if c else {})

    @staticmethod
    def var(v: VarId | str) -> "MPoly":
        if isinstance(v, str):
            v = VarId.parse(v)
        return MPoly({1 << (FIELD * slot(v)): 1})

    @staticmethod
    def from_terms(items: Iterable[tuple[int, Mapping[VarId, int]]]) -> "MPoly":
        out: dict[int, int] = {}
        for c, exps in items:
            m = encode(exps)
            out[m] = out.get(m, 0) + c
        return MPoly({m: c for m, c in out.items() if c})

    @staticmethod
    def lift(x) -> "MPoly":
        if isinstance(x, MPoly):
            return x
        if isinstance(x, int):
            return MPoly.const(x)
        raise TypeError(f"cannot lift {type(x).__name__} to MPoly")

    # inspection
    @property
    def terms(self) -> dict[int, int]:
        return self._t

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_const(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def const_value(self) -> int:
        if not self.is_const():
            raise ValueError("not a constant")
        return self._t.get(0, 0)

    def constant_term(self) -> int:
        return self._t.get(0, 0)

    def slots(self) -> set[int]:
        acc = 0
        for m in self._t:
            acc |= m
        out = set()
        s = 0
        while acc:
            if acc & MASK:
                out.add(s)
            acc >>= FIELD
            s += 1
        return out

    def variables(self) -> list[VarId]:
        return sorted(var_of_slot(s) for s in self.slots())

    def degree(self, v: VarId) -> int:
        sh = FIELD * slot(v)
        return max(((m >> sh) & MASK for m in self._t), default=0)

    def total_degree(self) -> int:
        return max((mono_degree(m) for m in self._t), default=0)

    def items_canonical(self) -> list[tuple[int, dict[VarId, int]]]:
        ms = sorted(self._t, key=_canon_key)
        return [(self._t[m], decode(m)) for m in ms]

    def sort_key(self):
        return tuple((_canon_key(m), self._t[m]) for m in sorted(self._t, key=_canon_key))

    def leading_canonical(self) -> tuple[int, int]:
        """(monomial, coeff) of the graded-lex largest term."""
        m = max(self._t, key=_canon_key)
        return m, self._t[m]

    # arithmetic
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_const() and self.constant_term() == other
        if isinstance(other, MPoly):
            return self._t == other._t
        return NotImplemented

    def __hash__(self) -> int:
        if self._h is None:
            self._h = hash(frozenset(self._t.items()))
        return self._h

    def __neg__(self) -> "MPoly":
        return MPoly({m: -c for m, c in self._t.items()})

    def __add__(self, other) -> "MPoly":
        if isinstance(other, int):
            other = MPoly.const(other)
        elif not isinstance(other, MPoly):
            return NotImplemented
        a, b = (self._t, other._t) if len(self._t) >= len(other._t) else (other._t, self._t)
        out = dict(a)
        for m, c in b.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "MPoly":
        if isinstance(other, int):
            other = MPoly.const(other)
        elif not isinstance(other, MPoly):
            return NotImplemented
        out = dict(self._t)
        for m, c in other._t.items():
            s = out.get(m, 0) - c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MPoly(out)

    def __rsub__(self, other) -> "MPoly":
        return (-self) + other

    def scale(self, c: int) -> "MPoly":
        if c == 0:
            return MPoly()
        return MPoly({m: c * k for m, k in self._t.items()})

    def mul_mono(self, mono: int, c: int = 1) -> "MPoly":
        return MPoly({m + mono: c * k for m, k in self._t.items()})

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        if not b:
            return MPoly()
        if len(b) == 1:
            (mb, cb), = b.items()
            return MPoly({m + mb: c * cb for m, c in a.items()})
        out: dict[int, int] = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                k = ma + mb
                out[k] = get(k, 0) + ca * cb
        return MPoly({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MPoly":
        if e < 0:
            raise ValueError("negative power")
        result = MPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # structure
    def split(self, v: VarId) -> dict[int, "MPoly"]:
        """Coefficients of self as a polynomial in v: exponent -> MPoly free of v."""
        sh = FIELD * slot(v)
        out: dict[int, dict[int, int]] = {}
        for m, c in self._t.items():
            e = (m >> sh) & MASK
            out.setdefault(e, {})[m - (e << sh)] = c
        return {e: MPoly(t) for e, t in out.items()}

    def rename(self, mapping: Mapping[VarId, VarId]) -> "MPoly":
        """Simultaneous renaming of variables (a permutation or relabelling)."""
        moves = [(FIELD * slot(a), FIELD * slot(b)) for a, b in mapping.items() if a != b]
        if not moves:
            return self
        out: dict[int, int] = {}
        for m, c in self._t.items():
            base = m
            add = 0
            for sa, sb in moves:
                e = (m >> sa) & MASK
                if e:
                    base -= e << sa
                    add += e << sb
            k = base + add
            out[k] = out.get(k, 0) + c
        return MPoly({m: c for m, c in out.items() if c})

    def subs(self, mapping: Mapping[VarId, "MPoly | int"]) -> "MPoly":
        """Simultaneous polynomial substitution."""
        if not mapping:
            return self
        items = [(FIELD * slot(v), MPoly.lift(p)) for v, p in mapping.items()]
        groups: dict[tuple[int, ...], dict[int, int]] = {}
        for m, c in self._t.items():
            es = []
            rest = m
            for sh, _ in items:
                e = (m >> sh) & MASK
                es.append(e)
                rest -= e << sh
            groups.setdefault(tuple(es), {})[rest] = c
        powers: list[dict[int, MPoly]] = [{} for _ in items]

        def pw(k: int, e: int) -> MPoly:
            cache = powers[k]
            if e not in cache:
                cache[e] = items[k][1] ** e
            return cache[e]

        out = MPoly()
        for es, t in groups.items():
            term = MPoly(t)
            for k, e in enumerate(es):
                if e:
                    term = term * pw(k, e)
            out = out + term
        return out

    def eval_mod(self, values: Mapping[int, int], p: int) -> int:
        """Evaluate modulo p with values given per slot (missing slots are 0)."""
        sl = []
        for s in self.slots():
            x = values.get(s, 0) % p
            sl.append((FIELD * s, [1, x]))
        total = 0
        for m, c in self._t.items():
            v = c
            for sh, pw in sl:
                e = (m >> sh) & MASK
                if e:
                    while len(pw) <= e:
                        pw.append(pw[-1] * pw[1] % p)
                    v = v * pw[e] % p
            total += v
        return total % p

    def content(self) -> int:
        from math import gcd

        g = 0
        for c in self._t.values():
            g = gcd(g, c)
            if g == 1:
                break
        return g

    def monomial_gcd(self) -> int:
        it = iter(self._t)
        try:
            g = next(it)
        except StopIteration:
            return 0
        for m in it:
            if not g:
                break
            # fieldwise minimum
            r = 0
            sh = 0
            a, b = g, m
            while a and b:
                ea, eb = a & MASK, b & MASK
                r |= min(ea, eb) << sh
                a >>= FIELD
                b >>= FIELD
                sh += FIELD
            g = r
        return g

    def exact_div(self, q: "MPoly") -> "MPoly | None":
        """Quotient if q divides self exactly, else None."""
        if not q._t:
            raise DivisionByZero("division by the zero polynomial")
        if not self._t:
            return MPoly()
        qt = q._t
        if len(qt) == 1:
            (mq, cq), = qt.items()
            out = {}
            for m, c in self._t.items():
                if not mono_divides(mq, m) or c % cq:
                    return None
                out[m - mq] = c // cq
            return MPoly(out)
        lq = max(qt)
        lc = qt[lq]
        tail = [(m - lq, c) for m, c in qt.items() if m != lq]
        rem = dict(self._t)
        heap = [-m for m in rem]
        heapq.heapify(heap)
        quot: dict[int, int] = {}
        while heap:
            m = -heapq.heappop(heap)
            c = rem.pop(m, 0)
            while heap and -heap[0] == m:
                heapq.heappop(heap)
            if not c:
                continue
            if not mono_divides(lq, m) or c % lc:
                return None
            d = m - lq
            k = c // lc
            quot[d] = k
            for tm, tc in tail:
                key = tm + m
                if key in rem:
                    s = rem[key] - k * tc
                    if s:
                        rem[key] = s
                    else:
                        del rem[key]
                else:
                    rem[key] = -k * tc
                    heapq.heappush(heap, -key)
        return MPoly(quot)

    # printing
    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for c, exps in self.items_canonical():
            mono = "*".join(
                v.name if e == 1 else f"{v.name}^{e}" for v, e in sorted(exps.items())
            )
            if not mono:
                s = str(abs(c))
            elif abs(c) == 1:
                s = mono
            else:
                s = f"{abs(c)}*{mono}"
            parts.append((c < 0, s))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, s in parts[1:]:
            out += (" - " if neg else " + ") + s
        return out

    def __repr__(self) -> str:
        return f"MPoly({self})"


def var(name: str) -> MPoly:
    return MPoly.var(VarId.parse(name))


def x(i: int) -> MPoly:
    return MPoly.var(VarId("x", i))


def b(i: int) -> MPoly:
    return MPoly.var(VarId("b", i))


beta = MPoly.var(BETA)


def random_prime_point(slots: Iterable[int], p: int, rng: random.Random) -> dict[int, int]:
    return {s: rng.randrange(1, p) for s in slots}


def parse(text: str) -> MPoly:
    """Parse the canonical text format (e.g. '2*x1 + beta*x1^2')."""
    text = text.strip()
    if text == "0":
        return MPoly()
    out = MPoly()
    tokens = re.findall(r"[+-]|[^+-]+", text.replace(" ", ""))
    if not tokens:
        raise ValueError("empty polynomial")
    sign = None
    for k, tok in enumerate(tokens):
        if tok in "+-":
            # a sign may lead the text or follow a term, never another sign
            if sign is not None:
                raise ValueError(f"unexpected {tok!r} in {text!r}")
            sign = 1 if tok == "+" else -1
            continue
        if sign is None and k > 0:
            raise ValueError(f"missing operator in {text!r}")
        coeff = 1
        exps: dict[VarId, int] = {}
        for f in tok.split("*"):
            if f.isdigit():
                coeff *= int(f)
            else:
                name, caret, e = f.partition("^")
                if caret and not e.isdigit():
                    raise ValueError(f"bad exponent in {f!r}")
                v = VarId.parse(name)
                exps[v] = exps.get(v, 0) + (int(e) if e else 1)
        out = out + MPoly.from_terms([((sign or 1) * coeff, exps)])
        sign = None
    if sign is not None:
        raise ValueError(f"dangling sign in {text!r}")
    return out
