"""Signed permutations, roots, reflections and the e-map into the ring R."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..algebra.errors import InvalidRoot, OddNegativeCount
from ..algebra.mpoly import MPoly, VarId
from ..algebra.relem import RElem, lift, neg, ominus, oplus
from .partitions import HAT, LieType, SimpleIndex, StrictPartition


@dataclass(frozen=True)
class SignedPermutation:
    """w as the tuple (w(1), ..., w(n)); negative entries are barred values."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(abs(a) for a in self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a signed permutation: {self.images}")

    @staticmethod
    def identity(n: int) -> "SignedPermutation":
        return SignedPermutation(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if abs(i) > self.n:
            return i
        a = self.images[abs(i) - 1]
        return a if i > 0 else -a

    def padded(self, n: int) -> "SignedPermutation":
        return SignedPermutation(self.images + tuple(range(self.n + 1, n + 1))) if n > self.n else self

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        n = max(self.n, other.n)
        a, c = self.padded(n), other.padded(n)
        return SignedPermutation(tuple(a(c(i)) for i in range(1, n + 1)))

    def negatives(self) -> int:
        return sum(1 for a in self.images if a < 0)

    def length(self, type_: LieType) -> int:
        w = self.images
        n = len(w)
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
        nsum = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] + w[j] < 0)
        if type_ == LieType.D:
            return inv + nsum
        return inv + nsum + self.negatives()

    def __str__(self) -> str:
        return " ".join(f"{-a}bar" if a < 0 else str(a) for a in self.images)


def generator(i: SimpleIndex, n: int) -> SignedPermutation:
    w = list(range(1, n + 1))
    if i.hat:
        w[0], w[1] = -2, -1
    elif i.value == 0:
        w[0] = -1
    else:
        k = i.value
        w[k - 1], w[k] = w[k], w[k - 1]
    return SignedPermutation(tuple(w))


def lambda_of_w(w: SignedPermutation, type_: LieType) -> StrictPartition:
    neg_values = sorted((-w(i) for i in range(1, w.n + 1) if w(i) < 0), reverse=True)
    if type_ == LieType.D:
        if len(neg_values) % 2:
            raise OddNegativeCount(f"{w} has an odd number of negative values")
        return StrictPartition(tuple(a - 1 for a in neg_values if a > 1))
    return StrictPartition(tuple(neg_values))


def w_lambda(lam: StrictPartition, type_: LieType) -> SignedPermutation:
    """Grassmannian element for lam, as a product of the rho_j blocks."""
    n = (lam.first() + 2) if lam.parts else 1
    w = SignedPermutation.identity(n)
    if type_ == LieType.D:
        # alternate hat/plain chains, first row uses the hat generator
        for k, part in enumerate(lam.parts):
            if k % 2 == 0:
                chain = [SimpleIndex(j) for j in range(part, 1, -1)] + [HAT]
            else:
                chain = [SimpleIndex(j) for j in range(part, 0, -1)]
            block = SignedPermutation.identity(n)
            for g in chain:
                block = block * generator(g, n)
            w = block * w
        return w
    for part in lam.parts:
        block = SignedPermutation.identity(n)
        for j in range(part - 1, -1, -1):
            block = block * generator(SimpleIndex(j), n)
        w = block * w
    return w


# roots: coefficient vectors over t_1, t_2, ...


@dataclass(frozen=True, order=True)
class Root:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @staticmethod
    def t(i: int, c: int = 1) -> "Root":
        return Root((0,) * (i - 1) + (c,))

    def __add__(self, other: "Root") -> "Root":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        c = other.coeffs + (0,) * (n - len(other.coeffs))
        return Root(tuple(p + q for p, q in zip(a, c)))

    def __neg__(self) -> "Root":
        return Root(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "Root") -> "Root":
        return self + (-other)

    def support(self) -> list[tuple[int, int]]:
        return [(i + 1, c) for i, c in enumerate(self.coeffs) if c]

    def __str__(self) -> str:
        out = []
        for i, c in self.support():
            s = f"t{i}" if abs(c) == 1 else f"{abs(c)}t{i}"
            out.append(("-" if c < 0 else "+") + s)
        s = "".join(out)
        return s[1:] if s.startswith("+") else s or "0"


def positive_roots(type_: LieType, n: int) -> list[Root]:
    out = []
    for j in range(1, n + 1):
        for i in range(1, j):
            out.append(Root.t(j) - Root.t(i))
            out.append(Root.t(j) + Root.t(i))
        if type_ == LieType.B:
            out.append(Root.t(j))
        elif type_ == LieType.C:
            out.append(Root.t(j, 2))
    return out


def is_positive_root(a: Root, type_: LieType) -> bool:
    sup = a.support()
    if len(sup) == 2:
        (i, ci), (j, cj) = sup
        return cj == 1 and ci in (1, -1)
    if len(sup) == 1:
        (i, c), = sup
        return (type_ == LieType.B and c == 1) or (type_ == LieType.C and c == 2)
    return False


def simple_root(i: SimpleIndex, type_: LieType) -> Root:
    if i.hat:
        return Root.t(1) + Root.t(2)
    if i.value == 0:
        return Root.t(1, 1 if type_ == LieType.B else 2)
    return Root.t(i.value + 1) - Root.t(i.value)


def b_value(k: int) -> RElem:
    """b_k for k > 0 and the formal inverse of b_{|k|} for k < 0."""
    v = RElem(MPoly.var(VarId("b", abs(k))))
    return v if k > 0 else neg(v)


@lru_cache(maxsize=None)
def e_of_root(a: Root) -> RElem:
    out = lift(0)
    for i, c in a.support():
        for _ in range(abs(c)):
            out = oplus(out, b_value(i if c > 0 else -i))
    return out


def reflection_action(lam: StrictPartition, a: Root, type_: LieType) -> StrictPartition:
    if not is_positive_root(a, type_):
        raise InvalidRoot(f"{a} is not a positive root of type {type_}")
    s = set(lam.parts) if type_ != LieType.D else _d_encode(lam)
    sup = a.support()
    if len(sup) == 1:
        i = sup[0][0]
        s ^= {i}
    else:
        (i, ci), (j, _) = sup
        if ci < 0:  # t_j - t_i swaps membership
            if (i in s) != (j in s):
                s ^= {i, j}
        else:  # t_j + t_i adds or removes the pair
            if i in s and j in s:
                s -= {i, j}
            elif i not in s and j not in s:
                s |= {i, j}
    return StrictPartition.from_set(s) if type_ != LieType.D else _d_decode(s)


def _d_encode(lam: StrictPartition) -> set[int]:
    s = {a + 1 for a in lam.parts}
    if len(lam) % 2:
        s.add(1)
    return s


def _d_decode(s: set[int]) -> StrictPartition:
    return StrictPartition.from_set({a - 1 for a in s if a > 1})


def d_encoding(lam: StrictPartition) -> frozenset[int]:
    """The even-size set of negated values of the type D Grassmannian element."""
    return frozenset(_d_encode(lam))


def inv_set(lam: StrictPartition, type_: LieType) -> list[Root]:
    top = lam.first() + (1 if type_ == LieType.D else 0)
    out = []
    for a in positive_roots(type_, max(top, 1)):
        mu = reflection_action(lam, a, type_)
        if mu != lam and mu.contained_in(lam):
            out.append(a)
    return out


def simple_reflection_assignment(i: SimpleIndex) -> dict[VarId, RElem]:
    """Action of s_i on the parameters b_k, for substitute."""
    if i.hat:
        return {VarId("b", 1): b_value(-2), VarId("b", 2): b_value(-1)}
    if i.value == 0:
        return {VarId("b", 1): b_value(-1)}
    k = i.value
    return {VarId("b", k): b_value(k + 1), VarId("b", k + 1): b_value(k)}


def act(i: SimpleIndex, f: RElem) -> RElem:
    from ..algebra.relem import substitute

    if not i.hat and i.value > 0:
        k = i.value
        return lift(f).rename({VarId("b", k): VarId("b", k + 1), VarId("b", k + 1): VarId("b", k)})
    return substitute(lift(f), simple_reflection_assignment(i))
