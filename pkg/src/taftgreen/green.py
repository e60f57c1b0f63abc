"""The Green ring r(H_n(q)) on the basis of indecomposable classes [M(l, r)]."""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from .errors import InvalidArgumentError, InvalidOrderError
from .modules import ModuleLabel, enumerate_labels
from .oracle import ModuleMultiset

__all__ = [
    "GreenElement",
    "basis_product",
    "green_add",
    "green_mul",
    "u_sequence",
    "dimension_character",
    "generator_a",
    "generator_x",
]


class GreenElement:
    """An integer combination of classes [M(l, r)]."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Mapping[ModuleLabel, int] | None = None):
        if not isinstance(order, int) or order < 2:
            raise InvalidOrderError(f"need n >= 2, got {order!r}")
        self.order = order
        clean: dict[ModuleLabel, int] = {}
        for label, c in (coeffs or {}).items():
            label.validate(order)
            c = clean.get(label, 0) + int(c)
            if c:
                clean[label] = c
            else:
                clean.pop(label, None)
        self.coeffs = dict(sorted(clean.items()))

    @classmethod
    def basis(cls, n: int, l: int, r: int) -> GreenElement:
        return cls(n, {ModuleLabel.of(n, l, r): 1})

    @classmethod
    def one(cls, n: int) -> GreenElement:
        return cls.basis(n, 1, 0)

    @classmethod
    def zero(cls, n: int) -> GreenElement:
        return cls(n)

    @classmethod
    def from_multiset(cls, ms: ModuleMultiset) -> GreenElement:
        return cls(ms.order, ms.counts)

    def to_multiset(self) -> ModuleMultiset:
        if any(c < 0 for c in self.coeffs.values()):
            raise InvalidArgumentError("element has negative coefficients")
        return ModuleMultiset(self.order, self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, GreenElement):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, tuple(self.coeffs.items())))

    def __repr__(self) -> str:
        return f"GreenElement(n={self.order}, {self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for label, c in self.coeffs.items():
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}"
            term = f"{mag}[{label}]"
            out += (f"-{term}" if c < 0 else term) if not out else f" {sign} {term}"
        return out

    def _check(self, other: GreenElement) -> None:
        if other.order != self.order:
            raise InvalidArgumentError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, int):
            other = GreenElement.one(self.order) * other
        if not isinstance(other, GreenElement):
            return NotImplemented
        return green_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return GreenElement(self.order, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = GreenElement.one(self.order) * other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GreenElement(self.order, {k: c * other for k, c in self.coeffs.items()})
        if not isinstance(other, GreenElement):
            return NotImplemented
        return green_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> GreenElement:
        if k < 0:
            raise InvalidArgumentError("negative powers are not defined")
        result = GreenElement.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def to_json(self) -> dict:
        return {
            "n": self.order,
            "terms": [
                {"l": label.l, "r": label.r, "coeff": str(c)}
                for label, c in self.coeffs.items()
            ],
        }


def green_add(u: GreenElement, v: GreenElement) -> GreenElement:
    u._check(v)
    acc = dict(u.coeffs)
    for label, c in v.coeffs.items():
        acc[label] = acc.get(label, 0) + c
    return GreenElement(u.order, acc)


def basis_product(n: int, p: ModuleLabel, p2: ModuleLabel) -> GreenElement:
    """[M(l,r)][M(l',r')] from the closed-form tensor product rules."""
    p = ModuleLabel.of(n, p.l, p.r)
    p2 = ModuleLabel.of(n, p2.l, p2.r)
    return GreenElement(n, _basis_product(n, p.l, p.r, p2.l, p2.r))


@lru_cache(maxsize=None)
def _basis_product(n: int, l: int, r: int, l2: int, r2: int) -> dict[ModuleLabel, int]:
    terms: list[tuple[int, int]] = []
    rr = r + r2
    if l == 1 or l2 == 1:
        # tensoring with a simple only shifts the twist
        terms.append((max(l, l2), rr))
    elif l == n or l2 == n:
        other = l2 if l == n else l
        terms.extend((n, rr + i - other) for i in range(1, other + 1))
    else:
        lo, hi = min(l, l2), max(l, l2)
        diff = abs(l - l2)
        if l + l2 <= n:
            terms.extend((diff - 1 + 2 * i, rr + i - lo) for i in range(1, lo + 1))
        else:
            terms.extend((diff - 1 + 2 * i, rr + i - lo) for i in range(1, n - hi + 1))
            terms.extend((n, rr + 1 - i) for i in range(1, l + l2 - n + 1))
    out: dict[ModuleLabel, int] = {}
    for length, twist in terms:
        label = ModuleLabel(length, twist % n)
        out[label] = out.get(label, 0) + 1
    return out


def green_mul(u: GreenElement, v: GreenElement) -> GreenElement:
    u._check(v)
    n = u.order
    acc: dict[ModuleLabel, int] = {}
    for a, ca in u.coeffs.items():
        for b, cb in v.coeffs.items():
            c = ca * cb
            for label, m in _basis_product(n, a.l, a.r, b.l, b.r).items():
                acc[label] = acc.get(label, 0) + c * m
    return GreenElement(n, acc)


def generator_a(n: int) -> GreenElement:
    """a = [S_(-1)] = [M(1, n-1)]."""
    return GreenElement.basis(n, 1, -1)


def generator_x(n: int) -> GreenElement:
    """x = [M(2, 0)]."""
    return GreenElement.basis(n, 2, 0)


def u_sequence(n: int, l: int) -> GreenElement:
    """u_1 = 1, u_2 = x, u_l = x u_(l-1) - a u_(l-2)."""
    if not isinstance(l, int) or not 1 <= l <= n:
        raise InvalidArgumentError(f"u-sequence index must lie in [1, {n}], got {l!r}")
    return _u_terms(n)[l - 1]


@lru_cache(maxsize=None)
def _u_terms(n: int) -> tuple[GreenElement, ...]:
    a, x = generator_a(n), generator_x(n)
    terms = [GreenElement.one(n), x]
    while len(terms) < n:
        terms.append(x * terms[-1] - a * terms[-2])
    return tuple(terms[:n])


def dimension_character(u: GreenElement) -> int:
    """The ring map [M(l, r)] -> l = dim M(l, r)."""
    return sum(label.l * c for label, c in u.coeffs.items())


def multiplication_table(n: int) -> list[list[GreenElement]]:
    labels = enumerate_labels(n)
    return [[basis_product(n, p, p2) for p2 in labels] for p in labels]
