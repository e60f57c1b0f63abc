"""The Taft Hopf algebra H_n(q) on the normally ordered basis g^i h^j."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .cyclotomic import CycloNum, primitive_root
from .errors import InvalidArgumentError, InvalidOrderError

Monomial = tuple[int, int]

__all__ = [
    "TaftElement",
    "TaftTensorElement",
    "taft_multiply",
    "coproduct",
    "counit",
    "antipode",
    "idempotent",
    "multiplication_table",
    "q_powers",
]


@lru_cache(maxsize=None)
def q_powers(n: int) -> tuple[CycloNum, ...]:
    """(q^0, q^1, ..., q^(n-1)) for q = primitive_root(n)."""
    q = primitive_root(n)
    out = [CycloNum.one(n)]
    for _ in range(n - 1):
        out.append(out[-1] * q)
    return tuple(out)


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise InvalidOrderError(f"Taft algebra needs n >= 2, got {n!r}")


def _monomial_product(n: int, a: Monomial, b: Monomial):
    """g^a0 h^a1 * g^b0 h^b1 = q^(a1*b0) g^(a0+b0) h^(a1+b1), or None if h^n appears."""
    j = a[1] + b[1]
    if j >= n:
        return None
    return (a[0] + b[0]) % n, j, (a[1] * b[0]) % n


def _add_into(acc: dict, key, value: CycloNum) -> None:
    cur = acc.get(key)
    value = value if cur is None else cur + value
    if value:
        acc[key] = value
    elif cur is not None:
        del acc[key]


class TaftElement:
    """sum c_ij g^i h^j with only nonzero coefficients stored."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Mapping[Monomial, object] | None = None):
        _check_order(order)
        self.order = order
        clean: dict[Monomial, CycloNum] = {}
        for (i, j), c in (coeffs or {}).items():
            if not 0 <= j < order:
                # h^j = 0 for j >= n
                if j >= order:
                    continue
                raise InvalidArgumentError(f"negative h exponent {j}")
            if not isinstance(c, CycloNum):
                c = CycloNum.from_rational(order, c)
            elif c.order != order:
                raise InvalidArgumentError("coefficient order mismatch")
            _add_into(clean, (i % order, j), c)
        self.coeffs = clean

    @classmethod
    def monomial(cls, n: int, i: int, j: int, coeff=1) -> TaftElement:
        return cls(n, {(i, j): coeff})

    @classmethod
    def one(cls, n: int) -> TaftElement:
        return cls.monomial(n, 0, 0)

    @classmethod
    def zero(cls, n: int) -> TaftElement:
        return cls(n)

    @classmethod
    def g(cls, n: int) -> TaftElement:
        return cls.monomial(n, 1, 0)

    @classmethod
    def h(cls, n: int) -> TaftElement:
        return cls.monomial(n, 0, 1)

    @classmethod
    def basis(cls, n: int) -> list[TaftElement]:
        return [cls.monomial(n, i, j) for i in range(n) for j in range(n)]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, TaftElement):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"TaftElement({self.order}: 0)"
        parts = [f"({c!r})*g^{i}h^{j}" for (i, j), c in sorted(self.coeffs.items())]
        return f"TaftElement({self.order}: " + " + ".join(parts) + ")"

    def _same(self, other: TaftElement) -> None:
        if other.order != self.order:
            raise InvalidArgumentError(
                f"Taft algebra order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other):
        if not isinstance(other, TaftElement):
            return NotImplemented
        self._same(other)
        acc = dict(self.coeffs)
        for k, c in other.coeffs.items():
            _add_into(acc, k, c)
        return TaftElement(self.order, acc)

    def __neg__(self):
        return TaftElement(self.order, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> TaftElement:
        return TaftElement(self.order, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, TaftElement):
            return taft_multiply(self, other)
        if isinstance(other, (int, CycloNum)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, CycloNum)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> TaftElement:
        result = TaftElement.one(self.order)
        for _ in range(k):
            result = result * self
        return result


def taft_multiply(a: TaftElement, b: TaftElement) -> TaftElement:
    a._same(b)
    n = a.order
    qp = q_powers(n)
    acc: dict[Monomial, CycloNum] = {}
    for ma, ca in a.coeffs.items():
        for mb, cb in b.coeffs.items():
            prod = _monomial_product(n, ma, mb)
            if prod is None:
                continue
            i, j, e = prod
            _add_into(acc, (i, j), ca * cb * qp[e])
    return TaftElement(n, acc)


class TaftTensorElement:
    """An element of the k-fold tensor power of H_n(q).

    Keys are tuples of monomials, one per tensor leg; the coproduct lands in
    arity 2, and arity 3 is used for coassociativity checks.
    """

    __slots__ = ("order", "arity", "coeffs")

    def __init__(self, order: int, arity: int, coeffs: Mapping | None = None):
        _check_order(order)
        self.order = order
        self.arity = arity
        clean: dict = {}
        for key, c in (coeffs or {}).items():
            if len(key) != arity:
                raise InvalidArgumentError(f"expected {arity} tensor legs, got {len(key)}")
            if any(j >= order for _, j in key):
                continue
            if not isinstance(c, CycloNum):
                c = CycloNum.from_rational(order, c)
            _add_into(clean, tuple((i % order, j) for i, j in key), c)
        self.coeffs = clean

    @classmethod
    def pure(cls, *factors: TaftElement) -> TaftTensorElement:
        """a1 (x) a2 (x) ... expanded on the monomial basis."""
        n = factors[0].order
        acc: dict = {(): CycloNum.one(n)}
        for f in factors:
            nxt: dict = {}
            for key, c in acc.items():
                for m, cf in f.coeffs.items():
                    _add_into(nxt, key + (m,), c * cf)
            acc = nxt
        return cls(n, len(factors), acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TaftTensorElement):
            return NotImplemented
        return (
            self.order == other.order
            and self.arity == other.arity
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        parts = [
            f"({c!r})*" + "(x)".join(f"g^{i}h^{j}" for i, j in key)
            for key, c in sorted(self.coeffs.items())
        ]
        return f"TaftTensorElement({self.order}, arity={self.arity}: " + (
            " + ".join(parts) or "0") + ")"

    def __add__(self, other):
        if not isinstance(other, TaftTensorElement):
            return NotImplemented
        acc = dict(self.coeffs)
        for k, c in other.coeffs.items():
            _add_into(acc, k, c)
        return TaftTensorElement(self.order, self.arity, acc)

    def __mul__(self, other):
        if not isinstance(other, TaftTensorElement):
            return NotImplemented
        if other.order != self.order or other.arity != self.arity:
            raise InvalidArgumentError("tensor product shape mismatch")
        n = self.order
        qp = q_powers(n)
        acc: dict = {}
        for ka, ca in self.coeffs.items():
            for kb, cb in other.coeffs.items():
                key = []
                c = ca * cb
                for ma, mb in zip(ka, kb):
                    prod = _monomial_product(n, ma, mb)
                    if prod is None:
                        break
                    i, j, e = prod
                    key.append((i, j))
                    if e:
                        c = c * qp[e]
                else:
                    _add_into(acc, tuple(key), c)
        return TaftTensorElement(n, self.arity, acc)

    def map_leg(self, leg: int, fn) -> TaftTensorElement:
        """Apply a linear map ``fn(monomial) -> TaftElement | TaftTensorElement`` to one leg.

        A TaftTensorElement result splices its legs in place of ``leg``;
        a CycloNum result removes the leg (used for the counit).
        """
        acc: dict = {}
        new_arity = None
        for key, c in self.coeffs.items():
            image = fn(key[leg])
            before, after = key[:leg], key[leg + 1 :]
            if isinstance(image, CycloNum):
                new_arity = self.arity - 1
                if image:
                    _add_into(acc, before + after, c * image)
            elif isinstance(image, TaftElement):
                new_arity = self.arity
                for m, cm in image.coeffs.items():
                    _add_into(acc, before + (m,) + after, c * cm)
            else:
                new_arity = self.arity - 1 + image.arity
                for sub, cs in image.coeffs.items():
                    _add_into(acc, before + sub + after, c * cs)
        if new_arity is None:
            probe = fn((0, 0))
            if isinstance(probe, CycloNum):
                new_arity = self.arity - 1
            elif isinstance(probe, TaftElement):
                new_arity = self.arity
            else:
                new_arity = self.arity - 1 + probe.arity
        if new_arity == 0:
            raise InvalidArgumentError("use counit_all for full contraction")
        return TaftTensorElement(self.order, new_arity, acc)

    def multiply_legs(self) -> TaftElement:
        """The multiplication map m: a1 (x) ... (x) ak -> a1 ... ak."""
        n = self.order
        total = TaftElement.zero(n)
        for key, c in self.coeffs.items():
            term = TaftElement(n, {key[0]: c})
            for m in key[1:]:
                term = term * TaftElement.monomial(n, *m)
            total = total + term
        return total

    def as_element(self) -> TaftElement:
        if self.arity != 1:
            raise InvalidArgumentError("only arity-1 tensors are plain elements")
        return TaftElement(self.order, {k[0]: c for k, c in self.coeffs.items()})


@lru_cache(maxsize=None)
def _coproduct_monomial(n: int, i: int, j: int) -> TaftTensorElement:
    g, h, one = TaftElement.g(n), TaftElement.h(n), TaftElement.one(n)
    dg = TaftTensorElement.pure(g, g)
    dh = TaftTensorElement.pure(one, h) + TaftTensorElement.pure(h, g)
    result = TaftTensorElement.pure(one, one)
    for _ in range(i):
        result = result * dg
    for _ in range(j):
        result = result * dh
    return result


def coproduct(a: TaftElement) -> TaftTensorElement:
    """Delta, the algebra map with Delta(g) = g(x)g and Delta(h) = 1(x)h + h(x)g."""
    n = a.order
    acc: dict = {}
    for (i, j), c in a.coeffs.items():
        for key, cm in _coproduct_monomial(n, i, j).coeffs.items():
            _add_into(acc, key, c * cm)
    return TaftTensorElement(n, 2, acc)


def counit(a: TaftElement) -> CycloNum:
    """epsilon(g^i h^j) = 1 if j == 0 else 0, extended linearly."""
    total = CycloNum.zero(a.order)
    for (_, j), c in a.coeffs.items():
        if j == 0:
            total = total + c
    return total


@lru_cache(maxsize=None)
def _antipode_monomial(n: int, i: int, j: int) -> TaftElement:
    q_inv = q_powers(n)[n - 1]
    s_g = TaftElement.monomial(n, n - 1, 0)
    s_h = TaftElement.monomial(n, n - 1, 1, -q_inv)
    # S is an anti-homomorphism: S(g^i h^j) = S(h)^j S(g)^i
    return s_h ** j * s_g ** i


def antipode(a: TaftElement) -> TaftElement:
    n = a.order
    total = TaftElement.zero(n)
    for (i, j), c in a.coeffs.items():
        total = total + _antipode_monomial(n, i, j).scale(c)
    return total


def idempotent(n: int, i: int) -> TaftElement:
    """e_i = (1/n) sum_j q^(-ij) g^j."""
    _check_order(n)
    if not 0 <= i < n:
        raise InvalidArgumentError(f"idempotent index must lie in [0, {n}), got {i}")
    qp = q_powers(n)
    inv_n = CycloNum.from_rational(n, Fraction(1, n))
    return TaftElement(n, {(j, 0): qp[(-i * j) % n] * inv_n for j in range(n)})


def multiplication_table(n: int) -> list[list[TaftElement]]:
    """Products of basis monomials, rows and columns in (i, j) lexicographic order."""
    basis = TaftElement.basis(n)
    return [[a * b for b in basis] for a in basis]


def element_to_json(a: TaftElement) -> list[dict]:
    return [
        {"g": i, "h": j, "coeff": c.to_json()} for (i, j), c in sorted(a.coeffs.items())
    ]


def ideal_power_dimension(n: int, s: int) -> int:
    """Dimension of (h)^s = H h^s, computed from spanning products g^i h^j h^s."""
    h_s = TaftElement.h(n) ** s
    span = set()
    for b in TaftElement.basis(n):
        span.update((b * h_s).coeffs)
    return len(span)

