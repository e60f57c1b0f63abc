"""The quotient ring Z[y, z] / (y^n - 1, (z - y - 1) f_n(y, z)).

Residues are reduced to the basis y^i z^j (0 <= i, j < n) by rewriting z^n
with the second relation (monic of z-degree n) and then reducing y-exponents
modulo n.  The maps ``phi`` and ``psi`` translate between this ring and the
Green ring.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Mapping

from .errors import InvalidArgumentError, InvalidOrderError
from .green import GreenElement, generator_a, generator_x
from .modules import ModuleLabel, enumerate_labels

__all__ = [
    "BivariatePoly",
    "NormalForm",
    "fib_poly",
    "fib_poly_closed",
    "standard_fib",
    "normal_form",
    "phi",
    "psi",
    "presentation_relations",
    "phi_matrix",
    "integer_determinant",
]

Exponent = tuple[int, int]


class BivariatePoly:
    """Integer polynomial in y and z; keys are (y-degree, z-degree)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Exponent, int] | None = None):
        clean: dict[Exponent, int] = {}
        for (i, j), c in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise InvalidArgumentError(f"negative exponent in y^{i} z^{j}")
            c = clean.get((i, j), 0) + int(c)
            if c:
                clean[(i, j)] = c
            else:
                clean.pop((i, j), None)
        self.coeffs = clean

    @classmethod
    def const(cls, c: int) -> BivariatePoly:
        return cls({(0, 0): c})

    @classmethod
    def y(cls) -> BivariatePoly:
        return cls({(1, 0): 1})

    @classmethod
    def z(cls) -> BivariatePoly:
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> BivariatePoly:
        return cls({(i, j): c})

    def is_zero(self) -> bool:
        return not self.coeffs

    def z_degree(self) -> int:
        return max((j for _, j in self.coeffs), default=-1)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BivariatePoly.const(other)
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def _lift(self, other):
        if isinstance(other, int):
            return BivariatePoly.const(other)
        if isinstance(other, BivariatePoly):
            return other
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        acc = dict(self.coeffs)
        for k, c in other.coeffs.items():
            acc[k] = acc.get(k, 0) + c
        return BivariatePoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        acc: dict[Exponent, int] = {}
        for (i, j), c in self.coeffs.items():
            for (k, m), d in other.coeffs.items():
                key = (i + k, j + m)
                acc[key] = acc.get(key, 0) + c * d
        return BivariatePoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BivariatePoly:
        result = BivariatePoly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def evaluate(self, y, z):
        return sum(c * y**i * z**j for (i, j), c in self.coeffs.items())

    def substitute_y(self, factor: int) -> BivariatePoly:
        """p(factor * y, z) for an integer factor."""
        return BivariatePoly({(i, j): c * factor**i for (i, j), c in self.coeffs.items()})

    def terms(self) -> list[tuple[int, int, int]]:
        """(y-degree, z-degree, coeff) sorted z-degree major, then y-degree."""
        return sorted(((i, j, c) for (i, j), c in self.coeffs.items()), key=lambda t: (t[1], t[0]))

    def to_json(self) -> list[dict]:
        return [{"y": i, "z": j, "coeff": str(c)} for i, j, c in self.terms()]

    def __str__(self) -> str:
        return format_poly(self.coeffs)

    def __repr__(self) -> str:
        return f"BivariatePoly({self})"


def format_poly(coeffs: Mapping[Exponent, int]) -> str:
    """Human-readable form, highest z-degree first (e.g. ``z^3-2yz``)."""
    if not coeffs:
        return "0"
    items = sorted(coeffs.items(), key=lambda kv: (-kv[0][1], -kv[0][0]))
    out = ""
    for (i, j), c in items:
        mono = ""
        if i:
            mono += "y" if i == 1 else f"y^{i}"
        if j:
            mono += "z" if j == 1 else f"z^{j}"
        mag = abs(c)
        body = (str(mag) if mag != 1 or not mono else "") + mono
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += ("-" if c < 0 else "+") + body
    return out


class NormalForm:
    """A residue class of Z[y,z]/I on the basis y^i z^j, 0 <= i, j < n."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Mapping[Exponent, int] | None = None):
        self.order = order
        clean = {}
        for (i, j), c in (coeffs or {}).items():
            if not (0 <= i < order and 0 <= j < order):
                raise InvalidArgumentError(f"y^{i} z^{j} is not a normal-form monomial for n={order}")
            if c:
                clean[(i, j)] = int(c)
        self.coeffs = clean

    def as_poly(self) -> BivariatePoly:
        return BivariatePoly(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, frozenset(self.coeffs.items())))

    def __add__(self, other: NormalForm) -> NormalForm:
        return normal_form(self.as_poly() + other.as_poly(), self.order)

    def __mul__(self, other: NormalForm) -> NormalForm:
        if other.order != self.order:
            raise InvalidArgumentError("normal forms of different orders")
        return normal_form(self.as_poly() * other.as_poly(), self.order)

    def to_json(self) -> dict:
        return {"n": self.order, "terms": self.as_poly().to_json()}

    def __str__(self) -> str:
        return format_poly(self.coeffs)

    def __repr__(self) -> str:
        return f"NormalForm(n={self.order}, {self})"


def _check_index(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise InvalidArgumentError(f"Fibonacci index must be >= 1, got {m!r}")


@lru_cache(maxsize=None)
def _fib_table(sign: int, m: int) -> BivariatePoly:
    if m == 1:
        return BivariatePoly.const(1)
    if m == 2:
        return BivariatePoly.z()
    y, z = BivariatePoly.y(), BivariatePoly.z()
    return z * _fib_table(sign, m - 1) + sign * (y * _fib_table(sign, m - 2))


def fib_poly(m: int) -> BivariatePoly:
    """f_1 = 1, f_2 = z, f_m = z f_(m-1) - y f_(m-2)."""
    _check_index(m)
    for k in range(1, m):
        _fib_table(-1, k)  # fill the cache bottom-up, avoiding deep recursion
    return _fib_table(-1, m)


def fib_poly_closed(m: int) -> BivariatePoly:
    """sum_{i=0}^{(m-1)//2} (-1)^i C(m-1-i, i) y^i z^(m-1-2i)."""
    _check_index(m)
    return BivariatePoly(
        {(i, m - 1 - 2 * i): (-1) ** i * comb(m - 1 - i, i) for i in range((m - 1) // 2 + 1)}
    )


def standard_fib(m: int) -> BivariatePoly:
    """F_1 = 1, F_2 = z, F_m = z F_(m-1) + y F_(m-2)."""
    _check_index(m)
    for k in range(1, m):
        _fib_table(1, k)
    return _fib_table(1, m)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise InvalidOrderError(f"presentation needs n >= 2, got {n!r}")


def presentation_relations(n: int) -> tuple[BivariatePoly, BivariatePoly]:
    """(y^n - 1, (z - y - 1) f_n(y, z)), fully expanded."""
    _check_n(n)
    y, z = BivariatePoly.y(), BivariatePoly.z()
    return y**n - 1, (z - y - 1) * fib_poly(n)


@lru_cache(maxsize=None)
def _z_power_rules(n: int) -> tuple[dict[Exponent, int], ...]:
    """Normal forms of z^k for n <= k <= 2n - 2, as {(i, j): c} with i < n, j < n."""
    _, rel = presentation_relations(n)
    # z^n = z^n - (z - y - 1) f_n, whose right side has z-degree < n
    tail = (BivariatePoly.monomial(0, n) - rel).coeffs
    rules: list[dict[Exponent, int]] = []
    current = _reduce_y(tail, n)
    rules.append(current)
    for _ in range(n - 2):
        # multiply the previous rule by z and rewrite any z^n that appears
        shifted: dict[Exponent, int] = {}
        for (i, j), c in current.items():
            if j + 1 < n:
                _acc(shifted, (i, j + 1), c)
            else:
                for (i2, j2), c2 in rules[0].items():
                    _acc(shifted, ((i + i2) % n, j2), c * c2)
        current = shifted
        rules.append(current)
    return tuple(rules)


def _acc(d: dict, key, c: int) -> None:
    v = d.get(key, 0) + c
    if v:
        d[key] = v
    else:
        d.pop(key, None)


def _reduce_y(coeffs: Mapping[Exponent, int], n: int) -> dict[Exponent, int]:
    out: dict[Exponent, int] = {}
    for (i, j), c in coeffs.items():
        _acc(out, (i % n, j), c)
    return out


def normal_form(p: BivariatePoly, n: int) -> NormalForm:
    """Reduce ``p`` modulo I onto the basis y^i z^j, 0 <= i, j < n."""
    _check_n(n)
    work = dict(p.coeffs)
    rules = _z_power_rules(n)
    out: dict[Exponent, int] = {}
    while work:
        # highest z-degree first, so rewritten terms never need revisiting
        top = max(j for _, j in work)
        if top < n:
            for (i, j), c in work.items():
                _acc(out, (i % n, j), c)
            break
        pending = {k: c for k, c in work.items() if k[1] == top}
        for k in pending:
            del work[k]
        # z^top = z^(top - r) * z^(n + r') with the table covering up to z^(2n-2)
        step = min(top, 2 * n - 2)
        rule = rules[step - n]
        rest = top - step
        for (i, _), c in pending.items():
            for (i2, j2), c2 in rule.items():
                _acc(work, ((i + i2) % n, j2 + rest), c * c2)
    return NormalForm(n, out)


def phi(u: GreenElement) -> NormalForm:
    """Green class -> quotient ring: [M(l, r)] -> y^(n-r) f_l(y, z)."""
    n = u.order
    acc: dict[Exponent, int] = {}
    for label, c in u.coeffs.items():
        for k, v in _phi_basis(n, label.l, label.r).coeffs.items():
            _acc(acc, k, c * v)
    return NormalForm(n, acc)


@lru_cache(maxsize=None)
def _phi_basis(n: int, l: int, r: int) -> NormalForm:
    return normal_form(BivariatePoly.monomial((n - r) % n, 0) * fib_poly(l), n)


def psi(nf: NormalForm) -> GreenElement:
    """Quotient ring -> Green ring: y^i z^j -> a^i x^j."""
    n = nf.order
    total = GreenElement.zero(n)
    for (i, j), c in nf.coeffs.items():
        total = total + _psi_basis(n, i, j) * c
    return total


@lru_cache(maxsize=None)
def _psi_basis(n: int, i: int, j: int) -> GreenElement:
    return generator_a(n) ** i * generator_x(n) ** j


def phi_matrix(n: int) -> list[list[int]]:
    """Integer matrix whose column k is phi of the k-th label, rows indexed by y^i z^j."""
    labels = enumerate_labels(n)
    monos = [(i, j) for j in range(n) for i in range(n)]
    cols = [phi(GreenElement(n, {lab: 1})).coeffs for lab in labels]
    return [[col.get(m, 0) for col in cols] for m in monos]


def integer_determinant(m: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    a = [list(row) for row in m]
    size = len(a)
    if size == 0:
        return 1
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def label_poly(n: int, label: ModuleLabel) -> BivariatePoly:
    """y^(n-r) f_l, the unreduced preimage of [M(l, r)]."""
    return BivariatePoly.monomial((n - label.r) % n, 0) * fib_poly(label.l)
