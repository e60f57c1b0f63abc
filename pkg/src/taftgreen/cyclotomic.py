"""Exact arithmetic in the cyclotomic field Q(zeta_n) and q-combinatorics.

Elements are stored as residues modulo the n-th cyclotomic polynomial
Phi_n(x), so every element has a unique canonical representation and zero
testing is a plain coefficient comparison.  Internally a residue is an
integer numerator vector over one positive common denominator; this keeps
the hot loops on Python ints instead of ``Fraction`` objects.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Sequence

from .errors import InvalidArgumentError, InvalidOrderError

__all__ = [
    "CycloNum",
    "cyclotomic_polynomial",
    "euler_phi",
    "primitive_root",
    "q_number",
    "q_factorial",
    "q_binomial",
]


# -- integer polynomials (lowest degree first) -------------------------------


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: Sequence, b: Sequence) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Long division; ``b`` may have any nonzero leading coefficient."""
    rem = [Fraction(c) for c in a]
    _trim(rem)
    b = _trim([Fraction(c) for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(rem) - len(b) + 1, 1)
    lead = b[-1]
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        c = rem[-1] / lead
        quot[shift] = c
        for k, bk in enumerate(b):
            rem[shift + k] -= c * bk
        rem.pop()
        _trim(rem)
    return _trim(quot), rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n(x), lowest degree first.

    Uses Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
    """
    if n < 1:
        raise InvalidOrderError(f"cyclotomic order must be positive, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, cyclotomic_polynomial(d))
    quot, rem = _poly_divmod(num, den)
    assert not rem and all(c.denominator == 1 for c in quot)
    return tuple(int(c) for c in quot)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


class _Context:
    """Per-order reduction data, shared by every CycloNum of that order."""

    def __init__(self, n: int):
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.degree = len(self.modulus) - 1
        # x^k mod Phi_n for 0 <= k <= 2*degree - 2 (products of two residues)
        d = self.degree
        table = []
        cur = [0] * d
        cur[0] = 1
        for _ in range(max(2 * d - 1, 1)):
            table.append(tuple(cur))
            # multiply by x, then reduce x^d using the monic modulus
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for k in range(d):
                    cur[k] -= top * self.modulus[k]
        self.power_table = table


@lru_cache(maxsize=None)
def _context(n: int) -> _Context:
    if n < 1:
        raise InvalidOrderError(f"cyclotomic order must be positive, got {n}")
    return _Context(n)


class CycloNum:
    """An element of Q(zeta_n), immutable and canonically reduced."""

    __slots__ = ("order", "_num", "_den", "_hash", "_nonzero")

    def __init__(self, order: int, coeffs: Sequence = ()):
        ctx = _context(order)
        d = ctx.degree
        # arbitrary-length input is reduced modulo Phi_n
        if any(not isinstance(c, (int, Rational)) for c in coeffs):
            raise InvalidArgumentError("coefficients must be exact rationals")
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for c in fracs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in fracs]
        if len(ints) > d:
            ints = _reduce(ctx, ints)
        else:
            ints = ints + [0] * (d - len(ints))
        self._set(order, ints, den)

    def _set(self, order, nums, den):
        g = den
        for c in nums:
            if c:
                g = gcd(g, c)
                if g == 1:
                    break
        if g != 1:
            nums = [c // g for c in nums]
            den //= g
        nonzero = any(nums)
        if not nonzero:
            den = 1
        self._nonzero = nonzero
        self.order = order
        self._num = tuple(nums)
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, order: int, nums: list, den: int) -> CycloNum:
        obj = cls.__new__(cls)
        if den < 0:
            nums = [-c for c in nums]
            den = -den
        obj._set(order, nums, den)
        return obj

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> CycloNum:
        return cls._raw(order, [0] * _context(order).degree, 1)

    @classmethod
    def one(cls, order: int) -> CycloNum:
        return cls.from_rational(order, 1)

    @classmethod
    def from_rational(cls, order: int, value) -> CycloNum:
        value = Fraction(value)
        nums = [0] * _context(order).degree
        nums[0] = value.numerator
        return cls._raw(order, nums, value.denominator)

    # -- inspection -----------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Residue coefficients mod Phi_n, lowest degree first."""
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_zero(self) -> bool:
        return not self._nonzero

    def __bool__(self) -> bool:
        return self._nonzero

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
                terms.append(f"{c}{'*' + mono if mono else ''}")
        body = " + ".join(terms) if terms else "0"
        return f"CycloNum({self.order}: {body})"

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloNum):
            return (
                self.order == other.order
                and self._den == other._den
                and self._num == other._num
            )
        if isinstance(other, (int, Rational)):
            return self == CycloNum.from_rational(self.order, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, self._num, self._den))
        return self._hash

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> CycloNum:
        if isinstance(other, CycloNum):
            if other.order != self.order:
                raise InvalidArgumentError(
                    f"mixed cyclotomic orders {self.order} and {other.order}"
                )
            return other
        if isinstance(other, (int, Rational)):
            return CycloNum.from_rational(self.order, other)
        raise TypeError(f"cannot combine CycloNum with {type(other).__name__}")

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not o._nonzero:
            return self
        if not self._nonzero:
            return o
        da, db = self._den, o._den
        if da == db:
            nums = [x + y for x, y in zip(self._num, o._num)]
            return CycloNum._raw(self.order, nums, da)
        nums = [x * db + y * da for x, y in zip(self._num, o._num)]
        return CycloNum._raw(self.order, nums, da * db)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum._raw(self.order, [-x for x in self._num], self._den)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloNum._raw(self.order, [x * other for x in self._num], self._den)
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        ctx = _context(self.order)
        d = ctx.degree
        a, b = self._num, o._num
        if d == 1:
            return CycloNum._raw(self.order, [a[0] * b[0]], self._den * o._den)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycloNum._raw(self.order, _reduce(ctx, prod), self._den * o._den)

    __rmul__ = __mul__

    def inverse(self) -> CycloNum:
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        ctx = _context(self.order)
        # invariant: s * self == r  (mod Phi_n)
        r0, r1 = [Fraction(c) for c in ctx.modulus], _trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            quot, rem = _poly_divmod(r0, r1)
            s_next = _poly_sub(s0, _poly_mul(quot, s1))
            r0, r1 = r1, rem
            s0, s1 = s1, s_next
        # r1 is a nonzero constant since Phi_n is irreducible
        c = r1[0]
        return CycloNum(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base, exponent = self.inverse(), -exponent
        result = CycloNum.one(self.order)
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result


def _poly_sub(a: Sequence, b: Sequence) -> list:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


def _reduce(ctx: _Context, coeffs: Sequence[int]) -> list[int]:
    d = ctx.degree
    out = list(coeffs[:d]) + [0] * max(d - len(coeffs), 0)
    table = ctx.power_table
    for k in range(d, len(coeffs)):
        c = coeffs[k]
        if c:
            if k < len(table):
                row = table[k]
            else:
                row = _power_mod(ctx, k)
            for t in range(d):
                if row[t]:
                    out[t] += c * row[t]
    return out


@lru_cache(maxsize=None)
def _power_mod_cached(n: int, k: int) -> tuple[int, ...]:
    ctx = _context(n)
    d = ctx.degree
    cur = [0] * d
    cur[0] = 1
    for _ in range(k):
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for t in range(d):
                cur[t] -= top * ctx.modulus[t]
    return tuple(cur)


def _power_mod(ctx: _Context, k: int) -> tuple[int, ...]:
    return _power_mod_cached(ctx.n, k)


# -- roots of unity and q-combinatorics --------------------------------------


def primitive_root(n: int) -> CycloNum:
    """The class of x in Q[x]/Phi_n, a primitive n-th root of unity."""
    if not isinstance(n, int) or n < 2:
        raise InvalidOrderError(f"primitive root needs order n >= 2, got {n!r}")
    # for n = 2 the residue of x is the constant -1
    return CycloNum(n, [0, 1])


def _one_like(q):
    if isinstance(q, CycloNum):
        return CycloNum.one(q.order)
    return q ** 0


def q_number(m: int, q):
    """(m)_q = 1 + q + ... + q^(m-1), with (0)_q = 0."""
    if m < 0:
        raise InvalidArgumentError(f"q-number needs m >= 0, got {m}")
    one = _one_like(q)
    total = one - one
    power = one
    for _ in range(m):
        total = total + power
        power = power * q
    return total


def q_factorial(m: int, q):
    if m < 0:
        raise InvalidArgumentError(f"q-factorial needs m >= 0, got {m}")
    result = _one_like(q)
    for j in range(1, m + 1):
        result = result * q_number(j, q)
    return result


def q_binomial(m: int, i: int, q):
    """Gaussian binomial via binom(m,i) = q^i binom(m-1,i) + binom(m-1,i-1).

    No division is used, so this is valid even where (m)!_q vanishes.
    """
    if m < 0 or not 0 <= i <= m:
        raise InvalidArgumentError(f"q-binomial needs 0 <= i <= m, got m={m}, i={i}")
    one = _one_like(q)
    powers = [one]
    for _ in range(m):
        powers.append(powers[-1] * q)
    row = [one]
    for k in range(1, m + 1):
        new = [one] * (k + 1)
        for j in range(1, k):
            new[j] = powers[j] * row[j] + row[j - 1]
        row = new
    return row[i]
