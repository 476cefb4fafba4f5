"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A :class:`Scalar` stores its conductor ``N`` and a tuple of ``phi(N)``
rational coordinates in the power basis ``1, z, ..., z^(phi(N)-1)`` where
``z = zeta_N``.  Operands living at different conductors are promoted to the
least common multiple before any arithmetic.

>>> z4 = Scalar.root_of_unity(4)
>>> z4 * z4
Scalar('-1')
>>> Scalar(1, 2) + Scalar(1, 3)
Scalar('5/6')
"""
from __future__ import annotations

import functools
import math
import threading
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "Scalar",
    "ScalarZeroDivisionError",
    "cyclotomic_polynomial",
    "euler_phi",
    "root_of_unity_order",
    "as_scalar",
]

Number = Union[int, Fraction, "Scalar"]


class ScalarZeroDivisionError(ZeroDivisionError):
    """Raised when inverting the zero scalar."""


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi needs a positive integer, got {n}")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _int_poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den monic; coefficient lists are low-to-high
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for i, dc in enumerate(den):
                num[k - dd + i] -= c * dc
    rem = num[:dd] or [0]
    return quot, rem


def _int_poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the n-th cyclotomic polynomial.

    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    """
    if n < 1:
        raise ValueError(f"cyclotomic_polynomial needs n >= 1, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in _divisors(n)[:-1]:
        den = _int_poly_mul(den, list(cyclotomic_polynomial(d)))
    quot, rem = _int_poly_divmod(num, den)
    assert all(r == 0 for r in rem), "cyclotomic division left a remainder"
    return tuple(quot)


class _Field:
    """Per-conductor data: degree, minimal polynomial, reduced powers of zeta."""

    def __init__(self, n: int):
        self.n = n
        self.phi = cyclotomic_polynomial(n)
        self.degree = len(self.phi) - 1
        # zeta^k reduced, for 0 <= k < n
        powers = []
        cur = [Fraction(0)] * self.degree
        cur[0] = Fraction(1)
        for _ in range(n):
            powers.append(tuple(cur))
            cur = self._shift(cur)
        self.powers = powers

    def _shift(self, v: list[Fraction]) -> list[Fraction]:
        # multiply by zeta, reduce with the monic minimal polynomial
        d = self.degree
        top = v[-1]
        out = [Fraction(0)] + list(v[:-1])
        if top:
            for i in range(d):
                out[i] -= top * self.phi[i]
        return out

    def reduce(self, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
        d = self.degree
        c = list(coeffs)
        for k in range(len(c) - 1, d - 1, -1):
            top = c[k]
            if top:
                for i in range(d):
                    c[k - d + i] -= top * self.phi[i]
                c[k] = Fraction(0)
        c = c[:d]
        c.extend([Fraction(0)] * (d - len(c)))
        return tuple(c)


_FIELD_LOCK = threading.Lock()
_FIELDS: dict[int, _Field] = {}


def _field(n: int) -> _Field:
    f = _FIELDS.get(n)
    if f is None:
        with _FIELD_LOCK:
            f = _FIELDS.get(n)
            if f is None:
                f = _FIELDS[n] = _Field(n)
    return f


class Scalar:
    """An immutable element of Q(zeta_N)."""

    __slots__ = ("n", "c", "_hash")

    def __init__(self, value: Union[int, Fraction, str] = 0, den: int = 1):
        self.n = 1
        self.c = (Fraction(value, den) if den != 1 else Fraction(value),)
        self._hash = None

    @classmethod
    def _make(cls, n: int, coeffs: tuple[Fraction, ...]) -> Scalar:
        s = object.__new__(cls)
        s.n = n
        s.c = coeffs
        s._hash = None
        return s

    @classmethod
    def from_coeffs(cls, n: int, coeffs: Iterable) -> Scalar:
        """Build from coordinates in the power basis of Q(zeta_n), reducing as needed."""
        f = _field(n)
        return cls._make(n, f.reduce([Fraction(x) for x in coeffs]))

    @classmethod
    def root_of_unity(cls, n: int, j: int = 1) -> Scalar:
        """zeta_n ** j."""
        if n < 1:
            raise ValueError(f"conductor must be positive, got {n}")
        f = _field(n)
        return cls._make(n, f.powers[j % n])

    # -- structure -------------------------------------------------------
    @property
    def conductor(self) -> int:
        return self.n

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    def promote(self, m: int) -> Scalar:
        """Embed into Q(zeta_m); requires the current conductor to divide m."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"cannot promote conductor {self.n} to {m}")
        if self.n == 1:
            f = _field(m)
            out = [Fraction(0)] * f.degree
            out[0] = self.c[0]
            return Scalar._make(m, tuple(out))
        f = _field(m)
        step = m // self.n
        out = [Fraction(0)] * f.degree
        for i, ci in enumerate(self.c):
            if ci:
                for k, pk in enumerate(f.powers[(i * step) % m]):
                    if pk:
                        out[k] += ci * pk
        return Scalar._make(m, tuple(out))

    def demote(self) -> Scalar:
        """Best-effort move to the smallest conductor holding this value."""
        if self.is_rational():
            return Scalar._make(1, (self.c[0],))
        for d in _divisors(self.n)[1:-1]:
            cand = self._try_demote(d)
            if cand is not None:
                return cand
        return self

    def _try_demote(self, d: int) -> Scalar | None:
        # solve sum_j y_j * zeta_n^{(n/d) j} = self for j < phi(d)
        f = _field(self.n)
        step = self.n // d
        deg_d = euler_phi(d)
        cols = [f.powers[(j * step) % self.n] for j in range(deg_d)]
        rows = [[cols[j][r] for j in range(deg_d)] + [self.c[r]] for r in range(f.degree)]
        # gaussian elimination over Q
        piv_row = 0
        pivots = []
        for col in range(deg_d):
            pr = next((r for r in range(piv_row, len(rows)) if rows[r][col]), None)
            if pr is None:
                continue
            rows[piv_row], rows[pr] = rows[pr], rows[piv_row]
            inv = 1 / rows[piv_row][col]
            rows[piv_row] = [v * inv for v in rows[piv_row]]
            for r in range(len(rows)):
                if r != piv_row and rows[r][col]:
                    fac = rows[r][col]
                    rows[r] = [a - fac * b for a, b in zip(rows[r], rows[piv_row])]
            pivots.append(col)
            piv_row += 1
        if any(rows[r][-1] for r in range(piv_row, len(rows))):
            return None
        sol = [Fraction(0)] * deg_d
        for r, col in enumerate(pivots):
            sol[col] = rows[r][-1]
        return Scalar.from_coeffs(d, sol)

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _align(a: Scalar, b: Scalar) -> tuple[Scalar, Scalar]:
        if a.n == b.n:
            return a, b
        m = a.n * b.n // math.gcd(a.n, b.n)
        return a.promote(m), b.promote(m)

    def __add__(self, other: Number) -> Scalar:
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = Scalar._align(self, other)
        return Scalar._make(a.n, tuple(x + y for x, y in zip(a.c, b.c)))

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar._make(self.n, tuple(-x for x in self.c))

    def __sub__(self, other: Number) -> Scalar:
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = Scalar._align(self, other)
        return Scalar._make(a.n, tuple(x - y for x, y in zip(a.c, b.c)))

    def __rsub__(self, other: Number) -> Scalar:
        return (-self) + other

    def __mul__(self, other: Number) -> Scalar:
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self.n == 1 and other.n == 1:
            return Scalar._make(1, (self.c[0] * other.c[0],))
        if other.n == 1:
            k = other.c[0]
            return Scalar._make(self.n, tuple(x * k for x in self.c))
        if self.n == 1:
            k = self.c[0]
            return Scalar._make(other.n, tuple(x * k for x in other.c))
        a, b = Scalar._align(self, other)
        prod = [Fraction(0)] * (2 * len(a.c) - 1)
        for i, x in enumerate(a.c):
            if x:
                for j, y in enumerate(b.c):
                    if y:
                        prod[i + j] += x * y
        return Scalar._make(a.n, _field(a.n).reduce(prod))

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ScalarZeroDivisionError("inverse of zero scalar")
        if self.n == 1 or self.is_rational():
            inv = 1 / self.c[0]
            return Scalar._make(self.n, (inv,) + self.c[1:])
        # extended Euclid on (self(z), Phi_n(z)) over Q
        f = _field(self.n)
        r0 = [Fraction(p) for p in f.phi]
        r1 = _trim(list(self.c))
        s0: list[Fraction] = [Fraction(0)]
        s1: list[Fraction] = [Fraction(1)]
        while len(r1) > 1 or r1[0]:
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _trim(_qpoly_sub(s0, _qpoly_mul(q, s1)))
        # r0 is a nonzero constant since Phi_n is irreducible
        g = r0[0]
        return Scalar.from_coeffs(self.n, [x / g for x in s0])

    def __truediv__(self, other: Number) -> Scalar:
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Number) -> Scalar:
        return as_scalar(other) * self.inverse()

    def __pow__(self, e: int) -> Scalar:
        if e < 0:
            return self.inverse() ** (-e)
        result = Scalar._make(self.n, _one_coeffs(self.n))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- comparison ------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.c[0] == other
        if not isinstance(other, Scalar):
            return NotImplemented
        a, b = Scalar._align(self, other)
        return a.c == b.c

    def __hash__(self) -> int:
        if self._hash is None:
            d = self.demote()
            self._hash = hash(d.c[0]) if d.n == 1 else hash((d.n, d.c))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def sort_key(self, n: int | None = None) -> tuple:
        """A total order used only for deterministic output."""
        s = self.promote(n) if n else self
        return (s.n, s.c)

    # -- display ---------------------------------------------------------
    def terms(self) -> list[tuple[Fraction, int]]:
        """Nonzero (coefficient, power of zeta) pairs, highest power first."""
        return [(c, j) for j, c in reversed(list(enumerate(self.c))) if c]

    def __str__(self) -> str:
        parts = []
        for c, j in self.terms():
            atom = "" if j == 0 else (f"z{self.n}" if j == 1 else f"z{self.n}^{j}")
            mag = abs(c)
            if not atom:
                body = _frac_str(mag)
            elif mag == 1:
                body = atom
            else:
                body = f"{_frac_str(mag)}*{atom}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts) or "0"

    def __repr__(self) -> str:
        return f"Scalar('{self}')"

    def is_single_term(self) -> bool:
        return sum(1 for x in self.c if x) <= 1

    def __complex__(self) -> complex:
        # display helper only
        ang = 2 * math.pi / self.n
        return sum(
            (float(c) * complex(math.cos(ang * j), math.sin(ang * j)) for j, c in enumerate(self.c)),
            0j,
        )


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@functools.lru_cache(maxsize=None)
def _one_coeffs(n: int) -> tuple[Fraction, ...]:
    d = _field(n).degree
    return (Fraction(1),) + (Fraction(0),) * (d - 1)


def _trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


def _qpoly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _qpoly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _qpoly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [Fraction(0)], _trim(a)
    lead = b[-1]
    q = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] / lead
        if c:
            q[k - db] = c
            for i, bi in enumerate(b):
                a[k - db + i] -= c * bi
    return _trim(q), _trim(a[:db] or [Fraction(0)])


def as_scalar(value) -> Scalar:
    """Coerce ints and Fractions; returns NotImplemented for foreign types."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar(value)
    return NotImplemented


def root_of_unity_order(s: Scalar) -> int | None:
    """Least e >= 1 with s**e == 1, or None if s has infinite order.

    Torsion in Q(zeta_N) is {+-zeta_N^j}, so e divides lcm(2, N).
    """
    if s.is_zero():
        return None
    bound = s.n if s.n % 2 == 0 else 2 * s.n
    for e in _divisors(bound):
        if s ** e == 1:
            return e
    return None
