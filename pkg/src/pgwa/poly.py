"""Sparse multivariate Laurent polynomials with cyclotomic coefficients.

Variables are named; the usual layouts are ``("t", "h")`` for the base ring
of the Ore extension, ``("h",)`` for ``a(h)``, and ``("h", "x", "y")`` for
the commutative Poisson algebra.  Only the substitution helpers know what
``t`` and ``h`` mean; the arithmetic is generic.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .scalar import Scalar, as_scalar

__all__ = [
    "LaurentPoly",
    "PolyError",
    "NotDivisibleError",
    "formal_derivative",
    "substitute_h",
    "evaluate_t",
    "divide_by_t_minus_1",
    "laurent_gcd",
    "strip_content",
]

EXPONENT_LIMIT = 2**31

Coeff = Union[int, Fraction, Scalar]


class PolyError(ValueError):
    """Invalid polynomial operation (mismatched variables, bad substitution, ...)."""


class NotDivisibleError(PolyError):
    """Exact division failed."""


class LaurentPoly:
    """Immutable sparse Laurent polynomial ``sum c * v1^e1 * ... * vk^ek``."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Iterable[str], terms: Mapping[tuple[int, ...], Coeff] | None = None):
        self.vars = tuple(vars)
        clean: dict[tuple[int, ...], Scalar] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != len(self.vars):
                raise PolyError(f"exponent {e} does not match variables {self.vars}")
            c = as_scalar(c)
            if c is NotImplemented:
                raise PolyError(f"unsupported coefficient {c!r}")
            if c:
                _check_exponent(e)
                clean[e] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars: tuple[str, ...], terms: dict) -> LaurentPoly:
        p = object.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, vars: Iterable[str]) -> LaurentPoly:
        return cls._raw(tuple(vars), {})

    @classmethod
    def constant(cls, vars: Iterable[str], c: Coeff) -> LaurentPoly:
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def monomial(cls, vars: Iterable[str], exps: Mapping[str, int] | None = None, c: Coeff = 1) -> LaurentPoly:
        vars = tuple(vars)
        exps = exps or {}
        unknown = set(exps) - set(vars)
        if unknown:
            raise PolyError(f"unknown variables {sorted(unknown)} for {vars}")
        return cls(vars, {tuple(exps.get(v, 0) for v in vars): c})

    @classmethod
    def gen(cls, vars: Iterable[str], name: str, power: int = 1) -> LaurentPoly:
        return cls.monomial(vars, {name: power})

    @classmethod
    def from_dense(cls, var: str, coeffs: Iterable[Coeff], shift: int = 0) -> LaurentPoly:
        """Univariate polynomial from constant-first coefficients times ``var**shift``."""
        return cls((var,), {(i + shift,): c for i, c in enumerate(coeffs)})

    # -- basic structure ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_unit(self) -> bool:
        """Units of a Laurent ring are single terms with nonzero coefficient."""
        return len(self.terms) == 1

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * len(self.vars), Scalar(0))

    def var_index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise PolyError(f"unknown variable {var!r} for {self.vars}") from None

    def degree(self, var: str) -> int:
        i = self.var_index(var)
        if not self.terms:
            raise PolyError("degree of zero polynomial")
        return max(e[i] for e in self.terms)

    def low_degree(self, var: str) -> int:
        i = self.var_index(var)
        if not self.terms:
            raise PolyError("degree of zero polynomial")
        return min(e[i] for e in self.terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Scalar]]:
        """Terms in descending lexicographic exponent order."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def conductor(self) -> int:
        n = 1
        for c in self.terms.values():
            n = n * c.n // math.gcd(n, c.n)
        return n

    def with_vars(self, vars: Iterable[str]) -> LaurentPoly:
        """Re-embed into a variable list that contains every variable actually used."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(vars)}
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(vars)
            for v, k in zip(self.vars, e):
                if k:
                    if v not in pos:
                        raise PolyError(f"variable {v!r} used but missing from {vars}")
                    ne[pos[v]] = k
            out[tuple(ne)] = c
        return LaurentPoly._raw(vars, out)

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.vars != self.vars:
                raise PolyError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        s = as_scalar(other)
        if s is NotImplemented:
            return NotImplemented
        return LaurentPoly.constant(self.vars, s)

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return LaurentPoly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            s = as_scalar(other)
            if s is NotImplemented:
                return NotImplemented
            return self.scale(s)
        other = self._coerce(other)
        out: dict[tuple[int, ...], Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        for e in [e for e, c in out.items() if not c]:
            del out[e]
        for e in out:
            _check_exponent(e)
        return LaurentPoly._raw(self.vars, out)

    __rmul__ = __mul__

    def scale(self, s: Coeff) -> LaurentPoly:
        s = as_scalar(s)
        if not s:
            return LaurentPoly.zero(self.vars)
        return LaurentPoly._raw(self.vars, {e: c * s for e, c in self.terms.items()})

    def shift(self, exps: Mapping[str, int]) -> LaurentPoly:
        """Multiply by a monomial with unit coefficient."""
        delta = [0] * len(self.vars)
        for v, k in exps.items():
            delta[self.var_index(v)] = k
        out = {tuple(a + b for a, b in zip(e, delta)): c for e, c in self.terms.items()}
        for e in out:
            _check_exponent(e)
        return LaurentPoly._raw(self.vars, out)

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_unit():
                raise PolyError("negative power of a non-unit")
            (e, c), = self.terms.items()
            return LaurentPoly(self.vars, {tuple(k * n for k in e): c ** n})
        result = LaurentPoly.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            if other.vars != self.vars:
                try:
                    other = other.with_vars(self.vars)
                except PolyError:
                    return False
            return self.terms == other.terms
        s = as_scalar(other)
        if s is NotImplemented:
            return NotImplemented
        return self.terms == LaurentPoly.constant(self.vars, s).terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # -- display -----------------------------------------------------------
    def __str__(self) -> str:
        return format_terms(self.vars, self.sorted_terms())

    def __repr__(self) -> str:
        return f"LaurentPoly({self.vars!r}, '{self}')"

    # -- convenience wrappers ----------------------------------------------
    def derivative(self, var: str) -> LaurentPoly:
        return formal_derivative(self, var)

    def evaluate(self, var: str, value: Coeff) -> LaurentPoly:
        """Substitute a nonzero scalar for ``var`` and drop it from the variable list."""
        value = as_scalar(value)
        i = self.var_index(var)
        if not value and any(e[i] < 0 for e in self.terms):
            raise PolyError(f"cannot evaluate {var} at 0 with negative powers present")
        vars = self.vars[:i] + self.vars[i + 1:]
        out: dict[tuple[int, ...], Scalar] = {}
        powers: dict[int, Scalar] = {}
        for e, c in self.terms.items():
            k = e[i]
            p = powers.get(k)
            if p is None:
                p = powers[k] = value ** k
            ne = e[:i] + e[i + 1:]
            v = out.get(ne)
            out[ne] = c * p if v is None else v + c * p
        return LaurentPoly._raw(vars, {e: c for e, c in out.items() if c})


def _check_exponent(e: tuple[int, ...]) -> None:
    for k in e:
        if not -EXPONENT_LIMIT < k < EXPONENT_LIMIT:
            raise OverflowError(f"exponent {k} outside supported range")


def _coeff_str(c: Scalar) -> tuple[bool, str]:
    """Sign and magnitude text of a coefficient; magnitude '' means 1."""
    terms = c.terms()
    if len(terms) == 1:
        q, j = terms[0]
        neg = q < 0
        s = str(-c if neg else c)
        return neg, "" if s == "1" else s
    return False, f"({c})"


def format_terms(vars: tuple[str, ...], terms: list[tuple[tuple[int, ...], Scalar]]) -> str:
    parts: list[str] = []
    for e, c in terms:
        neg, mag = _coeff_str(c)
        atoms = [v if k == 1 else f"{v}^{k}" for v, k in zip(vars, e) if k]
        if atoms:
            body = "*".join(([mag] if mag else []) + atoms)
        else:
            body = mag or "1"
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) or "0"


def formal_derivative(p: LaurentPoly, var: str) -> LaurentPoly:
    """Term-wise power rule in ``var``; negative exponents allowed."""
    i = p.var_index(var)
    out = {}
    for e, c in p.terms.items():
        k = e[i]
        if k:
            ne = e[:i] + (k - 1,) + e[i + 1:]
            out[ne] = c * k
    return LaurentPoly._raw(p.vars, out)


def substitute_h(p: LaurentPoly, gamma: Union[Coeff, LaurentPoly], e: int = 1, var: str = "h") -> LaurentPoly:
    """Replace ``h^n`` by ``gamma^n h^(e*n)``.

    ``gamma`` is a nonzero scalar or a unit monomial (``t`` gives a(th) from
    a(h)); a monomial gamma must live in variables already present in ``p``.
    """
    if e not in (1, -1):
        raise PolyError("substitution sign must be +1 or -1")
    i = p.var_index(var)
    if isinstance(gamma, LaurentPoly):
        if not gamma.is_unit():
            raise PolyError("symbolic substitution factor must be a unit monomial")
        g = gamma.with_vars(p.vars)
        (ge, gc), = g.terms.items()
        if ge[i]:
            raise PolyError(f"substitution factor may not involve {var}")
    else:
        gc = as_scalar(gamma)
        if gc is NotImplemented:
            raise PolyError(f"unsupported substitution factor {gamma!r}")
        if not gc:
            raise PolyError("substitution factor must be nonzero")
        ge = (0,) * len(p.vars)
    out: dict[tuple[int, ...], Scalar] = {}
    for ex, c in p.terms.items():
        n = ex[i]
        ne = list(a + n * b for a, b in zip(ex, ge))
        ne[i] = e * n
        ne = tuple(ne)
        v = c * gc ** n
        prev = out.get(ne)
        out[ne] = v if prev is None else prev + v
    return LaurentPoly(p.vars, out)


def evaluate_t(p: LaurentPoly, lam: Coeff, var: str = "t") -> LaurentPoly:
    """Evaluate ``t`` at a nonzero scalar, dropping it from the variable list."""
    lam = as_scalar(lam)
    if not lam:
        raise PolyError("t is invertible; cannot evaluate at 0")
    return p.evaluate(var, lam)


def divide_by_t_minus_1(p: LaurentPoly, var: str = "t") -> LaurentPoly:
    """Exact quotient ``p / (t - 1)``; raises :class:`NotDivisibleError` otherwise.

    The other variables are treated as coefficients.  Negative powers of t
    are cleared by a shift, synthetic division by (t - 1) runs on each
    coefficient slice, and the shift is restored.
    """
    i = p.var_index(var)
    slices: dict[tuple[int, ...], dict[int, Scalar]] = {}
    for e, c in p.terms.items():
        rest = e[:i] + e[i + 1:]
        slices.setdefault(rest, {})[e[i]] = c
    out: dict[tuple[int, ...], Scalar] = {}
    for rest, col in slices.items():
        lo, hi = min(col), max(col)
        # synthetic division of sum_k col[k] t^k (k from lo to hi) by (t - 1)
        acc = Scalar(0)
        quot: dict[int, Scalar] = {}
        for k in range(hi, lo - 1, -1):
            acc = acc + col.get(k, 0)
            if k > lo:
                if acc:
                    quot[k - 1] = acc
        if acc:
            raise NotDivisibleError(f"{LaurentPoly(p.vars, p.terms)} is not divisible by ({var} - 1)")
        for k, c in quot.items():
            out[rest[:i] + (k,) + rest[i:]] = c
    return LaurentPoly._raw(p.vars, out)


# -- univariate helpers ------------------------------------------------------

def _dense(p: LaurentPoly) -> tuple[list[Scalar], int]:
    """Constant-first coefficients of a univariate poly and its low exponent."""
    if len(p.vars) != 1:
        raise PolyError(f"expected a univariate polynomial, got variables {p.vars}")
    if not p.terms:
        return [], 0
    lo = min(e[0] for e in p.terms)
    hi = max(e[0] for e in p.terms)
    coeffs = [Scalar(0)] * (hi - lo + 1)
    for (k,), c in p.terms.items():
        coeffs[k - lo] = c
    return coeffs, lo


def strip_content(p: LaurentPoly) -> LaurentPoly:
    """Shift a univariate Laurent poly so its lowest exponent is 0."""
    if not p.terms:
        return p
    var = p.vars[0]
    return p.shift({var: -p.low_degree(var)})


def _poly_divmod(a: list[Scalar], b: list[Scalar]) -> tuple[list[Scalar], list[Scalar]]:
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], _strip(a)
    inv = b[-1].inverse()
    q = [Scalar(0)] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv
        if c:
            q[k - db] = c
            for j, bj in enumerate(b):
                if bj:
                    a[k - db + j] = a[k - db + j] - c * bj
    return _strip(q), _strip(a[:db])


def _strip(c: list[Scalar]) -> list[Scalar]:
    while c and not c[-1]:
        c.pop()
    return c


def poly_divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Division with remainder of ordinary univariate polynomials (no negative powers)."""
    var = a.vars[0]
    da, la = _dense(a)
    db, lb = _dense(b)
    if la < 0 or lb < 0:
        raise PolyError("poly_divmod needs polynomials without negative powers")
    if not db:
        raise ZeroDivisionError("polynomial division by zero")
    da = [Scalar(0)] * la + da
    db = [Scalar(0)] * lb + db
    q, r = _poly_divmod(da, db)
    return LaurentPoly.from_dense(var, q), LaurentPoly.from_dense(var, r)


def make_monic(p: LaurentPoly) -> LaurentPoly:
    if not p.terms:
        return p
    var = p.vars[0]
    lead = p.terms[(p.degree(var),)]
    return p.scale(lead.inverse())


def laurent_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Monic gcd in a univariate Laurent ring, normalized to zero content.

    Powers of the variable are units, so they are stripped first and never
    appear in the result.
    """
    if p.is_zero() and q.is_zero():
        raise PolyError("gcd(0, 0) is undefined")
    a, b = strip_content(p), strip_content(q)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, strip_content(r)
    return make_monic(strip_content(a))


def divides(d: LaurentPoly, p: LaurentPoly) -> bool:
    """Whether d divides p in the Laurent ring."""
    if d.is_zero():
        return p.is_zero()
    _, r = poly_divmod(strip_content(p), strip_content(d))
    return r.is_zero()
