"""Normal-form arithmetic in the iterated Ore extension

    B = F[h^{+-1}][x; alpha][y; beta, delta],   F = C[t^{+-1}],

with alpha(h) = t h, beta(h) = t^-1 h, beta(x) = x, delta(h) = 0 and
delta(x) = a(h) - a(t h).  Elements are stored on the PBW basis
``t^a h^b x^i y^j`` (y rightmost).

The same engine, built with a nonzero scalar ``q``, is the specialization
B_q = B / (t - q)B, where every power of t is folded into the coefficient.
"""
from __future__ import annotations

import math
import threading
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping, Optional, Union

from .poly import LaurentPoly, PolyError, format_terms, substitute_h
from .scalar import Scalar, as_scalar, root_of_unity_order

__all__ = [
    "GWAParams",
    "GWAParamsError",
    "OreAlgebra",
    "OreElement",
    "CentralityReport",
    "SpecializationWarning",
    "ore_mul",
    "commutator",
    "is_central",
    "specialize",
    "central_element",
    "algebra_for",
]

Key = tuple[int, int, int, int]  # (t-exp, h-exp, x-deg, y-deg)


class GWAParamsError(ValueError):
    """a(h) violates the standing assumptions (nonzero, not a unit)."""


class SpecializationWarning(UserWarning):
    """Specialization at t = 1 or at a root of unity."""


@dataclass(frozen=True)
class GWAParams:
    """The defining polynomial a(h) plus the working conductor."""

    a: LaurentPoly
    conductor: int = 1

    def __post_init__(self):
        a = self.a
        if not isinstance(a, LaurentPoly):
            raise GWAParamsError(f"a(h) must be a LaurentPoly, got {type(a).__name__}")
        if a.vars != ("h",):
            try:
                a = a.with_vars(("h",))
            except PolyError:
                raise GWAParamsError(f"a(h) may only involve h, got variables {a.vars}") from None
            object.__setattr__(self, "a", a)
        if a.is_zero():
            raise GWAParamsError("a(h) must be nonzero")
        if len(a.terms) < 2:
            raise GWAParamsError(f"a(h) = {a} is a unit; at least two terms are required")
        if self.conductor < 1:
            raise GWAParamsError(f"conductor must be positive, got {self.conductor}")
        n = self.conductor
        m = a.conductor()
        object.__setattr__(self, "conductor", n * m // math.gcd(n, m))

    def with_conductor(self, n: int) -> GWAParams:
        return GWAParams(self.a, self.conductor * n // math.gcd(self.conductor, n))

    @property
    def a_prime(self) -> LaurentPoly:
        return self.a.derivative("h")

    def a_in(self, vars: tuple[str, ...]) -> LaurentPoly:
        return self.a.with_vars(vars)

    def a_th(self) -> LaurentPoly:
        """a(t h) over (t, h)."""
        a = self.a_in(("t", "h"))
        return substitute_h(a, LaurentPoly.gen(("t", "h"), "t"))


class OreAlgebra:
    """Multiplication engine for B (``q=None``) or its specialization B_q."""

    def __init__(self, params: GWAParams, q: Union[Scalar, int, None] = None):
        self.params = params
        if q is not None:
            q = as_scalar(q)
            if not q:
                raise ValueError("cannot specialize at t = 0")
        self.q = q
        self.degenerate = q is not None and (q == 1 or root_of_unity_order(q) is not None)
        self._lock = threading.Lock()
        self._yx: dict[tuple[int, int], dict[Key, Scalar]] = {}
        self._dx: dict[int, dict[tuple[int, int], Scalar]] = {}
        self._qpow: dict[int, Scalar] = {}
        # delta(x) = a(h) - a(th) as {(t-exp, h-exp): coeff}
        d: dict[tuple[int, int], Scalar] = {}
        for (n,), c in params.a.terms.items():
            _acc(d, (0, n), c)
            _acc(d, (n, n), -c)
        self._delta_x = {k: v for k, v in d.items() if v}

    # -- element construction ----------------------------------------------
    @property
    def symbolic(self) -> bool:
        return self.q is None

    def element(self, terms: Mapping[Key, object] | None = None) -> OreElement:
        out: dict[Key, Scalar] = {}
        for k, c in (terms or {}).items():
            ta, hb, i, j = k
            if i < 0 or j < 0:
                raise ValueError(f"x and y degrees must be non-negative, got {k}")
            c = as_scalar(c)
            if c:
                self._add(out, ta, hb, i, j, c)
        return OreElement(self, {k: c for k, c in out.items() if c})

    def monomial(self, c=1, t: int = 0, h: int = 0, x: int = 0, y: int = 0) -> OreElement:
        return self.element({(t, h, x, y): c})

    @property
    def one(self) -> OreElement:
        return self.monomial()

    @property
    def zero(self) -> OreElement:
        return OreElement(self, {})

    @property
    def t(self) -> OreElement:
        return self.monomial(t=1)

    @property
    def h(self) -> OreElement:
        return self.monomial(h=1)

    @property
    def h_inv(self) -> OreElement:
        return self.monomial(h=-1)

    @property
    def x(self) -> OreElement:
        return self.monomial(x=1)

    @property
    def y(self) -> OreElement:
        return self.monomial(y=1)

    def from_poly(self, p: LaurentPoly) -> OreElement:
        """Read a commutative polynomial in (t,) h, x, y as a normal-ordered element."""
        names = ("t", "h", "x", "y")
        unknown = set(p.vars) - set(names)
        if unknown:
            raise PolyError(f"cannot lift variables {sorted(unknown)} into B")
        idx = [p.vars.index(v) if v in p.vars else None for v in names]
        terms = {}
        for e, c in p.terms.items():
            terms[tuple(e[i] if i is not None else 0 for i in idx)] = c
        return self.element(terms)

    # -- internals ---------------------------------------------------------
    def _qp(self, k: int) -> Scalar:
        v = self._qpow.get(k)
        if v is None:
            v = self._qpow[k] = self.q ** k
        return v

    def _add(self, out: dict, ta: int, hb: int, i: int, j: int, c: Scalar) -> None:
        if self.q is None:
            _acc(out, (ta, hb, i, j), c)
        else:
            _acc(out, (0, hb, i, j), c * self._qp(ta) if ta else c)

    def _delta_xpow(self, p: int) -> dict[tuple[int, int], Scalar]:
        """delta(x^p) = sum_{r<p} x^r delta(x) x^(p-1-r), as the coefficient of x^(p-1).

        Moving delta(x) left past x^r applies alpha^r: t^u h^v -> t^(u + r v) h^v.
        """
        got = self._dx.get(p)
        if got is not None:
            return got
        out: dict[tuple[int, int], Scalar] = {}
        for r in range(p):
            for (u, v), c in self._delta_x.items():
                _acc(out, (u + r * v, v), c)
        out = {k: c for k, c in out.items() if c}
        with self._lock:
            self._dx[p] = out
        return out

    def _y_times(self, elem: Mapping[Key, Scalar]) -> dict[Key, Scalar]:
        """Left multiplication by y: y r = beta(r) y + delta(r)."""
        out: dict[Key, Scalar] = {}
        for (u, v, p, qd), w in elem.items():
            # beta(t^u h^v) = t^(u - v) h^v ; delta vanishes on F[h^{+-1}]
            self._add(out, u - v, v, p, qd + 1, w)
            if p:
                for (du, dv), dc in self._delta_xpow(p).items():
                    self._add(out, u - v + du, v + dv, p - 1, qd, w * dc)
        return {k: c for k, c in out.items() if c}

    def _yx_normal(self, j: int, k: int) -> dict[Key, Scalar]:
        """Normal form of y^j x^k, memoized."""
        got = self._yx.get((j, k))
        if got is not None:
            return got
        if j == 0:
            res = {(0, 0, k, 0): Scalar(1)}
        else:
            res = self._y_times(self._yx_normal(j - 1, k))
        with self._lock:
            self._yx[(j, k)] = res
        return res

    def mul(self, f: OreElement, g: OreElement) -> OreElement:
        if f.algebra is not self and f.algebra != self:
            raise ValueError("operands belong to different algebras")
        if g.algebra is not self and g.algebra != self:
            raise ValueError("operands belong to different algebras")
        out: dict[Key, Scalar] = {}
        for (a, b, i, j), c1 in f.terms.items():
            for (c, e, k, l), c2 in g.terms.items():
                # h^b x^i y^j h^e = t^(e(i-j)) h^(b+e) x^i y^j
                ta = a + c + e * (i - j)
                cc = c1 * c2
                for (u, v, p, qd), w in self._yx_normal(j, k).items():
                    # x^i t^u h^v = t^(u + i v) h^v x^i
                    self._add(out, ta + u + i * v, b + e + v, i + p, qd + l, cc * w)
        return OreElement(self, {key: val for key, val in out.items() if val})

    def __eq__(self, other) -> bool:
        if not isinstance(other, OreAlgebra):
            return NotImplemented
        if self.params != other.params:
            return False
        if self.q is None or other.q is None:
            return self.q is None and other.q is None
        return self.q == other.q

    def __hash__(self) -> int:
        return hash((self.params, self.q))

    def __repr__(self) -> str:
        where = "t" if self.q is None else str(self.q)
        return f"OreAlgebra(a={self.params.a}, q={where})"


def _acc(d: dict, key, c) -> None:
    v = d.get(key)
    d[key] = c if v is None else v + c


class OreElement:
    """Immutable element of B (or B_q) on the basis t^a h^b x^i y^j."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: OreAlgebra, terms: dict[Key, Scalar]):
        self.algebra = algebra
        self.terms = terms

    def _wrap(self, other) -> OreElement:
        if isinstance(other, OreElement):
            if other.algebra is not self.algebra and other.algebra != self.algebra:
                raise ValueError("operands belong to different algebras")
            return other
        s = as_scalar(other)
        if s is NotImplemented:
            return NotImplemented
        return self.algebra.element({(0, 0, 0, 0): s})

    def __add__(self, other) -> OreElement:
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return OreElement(self.algebra, {k: c for k, c in out.items() if c})

    __radd__ = __add__

    def __neg__(self) -> OreElement:
        return OreElement(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> OreElement:
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> OreElement:
        return (-self) + other

    def __mul__(self, other) -> OreElement:
        if not isinstance(other, OreElement):
            s = as_scalar(other)
            if s is NotImplemented:
                return NotImplemented
            if not s:
                return self.algebra.zero
            return OreElement(self.algebra, {k: c * s for k, c in self.terms.items()})
        return self.algebra.mul(self, self._wrap(other))

    def __rmul__(self, other) -> OreElement:
        # scalars are central
        return self.__mul__(other)

    def __pow__(self, n: int) -> OreElement:
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = self.algebra.one
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, OreElement):
            return self.algebra == other.algebra and self.terms == other.terms
        s = as_scalar(other)
        if s is NotImplemented:
            return NotImplemented
        return self.terms == ({(0, 0, 0, 0): s} if s else {})

    __hash__ = None  # mutable-looking containers; compare, don't hash

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def x_degree(self) -> int:
        return max((k[2] for k in self.terms), default=-1)

    def y_degree(self) -> int:
        return max((k[3] for k in self.terms), default=-1)

    def t_free(self) -> bool:
        return all(k[0] == 0 for k in self.terms)

    def to_poly(self) -> LaurentPoly:
        """Commutative image of the coefficient data over (t, h, x, y)."""
        return LaurentPoly(("t", "h", "x", "y"), self.terms)

    def __iter__(self) -> Iterator[tuple[Key, Scalar]]:
        return iter(sorted(self.terms.items(), reverse=True))

    def __str__(self) -> str:
        names = ("t", "h", "x", "y")
        return format_terms(names, sorted(self.terms.items(), reverse=True))

    def __repr__(self) -> str:
        return f"OreElement('{self}')"


@lru_cache(maxsize=64)
def algebra_for(params: GWAParams, q: Optional[Scalar] = None) -> OreAlgebra:
    """Shared engine (and memo table) per parameter set."""
    return OreAlgebra(params, q)


def ore_mul(f: OreElement, g: OreElement, params: GWAParams | None = None) -> OreElement:
    if params is not None and f.algebra.params != params:
        raise ValueError("element does not belong to the given parameters")
    return f * g


def commutator(f: OreElement, g: OreElement, params: GWAParams | None = None) -> OreElement:
    """fg - gf."""
    return ore_mul(f, g, params) - ore_mul(g, f, params)


@dataclass
class CentralityReport:
    central: bool
    witness_generator: Optional[str] = None
    witness: Optional[OreElement] = None
    commutators: dict[str, OreElement] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.central


def is_central(f: OreElement, params: GWAParams | None = None) -> CentralityReport:
    """Check [f, g] = 0 for g in h, h^-1, x, y (these generate B over the central F)."""
    B = f.algebra
    if params is not None and B.params != params:
        raise ValueError("element does not belong to the given parameters")
    comms = {}
    for name, g in (("h", B.h), ("h^-1", B.h_inv), ("x", B.x), ("y", B.y)):
        c = commutator(f, g)
        comms[name] = c
        if c:
            return CentralityReport(False, name, c, comms)
    return CentralityReport(True, commutators=comms)


def central_element(params: GWAParams) -> OreElement:
    """xy - a(th), central in B."""
    B = algebra_for(params)
    return B.x * B.y - B.from_poly(params.a_th())


def specialize(f: OreElement, lam, params: GWAParams | None = None) -> OreElement:
    """Image of f in B_lambda = B / (t - lambda)B."""
    lam = as_scalar(lam)
    if lam is NotImplemented or not lam:
        raise ValueError("lambda must be a nonzero scalar")
    if params is not None and f.algebra.params != params:
        raise ValueError("element does not belong to the given parameters")
    if not f.algebra.symbolic:
        raise ValueError("element is already specialized")
    target = algebra_for(f.algebra.params, lam)
    if target.degenerate:
        warnings.warn(
            f"specializing at {lam}: 1 and roots of unity lie outside the generic parameter set",
            SpecializationWarning,
            stacklevel=2,
        )
    return target.element(f.terms)
