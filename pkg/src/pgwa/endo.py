"""Poisson simplicity and Poisson endomorphisms of A_1 = C[h^{+-1}, x, y]/<xy - a(h)>.

Every Poisson endomorphism sends the unit h to a unit gamma h^j, giving three
kinds:

* positive:  h -> gamma h,      x -> b h^n x,  y -> gamma^d b^-1 h^-n y,  gamma^k = 1
* zero:      h -> gamma,        x -> 0,        y -> 0,   gamma a repeated root of a
* negative:  h -> gamma h^-1,   x -> c h^v y,  y -> b h^u x,
             with  b c h^(u+v) a(h) = a(gamma h^-1)

Roots are extracted exactly only when they live in the working cyclotomic
field; anything left over is returned as a residual polynomial.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .ore import GWAParams
from .poisson import PVARS, gwa_bracket, gwa_reduce, pgen
from .poly import LaurentPoly, PolyError, laurent_gcd, make_monic, strip_content, substitute_h
from .scalar import Scalar, as_scalar, root_of_unity_order

__all__ = [
    "SupportData",
    "support_data",
    "Endomorphism",
    "EndoReport",
    "SimplicityResult",
    "PositiveFamily",
    "ZeroTypeResult",
    "NegativeSolutionSet",
    "ClassificationError",
    "simplicity_test",
    "apply_map",
    "check_map",
    "check_endomorphism",
    "classify",
    "compose",
    "invert",
    "enumerate_positive",
    "find_zero_type",
    "solve_negative",
    "extract_roots",
]

POSITIVE, ZERO, NEGATIVE = "positive", "zero", "negative"


class ClassificationError(ValueError):
    """A map does not have one of the three endomorphism shapes."""


# -- support data ---------------------------------------------------------

@dataclass(frozen=True)
class SupportData:
    exponents: tuple[int, ...]
    coeffs: tuple[Scalar, ...]

    @property
    def m(self) -> int:
        return len(self.exponents)

    @property
    def d(self) -> int:
        return self.exponents[-1]

    @property
    def k(self) -> int:
        if self.m < 2:
            raise ValueError("k is undefined for a single-term a(h)")
        return math.gcd(*(self.d - i for i in self.exponents[:-1]))

    def coeff(self, i: int) -> Scalar:
        return self.coeffs[self.exponents.index(i)]


def support_data(a: LaurentPoly) -> SupportData:
    if a.is_zero():
        raise PolyError("support of the zero polynomial")
    if len(a.vars) != 1:
        raise PolyError(f"support_data needs a univariate polynomial, got {a.vars}")
    items = sorted(a.terms.items())
    return SupportData(tuple(e[0] for e, _ in items), tuple(c for _, c in items))


# -- simplicity -----------------------------------------------------------

@dataclass(frozen=True)
class SimplicityResult:
    simple: bool
    witness: LaurentPoly

    def __bool__(self) -> bool:
        return self.simple


def simplicity_test(params: GWAParams) -> SimplicityResult:
    """Poisson simple iff gcd(a, a') is a unit of C[h^{+-1}]."""
    w = laurent_gcd(params.a, params.a_prime)
    return SimplicityResult(w.is_unit(), w)


# -- maps ------------------------------------------------------------------

@dataclass(frozen=True)
class Endomorphism:
    """Parameters of one of the three endomorphism shapes.

    Only the fields that belong to ``kind`` are meaningful: positive uses
    (gamma, b, n), zero uses gamma, negative uses (gamma, b, c, u, v).
    """

    kind: str
    gamma: Scalar
    b: Optional[Scalar] = None
    c: Optional[Scalar] = None
    n: int = 0
    u: int = 0
    v: int = 0

    def __post_init__(self):
        if self.kind not in (POSITIVE, ZERO, NEGATIVE):
            raise ValueError(f"unknown endomorphism kind {self.kind!r}")
        object.__setattr__(self, "gamma", as_scalar(self.gamma))
        if not self.gamma:
            raise ValueError("gamma must be nonzero")
        if self.kind == ZERO:
            for name in ("b", "c"):
                object.__setattr__(self, name, None)
            object.__setattr__(self, "n", 0)
            object.__setattr__(self, "u", 0)
            object.__setattr__(self, "v", 0)
            return
        b = as_scalar(1 if self.b is None else self.b)
        if not b:
            raise ValueError("b must be nonzero")
        object.__setattr__(self, "b", b)
        if self.kind == POSITIVE:
            object.__setattr__(self, "c", None)
            object.__setattr__(self, "u", 0)
            object.__setattr__(self, "v", 0)
        else:
            c = as_scalar(1 if self.c is None else self.c)
            if not c:
                raise ValueError("c must be nonzero")
            object.__setattr__(self, "c", c)
            object.__setattr__(self, "n", 0)

    @classmethod
    def identity(cls) -> Endomorphism:
        return cls(POSITIVE, Scalar(1), Scalar(1), n=0)

    @classmethod
    def positive(cls, gamma, b=1, n: int = 0) -> Endomorphism:
        return cls(POSITIVE, as_scalar(gamma), as_scalar(b), n=n)

    @classmethod
    def zero_type(cls, gamma) -> Endomorphism:
        return cls(ZERO, as_scalar(gamma))

    @classmethod
    def negative(cls, gamma, b=1, c=1, u: int = 0, v: int = 0) -> Endomorphism:
        return cls(NEGATIVE, as_scalar(gamma), as_scalar(b), as_scalar(c), u=u, v=v)

    def images(self, params: GWAParams) -> dict[str, LaurentPoly]:
        g = self.gamma
        mono = LaurentPoly.monomial
        if self.kind == POSITIVE:
            d = support_data(params.a).d
            return {
                "h": mono(PVARS, {"h": 1}, g),
                "x": mono(PVARS, {"h": self.n, "x": 1}, self.b),
                "y": mono(PVARS, {"h": -self.n, "y": 1}, g ** d / self.b),
            }
        if self.kind == ZERO:
            return {"h": mono(PVARS, {}, g), "x": LaurentPoly.zero(PVARS), "y": LaurentPoly.zero(PVARS)}
        return {
            "h": mono(PVARS, {"h": -1}, g),
            "x": mono(PVARS, {"h": self.v, "y": 1}, self.c),
            "y": mono(PVARS, {"h": self.u, "x": 1}, self.b),
        }

    def __str__(self) -> str:
        if self.kind == POSITIVE:
            return f"positive(gamma={self.gamma}, b={self.b}, n={self.n})"
        if self.kind == ZERO:
            return f"zero(gamma={self.gamma})"
        return f"negative(gamma={self.gamma}, b={self.b}, c={self.c}, u={self.u}, v={self.v})"


def apply_map(images: Mapping[str, LaurentPoly], f, params: GWAParams) -> LaurentPoly:
    """Apply the algebra map h, x, y -> images to f, reducing in A_1.

    Negative powers of h need images['h'] to be a unit.
    """
    f = f if isinstance(f, LaurentPoly) else LaurentPoly.constant(PVARS, f)
    f = f.with_vars(PVARS)
    imh = images["h"].with_vars(PVARS)
    imx = images["x"].with_vars(PVARS)
    imy = images["y"].with_vars(PVARS)
    cache: dict[tuple[str, int], LaurentPoly] = {}

    def power(name: str, base: LaurentPoly, e: int) -> LaurentPoly:
        key = (name, e)
        if key not in cache:
            if e < 0 and not base.is_unit():
                raise PolyError(f"image of {name} is not a unit; cannot apply to negative powers")
            cache[key] = gwa_reduce(base ** e, params)
        return cache[key]

    out = LaurentPoly.zero(PVARS)
    for (k, i, j), c in f.terms.items():
        term = power("h", imh, k) * power("x", imx, i) * power("y", imy, j)
        out = out + term.scale(c)
    return gwa_reduce(out, params)


@dataclass
class EndoReport:
    ok: bool
    residuals: dict[str, LaurentPoly] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    @property
    def failing(self) -> list[str]:
        return [k for k, v in self.residuals.items() if v]


EQUATIONS = ("{x,h} = hx", "{y,h} = -hy", "{y,x} = -a'(h)h", "xy = a(h)")


def check_map(images: Mapping[str, LaurentPoly], params: GWAParams) -> EndoReport:
    """Substitute images into the four defining equations of A_1."""
    ph, px, py = (images[g].with_vars(PVARS) for g in ("h", "x", "y"))
    ap_h = params.a_prime.with_vars(PVARS) * pgen("h")
    res = {
        EQUATIONS[0]: gwa_bracket(px, ph, params) - gwa_reduce(ph * px, params),
        EQUATIONS[1]: gwa_bracket(py, ph, params) + gwa_reduce(ph * py, params),
        EQUATIONS[2]: gwa_bracket(py, px, params) + apply_map(images, ap_h, params),
        EQUATIONS[3]: gwa_reduce(px * py, params) - apply_map(images, params.a_in(PVARS), params),
    }
    return EndoReport(not any(res.values()), res)


def check_endomorphism(psi: Endomorphism, params: GWAParams) -> EndoReport:
    return check_map(psi.images(params), params)


def _single(p: LaurentPoly, what: str) -> tuple[tuple[int, int, int], Scalar]:
    if len(p.terms) != 1:
        raise ClassificationError(f"{what} = {p} is not a single term")
    return next(iter(p.terms.items()))


def classify(images: Mapping[str, LaurentPoly], params: GWAParams) -> Endomorphism:
    """Read the parameters back off a map in one of the three shapes."""
    ph, px, py = (images[g].with_vars(PVARS) for g in ("h", "x", "y"))
    (k, i, j), gam = _single(ph, "image of h")
    if i or j:
        raise ClassificationError(f"image of h = {ph} is not a unit")
    if k == 0:
        if px or py:
            raise ClassificationError("zero-type maps must kill x and y")
        psi = Endomorphism.zero_type(gam)
    elif k == 1:
        (n, xi, yi), b = _single(px, "image of x")
        if (xi, yi) != (1, 0):
            raise ClassificationError(f"image of x = {px} is not b h^n x")
        psi = Endomorphism.positive(gam, b, n)
    elif k == -1:
        (v, xi, yi), c = _single(px, "image of x")
        if (xi, yi) != (0, 1):
            raise ClassificationError(f"image of x = {px} is not c h^v y")
        (u, xi, yi), b = _single(py, "image of y")
        if (xi, yi) != (1, 0):
            raise ClassificationError(f"image of y = {py} is not b h^u x")
        psi = Endomorphism.negative(gam, b, c, u, v)
    else:
        raise ClassificationError(f"image of h = {ph} has h-degree {k} outside {{-1, 0, 1}}")
    if psi.images(params) != {"h": ph, "x": px, "y": py}:
        raise ClassificationError("image of y does not match the shape fixed by h and x")
    return psi


def compose(psi1: Endomorphism, psi2: Endomorphism, params: GWAParams) -> Endomorphism:
    """psi1 after psi2."""
    im1 = psi1.images(params)
    im = {g: apply_map(im1, val, params) for g, val in psi2.images(params).items()}
    return classify(im, params)


def invert(psi: Endomorphism, params: GWAParams) -> Endomorphism:
    if psi.kind == ZERO:
        raise ValueError("zero-type endomorphisms are not injective")
    g = psi.gamma
    if psi.kind == POSITIVE:
        inv = Endomorphism.positive(g.inverse(), g ** psi.n / psi.b, -psi.n)
    else:
        # solve psi(phi(g)) = g for phi negative: gamma' = gamma, v' = u, u' = v
        inv = Endomorphism.negative(
            g,
            b=(g ** psi.v * psi.c).inverse(),
            c=(g ** psi.u * psi.b).inverse(),
            u=psi.v,
            v=psi.u,
        )
    ident = Endomorphism.identity()
    if compose(psi, inv, params) != ident or compose(inv, psi, params) != ident:
        raise ArithmeticError(f"inverse of {psi} failed verification")
    return inv


# -- root extraction ------------------------------------------------------

def _horner(coeffs: Sequence[Scalar], r: Scalar) -> Scalar:
    acc = Scalar(0)
    for c in reversed(coeffs):
        acc = acc * r + c
    return acc


def _deflate(coeffs: list[Scalar], r: Scalar) -> list[Scalar]:
    """Quotient of the polynomial by (z - r), assuming r is a root."""
    n = len(coeffs) - 1
    q = [Scalar(0)] * n
    acc = Scalar(0)
    for k in range(n, 0, -1):
        acc = acc * r + coeffs[k]
        q[k - 1] = acc
    return q


def _divisors(n: int, cap: int = 10**12) -> list[int]:
    n = abs(n)
    if n == 0 or n > cap:
        return []
    out = set()
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            out.update((d, n // d))
    return sorted(out)


def _rational_candidates(coeffs: Sequence[Scalar]) -> list[Fraction]:
    if not all(c.is_rational() for c in coeffs):
        return []
    fr = [c.to_fraction() for c in coeffs]
    lcm = 1
    for q in fr:
        lcm = lcm * q.denominator // math.gcd(lcm, q.denominator)
    ints = [int(q * lcm) for q in fr]
    cands = set()
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            cands.add(Fraction(p, q))
            cands.add(Fraction(-p, q))
    return sorted(cands)


def extract_roots(p: LaurentPoly, conductor: int = 1) -> tuple[list[Scalar], LaurentPoly]:
    """Distinct nonzero roots of a univariate p found exactly, plus the residual factor.

    Tries linear factors, rational candidates, then zeta_N^j at the given
    conductor; the residual is monic with every found root divided out.
    """
    var = p.vars[0]
    if p.is_zero():
        raise PolyError("roots of the zero polynomial")
    poly = make_monic(strip_content(p))
    coeffs = [poly.terms.get((i,), Scalar(0)) for i in range(poly.degree(var) + 1)]
    roots: list[Scalar] = []

    def take(r: Scalar) -> None:
        nonlocal coeffs
        found = False
        while len(coeffs) > 1 and not _horner(coeffs, r):
            coeffs = _deflate(coeffs, r)
            found = True
        if found and r not in roots:
            roots.append(r)

    for cand in _rational_candidates(coeffs):
        if len(coeffs) <= 1:
            break
        take(Scalar(cand))
    if len(coeffs) > 2:
        for j in range(conductor):
            if len(coeffs) <= 1:
                break
            take(Scalar.root_of_unity(conductor, j))
    if len(coeffs) == 2:
        take(-coeffs[0] / coeffs[1])
    residual = LaurentPoly.from_dense(var, coeffs)
    return _sorted_scalars(roots), residual


def _sorted_scalars(vals: Iterable[Scalar]) -> list[Scalar]:
    vals = list(vals)
    if not vals:
        return vals
    n = 1
    for v in vals:
        n = n * v.n // math.gcd(n, v.n)
    return sorted(vals, key=lambda s: s.promote(n).c)


# -- the three families ---------------------------------------------------

@dataclass
class PositiveFamily:
    """h -> gamma h, x -> b h^n x, y -> gamma^d b^-1 h^-n y with gamma^k = 1."""

    k: int
    d: int
    conductor: int
    gammas: list[Scalar]
    instances: list[Endomorphism]


def _require_two_terms(params: GWAParams) -> SupportData:
    sd = support_data(params.a)
    if sd.m < 2:
        raise ValueError("a(h) needs at least two terms")
    return sd


def enumerate_positive(
    params: GWAParams, samples: Iterable[tuple[object, int]] = ((1, 0),)
) -> PositiveFamily:
    sd = _require_two_terms(params)
    k = sd.k
    n_work = params.conductor * k // math.gcd(params.conductor, k)
    step = n_work // k
    gammas = _sorted_scalars(Scalar.root_of_unity(n_work, step * j) for j in range(k))
    samples = list(samples)
    instances = [Endomorphism.positive(g, b, n) for g in gammas for b, n in samples]
    return PositiveFamily(k, sd.d, n_work, gammas, instances)


@dataclass
class ZeroTypeResult:
    certificate: LaurentPoly
    exact_roots: list[Scalar]
    residual: LaurentPoly
    endomorphisms: list[Endomorphism]

    @property
    def none_exist(self) -> bool:
        """True when a(h) is squarefree, so there are no zero-type maps at all."""
        return self.certificate.is_unit()


def find_zero_type(params: GWAParams) -> ZeroTypeResult:
    cert = laurent_gcd(params.a, params.a_prime)
    if cert.is_unit():
        return ZeroTypeResult(cert, [], LaurentPoly.constant(("h",), 1), [])
    roots, residual = extract_roots(cert, params.conductor)
    endos = [Endomorphism.zero_type(r) for r in roots]
    return ZeroTypeResult(cert, roots, residual, endos)


@dataclass
class NegativeSolutionSet:
    """Solutions of b c h^s a(h) = a(gamma h^-1) with s = u + v.

    Admissible gamma solve gamma^g = c0; bc = beta_ratio * gamma^beta_exponent.
    """

    feasible: bool
    s: Optional[int] = None
    g: Optional[int] = None
    c0: Optional[Scalar] = None
    beta_ratio: Optional[Scalar] = None
    beta_exponent: Optional[int] = None
    solutions: list[tuple[Scalar, Scalar]] = field(default_factory=list)
    residual: Optional[LaurentPoly] = None
    conductor: int = 1
    reason: str = ""

    def bc(self, gamma: Scalar) -> Scalar:
        return self.beta_ratio * gamma ** self.beta_exponent

    def instance(self, gamma: Scalar, b=1, u: int = 0) -> Endomorphism:
        b = as_scalar(b)
        return Endomorphism.negative(gamma, b, self.bc(gamma) / b, u=u, v=self.s - u)

    def endomorphisms(self, b=1, u: int = 0) -> list[Endomorphism]:
        return [self.instance(g, b, u) for g, _ in self.solutions]


def _combine(g1: int, c1: Scalar, g2: int, c2: Scalar) -> tuple[int, Scalar]:
    """From z^g1 = c1 and z^g2 = c2 derive z^gcd = c via Bezout."""
    old_r, r = g1, g2
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, c1 ** old_s * c2 ** old_t


def _satisfies_relation(a: LaurentPoly, gamma: Scalar, bc: Scalar, s: int) -> bool:
    return a.shift({"h": s}).scale(bc) == substitute_h(a, gamma, -1)


def solve_negative(params: GWAParams) -> NegativeSolutionSet:
    sd = _require_two_terms(params)
    ex, m = sd.exponents, sd.m
    sums = {ex[j] + ex[m - 1 - j] for j in range(m)}
    if len(sums) != 1:
        return NegativeSolutionSet(False, reason=f"support {ex} is not symmetric")
    lo, hi = ex[0], ex[-1]
    s = -(lo + hi)
    a_lo, a_hi = sd.coeff(lo), sd.coeff(hi)
    constraints = []
    for ij in ex[1:]:
        mirror = lo + hi - ij
        constraints.append((ij - lo, sd.coeff(mirror) * a_lo / (sd.coeff(ij) * a_hi)))
    g, c0 = constraints[0]
    for e, c in constraints[1:]:
        g, c0 = _combine(g, c0, e, c)
    base = dict(s=s, g=g, c0=c0, beta_ratio=a_hi / a_lo, beta_exponent=hi)
    for e, c in constraints:
        if c0 ** (e // g) != c:
            return NegativeSolutionSet(False, reason="coefficient constraints on gamma are inconsistent", **base)

    order = root_of_unity_order(c0)
    if order is not None:
        n_work = math.lcm(params.conductor, g * order)
        gammas = [r for r in (Scalar.root_of_unity(n_work, j) for j in range(n_work)) if r ** g == c0]
        gammas = _sorted_scalars(gammas)
        residual = LaurentPoly.constant(("z",), 1)
    else:
        n_work = params.conductor
        zpoly = LaurentPoly(("z",), {(g,): 1, (0,): -c0})
        gammas, residual = extract_roots(zpoly, n_work)

    out = NegativeSolutionSet(True, conductor=n_work, residual=residual, **base)
    for gam in gammas:
        bc = out.bc(gam)
        if not _satisfies_relation(params.a, gam, bc, s):
            raise ArithmeticError(f"gamma = {gam}, bc = {bc} fails the defining relation")
        out.solutions.append((gam, bc))
    return out
