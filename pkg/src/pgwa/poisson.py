"""Commutative Poisson algebras on C[h^{+-1}, x, y] and the quotient by xy - a(h).

Elements are :class:`~pgwa.poly.LaurentPoly` values over ``("h", "x", "y")``.
Brackets are biderivations, so they are fixed by their values on pairs of
generators; every checker here works on generators only for that reason.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping

from .ore import GWAParams
from .poly import LaurentPoly, PolyError, formal_derivative

__all__ = [
    "PVARS",
    "BracketSpec",
    "gwa_spec",
    "bracket",
    "jacobi_check",
    "pske_check",
    "apply_derivation",
    "gwa_reduce",
    "gwa_bracket",
    "grade_decompose",
    "degree_of",
    "eigen_map",
    "is_poisson_central",
    "is_reduced",
    "pgen",
    "CheckReport",
]

PVARS = ("h", "x", "y")


def pgen(name: str, power: int = 1, vars: tuple[str, ...] = PVARS) -> LaurentPoly:
    return LaurentPoly.gen(vars, name, power)


def _as_elem(f, vars: tuple[str, ...]) -> LaurentPoly:
    if isinstance(f, LaurentPoly):
        return f if f.vars == vars else f.with_vars(vars)
    return LaurentPoly.constant(vars, f)


@dataclass(frozen=True)
class BracketSpec:
    """Generator brackets {u, v}; the opposite order follows by antisymmetry."""

    vars: tuple[str, ...]
    values: Mapping[tuple[str, str], LaurentPoly]

    def __post_init__(self):
        norm = {}
        for (u, v), val in self.values.items():
            if u not in self.vars or v not in self.vars:
                raise PolyError(f"bracket pair ({u}, {v}) not among {self.vars}")
            if u == v:
                raise PolyError(f"{{{u}, {u}}} must vanish; do not specify it")
            if (v, u) in norm:
                raise PolyError(f"pair ({u}, {v}) given in both orders")
            norm[(u, v)] = _as_elem(val, self.vars)
        object.__setattr__(self, "values", norm)

    def get(self, u: str, v: str) -> LaurentPoly:
        if (u, v) in self.values:
            return self.values[(u, v)]
        if (v, u) in self.values:
            return -self.values[(v, u)]
        return LaurentPoly.zero(self.vars)

    def replace(self, u: str, v: str, value: LaurentPoly) -> BracketSpec:
        vals = {k: w for k, w in self.values.items() if k not in ((u, v), (v, u))}
        vals[(u, v)] = value
        return BracketSpec(self.vars, vals)


def gwa_spec(params: GWAParams) -> BracketSpec:
    """{x,h} = hx, {y,h} = -hy, {y,x} = -a'(h) h."""
    h, x, y = pgen("h"), pgen("x"), pgen("y")
    ap = params.a_prime.with_vars(PVARS)
    return BracketSpec(PVARS, {("x", "h"): h * x, ("y", "h"): -(h * y), ("y", "x"): -(ap * h)})


def bracket(f, g, spec: BracketSpec) -> LaurentPoly:
    """The biderivation sum_{u,v} df/du * dg/dv * {u, v}."""
    f, g = _as_elem(f, spec.vars), _as_elem(g, spec.vars)
    out = LaurentPoly.zero(spec.vars)
    if f.is_constant() or g.is_constant():
        return out
    df = {u: formal_derivative(f, u) for u in spec.vars}
    dg = {v: formal_derivative(g, v) for v in spec.vars}
    for u, v in itertools.permutations(spec.vars, 2):
        if df[u] and dg[v]:
            b = spec.get(u, v)
            if b:
                out = out + df[u] * dg[v] * b
    return out


@dataclass
class CheckReport:
    ok: bool
    failures: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def jacobi_check(spec: BracketSpec) -> CheckReport:
    """J(u,v,w) = {u,{v,w}} + {v,{w,u}} + {w,{u,v}} on every generator triple.

    For a biderivation the Jacobiator is a triderivation, so generators suffice.
    """
    failures = {}
    for u, v, w in itertools.combinations(spec.vars, 3):
        gu, gv, gw = (pgen(n, vars=spec.vars) for n in (u, v, w))
        j = (
            bracket(gu, spec.get(v, w), spec)
            + bracket(gv, spec.get(w, u), spec)
            + bracket(gw, spec.get(u, v), spec)
        )
        if j:
            failures[(u, v, w)] = j
    return CheckReport(not failures, failures)


def apply_derivation(values: Mapping[str, LaurentPoly], f, vars: tuple[str, ...]) -> LaurentPoly:
    """Extend generator values to the derivation D(f) = sum_g df/dg * D(g)."""
    f = _as_elem(f, vars)
    out = LaurentPoly.zero(vars)
    for g in vars:
        dg = values.get(g)
        if dg is None:
            continue
        dg = _as_elem(dg, vars)
        if dg:
            dfg = formal_derivative(f, g)
            if dfg:
                out = out + dfg * dg
    return out


def pske_check(
    spec: BracketSpec,
    alpha: Mapping[str, LaurentPoly],
    delta: Mapping[str, LaurentPoly],
) -> CheckReport:
    """Conditions for A[z; alpha, delta]_p with {z, a} = alpha(a) z + delta(a).

    (i) alpha is a Poisson derivation: alpha{a,b} = {alpha a, b} + {a, alpha b};
    (ii) delta{a,b} - {delta a, b} - {a, delta b} = alpha(a) delta(b) - delta(a) alpha(b).
    Both defects are biderivations in (a, b), so generator pairs suffice.
    """
    vars = spec.vars
    failures = {}
    for u, v in itertools.combinations(vars, 2):
        gu, gv = pgen(u, vars=vars), pgen(v, vars=vars)
        buv = bracket(gu, gv, spec)
        au, av = apply_derivation(alpha, gu, vars), apply_derivation(alpha, gv, vars)
        du, dv = apply_derivation(delta, gu, vars), apply_derivation(delta, gv, vars)
        r1 = apply_derivation(alpha, buv, vars) - bracket(au, gv, spec) - bracket(gu, av, spec)
        if r1:
            failures[("alpha", u, v)] = r1
        r2 = (
            apply_derivation(delta, buv, vars)
            - bracket(du, gv, spec)
            - bracket(gu, dv, spec)
            - (au * dv - du * av)
        )
        if r2:
            failures[("delta", u, v)] = r2
    return CheckReport(not failures, failures)


# -- the quotient A_1 = B_1 / <xy - a(h)> ---------------------------------

def is_reduced(f: LaurentPoly) -> bool:
    """No monomial contains both x and y."""
    ix, iy = f.var_index("x"), f.var_index("y")
    return all(not (e[ix] and e[iy]) for e in f.terms)


def gwa_reduce(f, params: GWAParams) -> LaurentPoly:
    """Canonical coset representative: h^k x^i y^j -> a(h)^m h^k x^(i-m) y^(j-m), m = min(i, j)."""
    f = _as_elem(f, PVARS)
    a = params.a_in(PVARS)
    apow = {0: LaurentPoly.constant(PVARS, 1)}
    out: dict[tuple[int, int, int], object] = {}
    extra = LaurentPoly.zero(PVARS)
    for (k, i, j), c in f.terms.items():
        m = min(i, j)
        if not m:
            v = out.get((k, i, j))
            out[(k, i, j)] = c if v is None else v + c
            continue
        if m not in apow:
            apow[m] = a ** m
        extra = extra + apow[m].shift({"h": k, "x": i - m, "y": j - m}).scale(c)
    return LaurentPoly(PVARS, out) + extra


def gwa_bracket(f, g, params: GWAParams, spec: BracketSpec | None = None) -> LaurentPoly:
    """Bracket in A_1: bracket in B_1, then reduce."""
    spec = spec or gwa_spec(params)
    return gwa_reduce(bracket(gwa_reduce(f, params), gwa_reduce(g, params), spec), params)


def degree_of(exps: tuple[int, int, int]) -> int:
    """deg h = 0, deg x = 1, deg y = -1."""
    return exps[1] - exps[2]


def grade_decompose(f) -> dict[int, LaurentPoly]:
    f = _as_elem(f, PVARS)
    parts: dict[int, dict] = {}
    for e, c in f.terms.items():
        parts.setdefault(degree_of(e), {})[e] = c
    return {k: LaurentPoly(PVARS, v) for k, v in sorted(parts.items())}


def eigen_map(f, params: GWAParams) -> LaurentPoly:
    """a -> {a, h} h^-1; multiplies each degree-k component by k."""
    return gwa_bracket(f, pgen("h"), params).shift({"h": -1})


def is_poisson_central(f, spec: BracketSpec) -> bool:
    f = _as_elem(f, spec.vars)
    return all(not bracket(f, pgen(g, vars=spec.vars), spec) for g in spec.vars)
