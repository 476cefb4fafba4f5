"""Verification suites run by ``pgwa verify``.

Each check returns a :class:`CheckResult`; a suite is just a list of them.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import endo, poisson
from .ore import GWAParams, algebra_for, central_element, is_central, specialize
from .poisson import PVARS, pgen
from .poly import LaurentPoly, substitute_h
from .scalar import Scalar
from .semiclassical import gamma, induced_maps, sc_bracket, verify_ad_condition

__all__ = ["CheckResult", "run_suite", "random_monomial", "random_homogeneous", "SUITE"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


def random_monomial(rng: random.Random, max_h: int = 2, max_xy: int = 2) -> tuple[int, int, int, Scalar]:
    c = Scalar(rng.choice([1, -1, 2, -3]), rng.choice([1, 2]))
    return rng.randint(-max_h, max_h), rng.randint(0, max_xy), rng.randint(0, max_xy), c


def random_homogeneous(rng: random.Random, k: int, terms: int = 3) -> LaurentPoly:
    """A random element of W_k."""
    out = {}
    for _ in range(terms):
        e = (rng.randint(-3, 3), k, 0) if k >= 0 else (rng.randint(-3, 3), 0, -k)
        out[e] = Scalar(rng.randint(-4, 4), rng.randint(1, 3))
    return LaurentPoly(PVARS, out)


def check_closed_form(params: GWAParams, rng: random.Random, samples: int = 50) -> CheckResult:
    B = algebra_for(params)
    spec = poisson.gwa_spec(params)
    gens = {"h": B.h, "x": B.x, "y": B.y}
    bad = []
    for u, f in gens.items():
        for v, g in gens.items():
            want = spec.get(u, v) if u != v else LaurentPoly.zero(PVARS)
            if sc_bracket(f, g) != want:
                bad.append(f"{{{u},{v}}}")
    for _ in range(samples):
        m1, m2 = random_monomial(rng), random_monomial(rng)
        f = B.monomial(m1[3], 0, *m1[:3])
        g = B.monomial(m2[3], 0, *m2[:3])
        lhs = sc_bracket(f, g)
        if lhs != poisson.bracket(gamma(f), gamma(g), spec):
            bad.append(f"[{f}, {g}]")
    return CheckResult("closed_form_brackets", not bad, {"failures": bad, "samples": samples})


def check_centrality(params: GWAParams, rng: random.Random) -> CheckResult:
    B = algebra_for(params)
    z = central_element(params)
    central = bool(is_central(z))
    others = {name: not is_central(e) for name, e in (("x", B.x), ("y", B.y), ("h*x", B.h * B.x))}
    lim = gamma(z)
    pc = poisson.is_poisson_central(lim, poisson.gwa_spec(params))
    ok = central and all(others.values()) and pc
    return CheckResult("centrality", ok, {"xy - a(th) central": central, "noncentral detected": others,
                                          "image Poisson central": pc})


def check_induced(params: GWAParams, rng: random.Random) -> CheckResult:
    hx = ("h", "x")
    h = LaurentPoly.gen(hx, "h")
    ad = verify_ad_condition(params)
    ind = induced_maps(params)
    expect = {
        "alpha1(h)": (ind.alpha1_h, h),
        "beta1(h)": (ind.beta1_h, -h),
        "beta1(x)": (ind.beta1_x, LaurentPoly.zero(hx)),
        "delta1(h)": (ind.delta1_h, LaurentPoly.zero(hx)),
        "delta1(x)": (ind.delta1_x, -(params.a_prime.with_vars(hx) * h)),
    }
    wrong = [k for k, (got, want) in expect.items() if got != want]
    base = poisson.BracketSpec(hx, {("x", "h"): h * LaurentPoly.gen(hx, "x")})
    pske = poisson.pske_check(base, ind.beta1, ind.delta1)
    corrupted = poisson.pske_check(base, {"h": h, "x": ind.beta1_x}, ind.delta1)
    ok = bool(ad) and not wrong and bool(pske) and not corrupted
    return CheckResult("induced_maps", ok, {"ad_condition": ad.ok, "mismatches": wrong,
                                            "pske": pske.ok, "corrupted pske rejected": not corrupted.ok})


def check_jacobi(params: GWAParams, rng: random.Random) -> CheckResult:
    spec = poisson.gwa_spec(params)
    good = poisson.jacobi_check(spec)
    bad = poisson.jacobi_check(spec.replace("y", "x", pgen("x")))
    residual = bad.failures.get(("h", "x", "y"))
    ok = bool(good) and residual == pgen("h") * pgen("x")
    return CheckResult("jacobi", ok, {"gwa spec": good.ok, "corrupted residual": str(residual)})


def check_grading(params: GWAParams, rng: random.Random, samples: int = 100) -> CheckResult:
    bad = 0
    for _ in range(samples):
        k, l = rng.randint(-3, 3), rng.randint(-3, 3)
        u, v = random_homogeneous(rng, k), random_homogeneous(rng, l)
        if poisson.eigen_map(u, params) != u.scale(k):
            bad += 1
        for w in (poisson.gwa_reduce(u * v, params), poisson.gwa_bracket(u, v, params)):
            if w and set(poisson.grade_decompose(w)) != {k + l}:
                bad += 1
    return CheckResult("grading_eigen", not bad, {"violations": bad, "samples": samples})


def check_endomorphisms(params: GWAParams, rng: random.Random) -> CheckResult:
    fam = endo.enumerate_positive(params, [(1, 0), (Scalar(2), 1), (Scalar(-1, 3), -2)])
    zero = endo.find_zero_type(params)
    neg = endo.solve_negative(params)
    found = fam.instances + zero.endomorphisms + (neg.endomorphisms() if neg.feasible else [])
    failing = [str(e) for e in found if not endo.check_endomorphism(e, params)]
    inv_bad = []
    for e in fam.instances + (neg.endomorphisms() if neg.feasible else []):
        if endo.compose(e, endo.invert(e, params), params) != endo.Endomorphism.identity():
            inv_bad.append(str(e))
    return CheckResult("endomorphisms", not failing and not inv_bad,
                       {"checked": len(found), "failing": failing, "inverse failures": inv_bad})


def check_specialization(params: GWAParams, rng: random.Random, lambdas=(2, 3)) -> CheckResult:
    B = algebra_for(params)
    bad = []
    for lam in lambdas:
        lam = Scalar(lam)
        x, y, h = (specialize(g, lam) for g in (B.x, B.y, B.h))
        a_h = specialize(B.from_poly(params.a), lam)
        a_lh = specialize(B.from_poly(substitute_h(params.a, lam)), lam)
        if x * h != h * x * lam:
            bad.append(f"xh at {lam}")
        if y * h != h * y * lam.inverse():
            bad.append(f"yh at {lam}")
        if y * x != x * y + a_h - a_lh:
            bad.append(f"yx at {lam}")
    return CheckResult("specialization", not bad, {"lambdas": [str(l) for l in lambdas], "failures": bad})


SUITE: list[Callable[[GWAParams, random.Random], CheckResult]] = [
    check_closed_form,
    check_centrality,
    check_induced,
    check_jacobi,
    check_grading,
    check_endomorphisms,
    check_specialization,
]


def run_suite(params: GWAParams, seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    return [check(params, rng) for check in SUITE]
