"""Semiclassical limit at t = 1.

The bracket {f, g} is the image at t = 1 of (fg - gf)/(t - 1), computed with
the noncommutative engine.  ``gamma`` is the map sending a normal-ordered
element of B to its commutative image at t = 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .ore import GWAParams, OreElement, algebra_for, commutator
from .poly import LaurentPoly, NotDivisibleError, divide_by_t_minus_1, evaluate_t

__all__ = [
    "SemiclassicalError",
    "OreData",
    "InducedDerivationData",
    "ore_data",
    "gamma",
    "sc_bracket",
    "verify_ad_condition",
    "induced_maps",
    "ADReport",
]

BASE_VARS = ("t", "h", "x")
LIMIT_VARS = ("h", "x")


class SemiclassicalError(RuntimeError):
    """A commutator in B was not divisible by t - 1: the engine is wrong."""


def gamma(f: OreElement) -> LaurentPoly:
    """Plug t = 1 into a normal-ordered element, giving an element of C[h^{+-1}, x, y]."""
    return evaluate_t(f.to_poly(), 1)


def sc_bracket(f: OreElement, g: OreElement, params: GWAParams | None = None) -> LaurentPoly:
    c = commutator(f, g, params)
    try:
        q = divide_by_t_minus_1(c.to_poly())
    except NotDivisibleError as exc:
        raise SemiclassicalError(f"[{f}, {g}] = {c} is not divisible by t - 1") from exc
    return evaluate_t(q, 1)


@dataclass(frozen=True)
class OreData:
    """Generator values of the twisting maps, as polynomials over (t, h, x).

    ``alpha_h`` belongs to the first step F[h^{+-1}][x; alpha]; the rest to the
    second step [y; beta, delta].
    """

    alpha_h: LaurentPoly
    beta_h: LaurentPoly
    beta_x: LaurentPoly
    delta_h: LaurentPoly
    delta_x: LaurentPoly

    def replace(self, **kw) -> OreData:
        vals = {k: getattr(self, k) for k in ("alpha_h", "beta_h", "beta_x", "delta_h", "delta_x")}
        for k, v in kw.items():
            if k not in vals:
                raise KeyError(k)
            vals[k] = v if isinstance(v, LaurentPoly) else LaurentPoly.constant(BASE_VARS, v)
            if vals[k].vars != BASE_VARS:
                vals[k] = vals[k].with_vars(BASE_VARS)
        return OreData(**vals)


def _split(elem: OreElement, var_index: int) -> dict[int, LaurentPoly]:
    """Group an element by the degree of x (2) or y (3), dropping that variable."""
    out: dict[int, dict] = {}
    for (a, b, i, j), c in elem.terms.items():
        if var_index == 2:
            out.setdefault(i, {})[(a, b, j)] = c
        else:
            out.setdefault(j, {})[(a, b, i)] = c
    return {k: LaurentPoly(BASE_VARS, v) for k, v in out.items()}


def ore_data(params: GWAParams) -> OreData:
    """Read alpha, beta, delta off the engine: x h = alpha(h) x and y g = beta(g) y + delta(g)."""
    B = algebra_for(params)
    zero = LaurentPoly.zero(BASE_VARS)
    xh = _split(B.x * B.h, 2)
    if set(xh) - {1}:
        raise SemiclassicalError(f"x h = {B.x * B.h} is not of the form alpha(h) x")
    yh = _split(B.y * B.h, 3)
    yx = _split(B.y * B.x, 3)
    if set(yh) - {0, 1} or set(yx) - {0, 1}:
        raise SemiclassicalError("y g is not of the form beta(g) y + delta(g)")
    return OreData(
        alpha_h=xh.get(1, zero),
        beta_h=yh.get(1, zero),
        beta_x=yx.get(1, zero),
        delta_h=yh.get(0, zero),
        delta_x=yx.get(0, zero),
    )


@dataclass
class ADReport:
    ok: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _defects(data: OreData) -> dict[str, LaurentPoly]:
    h = LaurentPoly.gen(BASE_VARS, "h")
    x = LaurentPoly.gen(BASE_VARS, "x")
    return {
        "(alpha-id)(h)": data.alpha_h - h,
        "(beta-id)(h)": data.beta_h - h,
        "(beta-id)(x)": data.beta_x - x,
        "delta(h)": data.delta_h,
        "delta(x)": data.delta_x,
    }


def verify_ad_condition(source: GWAParams | OreData) -> ADReport:
    """(alpha - id) and delta must land in (t - 1)A; checked on generators."""
    data = ore_data(source) if isinstance(source, GWAParams) else source
    failures = []
    for name, val in _defects(data).items():
        try:
            divide_by_t_minus_1(val)
        except NotDivisibleError:
            failures.append(name)
    return ADReport(not failures, failures)


@dataclass(frozen=True)
class InducedDerivationData:
    """alpha_1, beta_1, delta_1 on generators, as t-free polynomials over (h, x)."""

    alpha1_h: LaurentPoly
    beta1_h: LaurentPoly
    beta1_x: LaurentPoly
    delta1_h: LaurentPoly
    delta1_x: LaurentPoly

    @property
    def alpha1(self) -> dict[str, LaurentPoly]:
        return {"h": self.alpha1_h}

    @property
    def beta1(self) -> dict[str, LaurentPoly]:
        return {"h": self.beta1_h, "x": self.beta1_x}

    @property
    def delta1(self) -> dict[str, LaurentPoly]:
        return {"h": self.delta1_h, "x": self.delta1_x}


def induced_maps(source: GWAParams | OreData) -> InducedDerivationData:
    data = ore_data(source) if isinstance(source, GWAParams) else source
    report = verify_ad_condition(data)
    if not report:
        raise NotDivisibleError(f"divisibility by t - 1 fails for {', '.join(report.failures)}")
    d = _defects(data)

    def limit(p: LaurentPoly) -> LaurentPoly:
        return evaluate_t(divide_by_t_minus_1(p), 1)

    return InducedDerivationData(
        alpha1_h=limit(d["(alpha-id)(h)"]),
        beta1_h=limit(d["(beta-id)(h)"]),
        beta1_x=limit(d["(beta-id)(x)"]),
        delta1_h=limit(d["delta(h)"]),
        delta1_x=limit(d["delta(x)"]),
    )
