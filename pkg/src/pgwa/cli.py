"""Command-line interface.

Exit codes: 0 when every check passes or a query was answered, 1 when a
verification failed, 2 on usage errors.

    pgwa simple --a "(h-1)^2"
    pgwa limit --a "h^2+1" --pair y,x
    pgwa endos --a "(h^2+1)^2" --conductor 4 --format json
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Sequence

from . import endo, poisson
from .ore import GWAParams, GWAParamsError, SpecializationWarning, algebra_for, central_element, is_central, specialize
from .parse import DEFAULT_MAX_CONDUCTOR, ParseError, parse_poly, parse_scalar
from .poisson import PVARS
from .poly import LaurentPoly, PolyError, substitute_h
from .scalar import Scalar
from .semiclassical import sc_bracket
from .suites import run_suite

SCHEMA_VERSION = 1
COMMANDS = ("limit", "central", "simple", "endos", "check-endo", "bracket", "jacobi", "specialize", "verify")


class UsageError(Exception):
    pass


def _result(name: str, status: str, detail) -> dict:
    return {"name": name, "status": status, "detail": detail}


def _s(x) -> str:
    return str(x)


def _monomial(c, var: str, e: int) -> str:
    if e == 0:
        return str(c)
    power = var if e == 1 else f"{var}^{e}"
    if c == 1:
        return power
    if c == -1:
        return "-" + power
    return f"({c})*{power}" if len(c.terms()) > 1 else f"{c}*{power}"


def _pair(args, params: GWAParams) -> tuple[LaurentPoly, LaurentPoly]:
    if not args.pair:
        raise UsageError("--pair is required")
    parts = args.pair.split(",")
    if len(parts) != 2:
        raise UsageError("--pair expects two comma-separated elements, e.g. y,x")
    return tuple(parse_poly(p, PVARS, args.max_conductor) for p in parts)


def cmd_limit(args, params):
    f, g = _pair(args, params)
    B = algebra_for(params)
    val = sc_bracket(B.from_poly(f), B.from_poly(g))
    closed = poisson.bracket(f, g, poisson.gwa_spec(params))
    return [_result("sc_bracket", "pass" if val == closed else "fail",
                    {"pair": args.pair, "value": _s(val), "closed_form": _s(closed)})]


def cmd_bracket(args, params):
    f, g = _pair(args, params)
    val = poisson.gwa_bracket(f, g, params)
    return [_result("gwa_bracket", "info", {"pair": args.pair, "value": _s(val)})]


def cmd_central(args, params):
    B = algebra_for(params)
    out = []
    rep = is_central(central_element(params))
    out.append(_result("xy - a(th)", "pass" if rep.central else "fail",
                       {"central": rep.central, "witness": _s(rep.witness) if rep.witness else None}))
    for name, e in (("x", B.x), ("y", B.y)):
        r = is_central(e)
        out.append(_result(name, "info", {"central": r.central,
                                          "witness": f"[{name}, {r.witness_generator}] = {r.witness}"
                                          if r.witness else None}))
    return out


def cmd_simple(args, params):
    r = endo.simplicity_test(params)
    return [_result("simplicity", "info", {"simple": r.simple, "witness": _s(r.witness)})]


def cmd_jacobi(args, params):
    r = poisson.jacobi_check(poisson.gwa_spec(params))
    return [_result("jacobi", "pass" if r.ok else "fail",
                    {"residuals": {",".join(k): _s(v) for k, v in r.failures.items()}})]


def cmd_endos(args, params):
    fam = endo.enumerate_positive(params)
    zero = endo.find_zero_type(params)
    neg = endo.solve_negative(params)
    candidates = fam.instances + zero.endomorphisms + (neg.endomorphisms() if neg.feasible else [])
    sound = all(endo.check_endomorphism(e, params) for e in candidates)
    out = [
        _result("positive", "info", {
            "k": fam.k, "d": fam.d, "conductor": fam.conductor,
            "gammas": [_s(g) for g in fam.gammas],
            "family": "h -> gamma*h, x -> b*h^n*x, y -> gamma^d*b^-1*h^-n*y, gamma^k = 1",
        }),
        _result("zero", "info", {
            "none_exist": zero.none_exist, "certificate": _s(zero.certificate),
            "roots": [_s(r) for r in zero.exact_roots], "residual": _s(zero.residual),
        }),
    ]
    if neg.feasible:
        detail = {
            "feasible": True, "u+v": neg.s, "constraint": f"gamma^{neg.g} = {neg.c0}",
            "bc_rule": "bc = " + _monomial(neg.beta_ratio, "gamma", neg.beta_exponent),
            "conductor": neg.conductor,
            "solutions": [{"gamma": _s(g), "bc": _s(bc)} for g, bc in neg.solutions],
            "residual": _s(neg.residual),
        }
    else:
        detail = {"feasible": False, "reason": neg.reason}
    out.append(_result("negative", "info", detail))
    out.append(_result("soundness", "pass" if sound else "fail", {"checked": len(candidates)}))
    return out


def cmd_check_endo(args, params):
    if not args.kind:
        raise UsageError("--kind is required (positive, zero or negative)")
    if args.gamma is None:
        raise UsageError("--gamma is required")
    sc = lambda t, default: parse_scalar(t, args.max_conductor) if t is not None else Scalar(default)
    try:
        psi = endo.Endomorphism(args.kind, sc(args.gamma, 1), sc(args.b, 1), sc(args.c, 1),
                                n=args.n, u=args.u, v=args.v)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = endo.check_endomorphism(psi, params)
    return [_result("check_endomorphism", "pass" if rep.ok else "fail", {
        "map": str(psi), "residuals": {k: _s(v) for k, v in rep.residuals.items()},
    })]


def cmd_specialize(args, params):
    if args.lam is None:
        raise UsageError("--lambda is required")
    lam = parse_scalar(args.lam, args.max_conductor)
    if not lam:
        raise UsageError("lambda must be nonzero")
    B = algebra_for(params)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", SpecializationWarning)
        x, y, h = (specialize(g, lam) for g in (B.x, B.y, B.h))
        a_h = specialize(B.from_poly(params.a), lam)
        a_lh = specialize(B.from_poly(substitute_h(params.a, lam)), lam)
    degenerate = any(issubclass(w.category, SpecializationWarning) for w in caught)
    checks = {
        "xh = lambda*hx": x * h == h * x * lam,
        "yh = lambda^-1*hy": y * h == h * y * lam.inverse(),
        "yx = xy + a(h) - a(lambda*h)": y * x == x * y + a_h - a_lh,
    }
    out = [_result(name, "pass" if ok else "fail", {}) for name, ok in checks.items()]
    out.append(_result("parameter", "info", {"lambda": _s(lam), "degenerate": degenerate,
                                             "yx": _s(y * x)}))
    return out


def cmd_verify(args, params):
    return [_result(r.name, r.status, _jsonable(r.detail)) for r in run_suite(params, args.seed)]


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(w) for k, w in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(w) for w in v]
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    return str(v)


HANDLERS = {
    "limit": cmd_limit,
    "central": cmd_central,
    "simple": cmd_simple,
    "endos": cmd_endos,
    "check-endo": cmd_check_endo,
    "bracket": cmd_bracket,
    "jacobi": cmd_jacobi,
    "specialize": cmd_specialize,
    "verify": cmd_verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--a", required=True, help="a(h), e.g. 'h^2 + 1' or '(h-1)^2'")
    common.add_argument("--conductor", type=int, default=1, help="working cyclotomic conductor N")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-conductor", type=int, default=DEFAULT_MAX_CONDUCTOR,
                        help="largest zN accepted in input")
    parser = _Parser(prog="pgwa", description="Poisson generalized Weyl algebra toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name in ("limit", "bracket"):
            p.add_argument("--pair", help="two elements of C[h^{+-1},x,y], comma separated")
        if name == "specialize":
            p.add_argument("--lambda", dest="lam", help="nonzero scalar to substitute for t")
        if name == "verify":
            p.add_argument("--seed", type=int, default=0)
        if name == "check-endo":
            p.add_argument("--kind", choices=("positive", "zero", "negative"))
            p.add_argument("--gamma")
            p.add_argument("--b")
            p.add_argument("--c")
            p.add_argument("--n", type=int, default=0)
            p.add_argument("--u", type=int, default=0)
            p.add_argument("--v", type=int, default=0)
    return parser


def execute(args: argparse.Namespace) -> tuple[int, dict]:
    """Run a parsed command; returns (exit code, report).  Raises UsageError."""
    if args.conductor < 1 or args.conductor > args.max_conductor:
        raise UsageError(f"--conductor must be between 1 and {args.max_conductor}")
    try:
        a = parse_poly(args.a, ("h",), args.max_conductor)
        params = GWAParams(a, args.conductor)
    except (ParseError, GWAParamsError, PolyError) as exc:
        raise UsageError(f"--a: {exc}") from None
    try:
        results = HANDLERS[args.command](args, params)
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    report = {
        "schema": SCHEMA_VERSION,
        "command": args.command,
        "input": {"a": str(params.a), "conductor": params.conductor},
        "results": results,
    }
    code = 1 if any(r["status"] == "fail" for r in results) else 0
    return code, report


def run(argv: Sequence[str]) -> tuple[int, dict]:
    return execute(build_parser().parse_args(list(argv)))


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True)
    lines = [f"{report['command']}: a(h) = {report['input']['a']}, conductor {report['input']['conductor']}"]
    for r in report["results"]:
        lines.append(f"[{r['status']}] {r['name']}")
        for k, v in r["detail"].items():
            lines.append(f"    {k}: {json.dumps(v) if isinstance(v, (list, dict)) else v}")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
        code, report = execute(args)
    except UsageError as exc:
        print(f"pgwa: error: {exc}", file=sys.stderr)
        return 2
    print(render(report, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
