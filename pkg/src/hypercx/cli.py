"""Command-line entry point: ``hypercx <subcommand> ...``.

Each subcommand prints one JSON object per check (JSON lines) with the
fields ``id, paper_ref, inputs, value, tolerance, pass``, or a table with
``--pretty``.  Exit status: 0 when every asserted check passes, 1 when a
check fails or evaluation breaks down, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Iterable

from . import analysis, special
from .algebra import PRESET_NAMES, Element, is_zero_divisor, preset
from .cr_derive import GOLDEN, compare, derive_cr, golden, wirtinger_rows, wirtinger_space
from .errors import (
    ExprSyntaxError,
    HypercxError,
    UnknownConjugation,
    UnknownGoldenId,
    UnknownOperator,
    UnknownPreset,
    UnknownSymbol,
)
from .expr import evaluate, parse, pretty
from .matrix_rep import apostolova_residual, det_bounds, det_h, represent
from .operators import SamplingSpec, catalog, holomorphy_check, harmonicity_check, operator, residual_check
from .suite import CRITERIA, default_seed, run_suite

USAGE_ERRORS = (UnknownPreset, UnknownOperator, UnknownGoldenId, UnknownSymbol, UnknownConjugation,
                ExprSyntaxError)


class UsageError(Exception):
    pass


def _report(id: str, paper_ref: str, inputs: dict, value, tolerance, passed: bool) -> dict:
    return {"id": id, "paper_ref": paper_ref, "inputs": inputs, "value": value,
            "tolerance": tolerance, "pass": passed}


def _scalar_json(v):
    if isinstance(v, Fraction):
        return str(v)
    return float(v)


def _element_json(a: Element) -> list:
    return [_scalar_json(c) for c in a.coeffs]


def _numbers(text: str, mode: str = "float") -> list:
    try:
        vals = [Fraction(t.strip()) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot read numbers from {text!r}") from exc
    return vals if mode == "rational" else [float(v) for v in vals]


def _need(args, *names: str) -> None:
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--{n.replace('_', '-')} is required for {args.command}")


def _sampling(args) -> SamplingSpec:
    return SamplingSpec(points=args.points, seed=args.seed, tol=args.tol if args.tol is not None else 1e-9)


# ---------------------------------------------------------------------------
# subcommands


def cmd_algebra(args) -> Iterable[dict]:
    names = [args.algebra] if args.algebra else list(PRESET_NAMES)
    for name in names:
        alg = preset(name)
        inv = alg.check_invariants()
        yield _report("algebra", "structure constants, unit and conjugations", {"algebra": name},
                      {"descriptor": alg.to_dict(), "invariants": inv}, "exact", all(inv.values()))


def cmd_eval(args) -> Iterable[dict]:
    _need(args, "algebra", "expr", "coeffs")
    alg = preset(args.algebra)
    point = alg.element(_numbers(args.coeffs, args.mode), args.mode)
    tree = parse(args.expr, alg)
    value = evaluate(tree, point)
    yield _report("eval", "expression evaluation", {"algebra": alg.name, "expr": pretty(tree),
                                                    "point": _element_json(point), "mode": args.mode},
                  _element_json(value), None, True)


def cmd_check(args) -> Iterable[dict]:
    _need(args, "algebra", "op", "expr")
    spec = _sampling(args)
    if args.op == "holomorphy":
        verdict = holomorphy_check(args.algebra, args.expr, spec)
        ref = "holomorphy: every d-bar operator of the algebra annihilates f"
    elif args.op in ("harmonicity", "laplacians"):
        verdict = harmonicity_check(args.algebra, args.expr, spec)
        ref = "harmonicity: the algebra's Laplacians annihilate f"
    else:
        ops = [operator(args.algebra, n) for n in args.op.split(",")]
        verdict = residual_check(ops, args.expr, spec)
        ref = f"{args.op} annihilates f"
    d = verdict.to_dict()
    d["normalized"] = verdict.normalized
    yield _report("check", ref, {"algebra": args.algebra, "op": args.op, "expr": args.expr,
                                 "points": spec.points, "seed": spec.seed},
                  d, spec.tol, verdict.passed)


def cmd_derive_cr(args) -> Iterable[dict]:
    if args.golden and not (args.algebra or args.ops):
        g = golden(args.golden)
        args.algebra, args.ops = g.algebra, ",".join(g.ops)
    _need(args, "algebra", "ops")
    components = None
    if args.golden:
        components = golden(args.golden).components
    system = derive_cr(args.algebra, args.ops, components)
    value: dict = {"relations": system.format(), "rows": system.to_json()}
    if args.wirtinger:
        pairs = catalog(args.algebra).pairs
        value["wirtinger"] = [
            " + ".join(f"{c}*{'dbar' if w.conj else 'd'}[{w.component},{w.variable}].{w.part}" for w, c in row)
            for row in wirtinger_space(wirtinger_rows(system, pairs))
        ]
    passed = True
    ref = "CR system of the d-bar operators"
    if args.golden:
        g = golden(args.golden)
        diff = compare(system, g.system())
        value["golden"] = args.golden
        value["diff"] = diff.to_json()
        passed = not diff.nonempty
        ref = g.claim
    yield _report("derive-cr", ref, {"algebra": args.algebra, "ops": args.ops, "golden": args.golden},
                  value, "exact rational row-space equality", passed)


def cmd_exp(args) -> Iterable[dict]:
    _need(args, "algebra", "coeffs")
    alg = preset(args.algebra)
    a = alg.element(_numbers(args.coeffs))
    tol = args.tol if args.tol is not None else 1e-10
    series = special.exp_series(a)
    closed = special.exp_closed_form(a)
    value: dict = {"series": _element_json(series)}
    checks = {}
    if closed is not None:
        value["closed_form"] = _element_json(closed)
        checks["closed_minus_series"] = (closed - series).norm()
    checks["exp_a_exp_minus_a_minus_1"] = (series * special.exp_series(-a) - alg.one()).norm()
    value["residuals"] = checks
    value["zero_divisor"] = is_zero_divisor(series)
    passed = all(v < tol for v in checks.values()) and not value["zero_divisor"]
    yield _report("exp", "exponential series, closed form and invertibility",
                  {"algebra": alg.name, "coeffs": _element_json(a)}, value, tol, passed)


def cmd_matrix(args) -> Iterable[dict]:
    _need(args, "coeffs")
    alg = preset(args.algebra or "four_real_hyperbolic")
    x = alg.element(_numbers(args.coeffs, args.mode), args.mode)
    rep = represent(x)
    value: dict = {"orientation": rep.orientation, "matrix": [[_scalar_json(v) for v in r] for r in rep.rows],
                   "det": _scalar_json(rep.det())}
    passed = True
    tol = None
    if alg.name == "four_real_hyperbolic":
        residual = apostolova_residual(x)
        bounds = det_bounds(x)
        value["det_h"] = _scalar_json(det_h(x))
        value["identity_residual"] = _scalar_json(residual)
        value["bounds"] = {k: _scalar_json(v) for k, v in bounds.items()}
        tol = 0 if args.mode == "rational" else 1e-9
        within = bounds["lower"] <= bounds["det"] <= bounds["upper"] and abs(bounds["form"]) <= bounds["form_bound"]
        passed = abs(residual) <= tol and within
    yield _report("matrix", "regular representation and the four-real determinant identity",
                  {"algebra": alg.name, "coeffs": _element_json(x), "mode": args.mode}, value, tol, passed)


def cmd_fundsol(args) -> Iterable[dict]:
    phi = analysis.TestFunction.parse(args.phi or "gaussian:1.0")
    eps = args.eps if args.eps is not None else 0.5
    quad = analysis.QuadratureSpec(tol=args.tol if args.tol is not None else 1e-8)
    p = analysis.pairing_E(phi, eps, quad)
    value = p.to_dict()
    value.pop("pass")
    if phi.kind == "gaussian":
        value["bessel_k0"] = analysis.bessel_oracle(phi, eps)
    yield _report("fundsol", "1/z paired with the d-bar derivative equals the hyperbolic mean value",
                  {"phi": args.phi or "gaussian:1.0", "eps": eps, "tol": quad.tol}, value,
                  10 * quad.tol, p.passed)


def _complex_text(p: complex) -> str:
    if p.imag == 0:
        return repr(p.real + 0.0)
    return repr(p)


def cmd_symbol(args) -> Iterable[dict]:
    _need(args, "xi")
    xi = _numbers(args.xi)
    if len(xi) != 4:
        raise UsageError("--xi needs four numbers")
    s = analysis.symbol_delta_plus(xi)
    member = analysis.char_membership(xi).member if any(xi) else None
    value = {"p": _complex_text(s.p), "char_member": member,
             "minus_4p_residual": s.residual}
    yield _report("symbol", "symbol of Delta_plus and its characteristic cone", {"xi": xi},
                  value, 1e-12, s.residual < 1e-12)


def cmd_suite(args) -> Iterable[dict]:
    only = args.only.split(",") if args.only else None
    if only:
        unknown = [o for o in only if o not in CRITERIA]
        if unknown:
            raise UsageError(f"unknown criteria {unknown}; choose from {', '.join(CRITERIA)}")
    for rec in run_suite(args.seed, only):
        if args.pretty:
            print(rec.line(), file=sys.stderr)
        yield rec.to_dict()


COMMANDS = {
    "algebra": cmd_algebra,
    "eval": cmd_eval,
    "check": cmd_check,
    "derive-cr": cmd_derive_cr,
    "exp": cmd_exp,
    "matrix": cmd_matrix,
    "fundsol": cmd_fundsol,
    "symbol": cmd_symbol,
    "suite": cmd_suite,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypercx", description="Hypercomplex analysis verifier")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", help=f"preset name ({', '.join(PRESET_NAMES)})")
    common.add_argument("--ops", help="comma-separated operator names")
    common.add_argument("--op", help="operator name, 'holomorphy' or 'harmonicity'")
    common.add_argument("--expr", help="expression in v, x0..x(n-1) and the basis units")
    common.add_argument("--coeffs", help="comma-separated coefficients (decimals or p/q)")
    common.add_argument("--golden", help=f"reference system id ({', '.join(GOLDEN)})")
    common.add_argument("--wirtinger", action="store_true", help="also print the Wirtinger-grouped system")
    common.add_argument("--seed", type=int, default=default_seed(), help="RNG seed (default $HYPERCX_SEED or 0)")
    common.add_argument("--points", type=int, default=64)
    common.add_argument("--tol", type=float)
    common.add_argument("--eps", type=float)
    common.add_argument("--phi", help="gaussian:W[:A], bump:R0:R1 or polygauss:W:i,j,c;...")
    common.add_argument("--xi", help="four comma-separated frequencies")
    common.add_argument("--only", help="comma-separated criterion ids (suite)")
    common.add_argument("--mode", choices=("rational", "float"), default="float")
    common.add_argument("--pretty", action="store_true", help="human-readable table")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def _pretty(rows: list[dict]) -> str:
    lines = []
    for r in rows:
        status = "PASS" if r.get("pass") else "FAIL"
        lines.append(f"{status:4}  {r['id']:<32} {r['paper_ref']}")
        value = r.get("value")
        if isinstance(value, dict):
            for k, v in value.items():
                text = json.dumps(v, default=str)
                lines.append(f"      {k}: {text if len(text) < 100 else text[:97] + '...'}")
        elif value is not None:
            lines.append(f"      value: {json.dumps(value, default=str)}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on usage errors
    rows: list[dict] = []
    status = 0
    try:
        for row in COMMANDS[args.command](args):
            rows.append(row)
            if not args.pretty:
                print(json.dumps(row, default=str), flush=True)
            if not row["pass"]:
                status = 1
    except (UsageError, *USAGE_ERRORS) as exc:
        print(json.dumps({"id": args.command, "error": type(exc).__name__, "message": str(exc)}))
        return 2
    except (HypercxError, ArithmeticError) as exc:
        err = {"id": args.command, "paper_ref": "evaluation failure", "error": type(exc).__name__,
               "message": str(exc), "pass": False}
        print(json.dumps(err))
        return 1
    if args.pretty:
        print(_pretty(rows))
    return status


if __name__ == "__main__":
    sys.exit(main())
