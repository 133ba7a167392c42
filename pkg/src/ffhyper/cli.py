"""Command-line front end: ``ffhyper eval | verify | suite | modular``."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .characters import MultChar
from .errors import FFHyperError, UnknownTheorem
from .finite_field import DEFAULT_MAX_Q, FieldCtx, field_of_order
from .hypergeometric import VARIANTS, HypSpec, evaluate
from .modular import eta_product_coeffs, verify_ao
from .theorems import SweepPlan, reports_to_json, run_theorem, theorem_ids

DEFAULT_SUITE_Q = "3,5,7"


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(v) for v in text.split(",")]


def _positive_list(text: str) -> list[int]:
    try:
        out = _int_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def _index_list(text: str) -> list[int]:
    try:
        return _int_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated character indices, got {text!r}")


def _plan(text: str) -> SweepPlan:
    try:
        return SweepPlan.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def parse_element(ctx: FieldCtx, text: str) -> int:
    """Element code for ``0``, ``1``, ``-1``, ``g^a`` or, in a prime field, any residue."""
    t = text.replace(" ", "").lower()
    if t.startswith("g^"):
        try:
            e = int(t[2:])
        except ValueError:
            raise ValueError(f"bad exponent in {text!r}")
        return ctx.exp_code(e % ctx.order)
    try:
        v = int(t)
    except ValueError:
        raise ValueError(f"cannot read {text!r} as a field element; use 0, 1, -1 or g^a")
    if v == 0:
        return 0
    if v in (1, -1):
        return 1 if v == 1 else ctx.neg_code(1)
    if ctx.k == 1:
        return v % ctx.p
    raise ValueError(f"{text!r} is ambiguous in F_{ctx.q}; write it as g^a")


def _header(ctx: FieldCtx) -> str:
    d = ctx.describe()
    return (
        f"# F_{ctx.q}: p={d['p']} k={d['k']} modulus={d['modulus']} generator g={d['generator']}; "
        f"character j sends g to exp(2 pi i j/{ctx.order}), conductor n={ctx.conductor}"
    )


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- subcommands --------------------------------------------------------------------
def cmd_eval(args) -> int:
    ctx = field_of_order(args.q, max_q=args.max_q)
    x = parse_element(ctx, args.x)
    top = tuple(MultChar(ctx, j) for j in args.top)
    bottom = tuple(MultChar(ctx, j) for j in args.bottom)
    value = evaluate(HypSpec(args.variant, top, bottom, ctx.from_code(x)))
    rational = value.to_rational()
    if args.format == "json":
        record = {
            "q": ctx.q,
            "generator": ctx.describe(),
            "variant": args.variant,
            "top": [c.index for c in top],
            "bottom": [c.index for c in bottom],
            "x": x,
            "value": value.to_dict(),
            "rational": None if rational is None else str(rational),
        }
        _emit(json.dumps(record, sort_keys=True))
        return 0
    _emit(_header(ctx))
    _emit(f"coefficients (powers of zeta_{value.conductor}): {list(value.coeffs)}")
    _emit(f"denominator: {value.den}")
    _emit(f"rational: {rational if rational is not None else 'not rational'}")
    return 0


def _run_reports(args, q_list, ids) -> int:
    reports = []
    for q in q_list:
        ctx = field_of_order(q, max_q=args.max_q)
        for tid in ids:
            reports.append(run_theorem(tid, ctx, args.plan, args.n_max))
    for r in reports:
        if r.skipped is not None:
            print(f"warning: {r.theorem_id} skipped at q={r.q}: {r.skipped}", file=sys.stderr)
    if args.format == "json":
        _emit(reports_to_json(reports, args.plan))
    else:
        _emit(f"# plan: {args.plan}")
        last_q = None
        for r in reports:
            if r.q != last_q:
                _emit(_header(field_of_order(r.q, max_q=args.max_q)))
                last_q = r.q
            _emit(r.to_text(timing=args.timing))
    return 0 if all(r.success for r in reports) else 1


def cmd_verify(args) -> int:
    if args.theorem not in theorem_ids():
        raise UnknownTheorem(f"unknown theorem id {args.theorem!r}; known: {', '.join(theorem_ids())}")
    return _run_reports(args, args.q, [args.theorem])


def cmd_suite(args) -> int:
    ids = args.theorems.split(",") if args.theorems else theorem_ids()
    for tid in ids:
        if tid not in theorem_ids():
            raise UnknownTheorem(f"unknown theorem id {tid!r}")
    return _run_reports(args, args.q, ids)


def cmd_modular(args) -> int:
    series = eta_product_coeffs(max(64, max(args.primes)))
    checks = [verify_ao(p, series) for p in args.primes]
    if args.format == "json":
        _emit(json.dumps({"checks": [c.to_dict() for c in checks]}, sort_keys=True, indent=1))
    else:
        for c in checks:
            _emit(
                f"p={c.p} value={c.value} gamma={c.gamma} gamma+p={c.expected} "
                f"match={'yes' if c.match else 'no'}" + ("" if c.match else f" ({c.reason})")
            )
        _emit(f"{sum(c.match for c in checks)}/{len(checks)} primes match")
    return 0 if all(c.match for c in checks) else 1


# -- parser -------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffhyper", description="Hypergeometric functions over finite fields, computed exactly."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-q", type=int, default=DEFAULT_MAX_Q, help="largest field order accepted")

    p = sub.add_parser("eval", parents=[common], help="evaluate one function value")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--variant", choices=VARIANTS, default="star")
    p.add_argument("--top", type=_index_list, required=True, help="character indices, e.g. 3,1")
    p.add_argument("--bottom", type=_index_list, default=[], help="character indices")
    p.add_argument("--x", required=True, help="0, 1, -1 or g^a (any residue in a prime field)")
    p.set_defaults(func=cmd_eval)

    sweep = argparse.ArgumentParser(add_help=False)
    sweep.add_argument("--plan", type=_plan, default=SweepPlan(), help="exhaustive | sample:COUNT:SEED | auto")
    sweep.add_argument("--n-max", type=int, default=None, help="order bound for the recursive families")
    sweep.add_argument("--timing", action="store_true", help="append elapsed time (text output only)")

    p = sub.add_parser("verify", parents=[common, sweep], help="verify one identity")
    p.add_argument("--theorem", required=True)
    p.add_argument("--q", type=_positive_list, required=True, help="comma-separated field orders")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("suite", parents=[common, sweep], help="verify every registered identity")
    p.add_argument("--q", type=_positive_list, default=_positive_list(DEFAULT_SUITE_Q))
    p.add_argument("--theorems", default=None, help="comma-separated subset of ids")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("modular", parents=[common], help="quadratic 4F3 against eta-product coefficients")
    p.add_argument("--primes", type=_positive_list, default=[3, 5, 7, 11, 13])
    p.set_defaults(func=cmd_modular)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FFHyperError as exc:
        msg = exc.args[0] if exc.args else ""
        print(f"error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
