"""Command line client.

Thin wrapper over the service layer: each subcommand builds the same
request model the HTTP API takes and calls the handler in process.
With --json, stdout carries exactly one JSON document; without it, a
short human line.  Diagnostics go to stderr.

Exit codes: 0 success, 1 parse error, 2 invalid element or arguments,
3 unsupported flavor, 4 property violation found.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import Flavor
from .errors import AlgebraError, ParseError, UnsupportedFlavor
from .expr import render
from . import service


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text or text == "-":
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise AlgebraError(f"expected a comma-separated integer list: {exc}")


def _congruence_spec(text: str) -> service.CongruenceClassModel:
    if text == "identity":
        return service.CongruenceClassModel(kind="identity")
    if text.startswith("group:"):
        try:
            modulus = int(text.split(":", 1)[1])
        except ValueError as exc:
            raise AlgebraError(f"bad modulus in {text!r}: {exc}")
        return service.CongruenceClassModel(kind="group", modulus=modulus)
    raise AlgebraError(
        f"congruence spec must be 'identity' or 'group:<d>', got {text!r}"
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--flavor",
        choices=[f.value for f in Flavor],
        default="almon",
        help="submonoid to work in (default: almon)",
    )
    common.add_argument(
        "--json", action="store_true", help="emit one JSON document on stdout"
    )
    common.add_argument("--seed", type=int, default=0, help="sampler seed")
    common.add_argument(
        "--samples", type=int, default=200, help="sample count for checks"
    )

    parser = argparse.ArgumentParser(
        prog="cofinj",
        description="Exact arithmetic for cofinite eventually-shift "
        "partial injections of the positive integers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    p.add_argument("expr")

    p = sub.add_parser("member", parents=[common], help="flavor membership")
    p.add_argument("expr")

    p = sub.add_parser("green", parents=[common], help="Green's relations")
    p.add_argument("x")
    p.add_argument("y")

    p = sub.add_parser("shift", parents=[common], help="eventual displacement")
    p.add_argument("expr")

    p = sub.add_parser("cmg", parents=[common], help="least group congruence")
    p.add_argument("mode", choices=["related", "witness"])
    p.add_argument("x")
    p.add_argument("y")

    p = sub.add_parser(
        "congruence", parents=[common], help="classify or decide congruences"
    )
    p.add_argument("mode", choices=["classify", "related"])
    p.add_argument(
        "args",
        nargs="+",
        help="classify: x1 y1 [x2 y2 ...]; related: SPEC x y "
        "with SPEC one of identity, group:<d>",
    )

    p = sub.add_parser(
        "reduce", parents=[common], help="conjugate idempotent pair onto rays"
    )
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser(
        "simple-witness", parents=[common], help="identity through any element"
    )
    p.add_argument("expr")

    p = sub.add_parser("solve", parents=[common], help="one-sided equations")
    p.add_argument("mode", choices=["left", "right"])
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser(
        "hclass", parents=[common], help="H-class members below a bound"
    )
    p.add_argument("--dom", default="", help="missing domain points, comma list")
    p.add_argument("--ran", default="", help="missing range points, comma list")
    p.add_argument("--bound", type=int, required=True)

    p = sub.add_parser("nbhd", parents=[common], help="neighborhood queries")
    p.add_argument("mode", choices=["contains", "check"])
    p.add_argument("x", help="contains: center; check: first factor")
    p.add_argument("y", help="contains: candidate; check: second factor")
    p.add_argument("--anchors", default="", help="anchor points, comma list")

    p = sub.add_parser(
        "factorize-check", parents=[common], help="verify x * y == g"
    )
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("g")

    return parser


def _bool_text(flag: bool) -> str:
    return "true" if flag else "false"


def dispatch(args: argparse.Namespace) -> tuple[int, dict, str]:
    """Run one subcommand; returns (exit code, json payload, human text)."""
    if args.command == "eval":
        resp = service.handle_eval(service.EvalRequest(expr=args.expr))
        return 0, resp.element.model_dump(), resp.compact

    if args.command == "member":
        resp = service.handle_member(
            service.MemberRequest(expr=args.expr, flavor=args.flavor)
        )
        return 0, resp.model_dump(), _bool_text(resp.member)

    if args.command == "green":
        resp = service.handle_green(
            service.PairRequest(x=args.x, y=args.y, flavor=args.flavor)
        )
        d = "unknown" if resp.d_related is None else _bool_text(resp.d_related)
        human = (
            f"R={_bool_text(resp.r_related)} L={_bool_text(resp.l_related)} "
            f"H={_bool_text(resp.h_related)} D={d}"
        )
        return 0, resp.model_dump(), human

    if args.command == "shift":
        resp = service.handle_shift(service.EvalRequest(expr=args.expr))
        return 0, resp.model_dump(), str(resp.shift)

    if args.command == "cmg":
        req = service.PairRequest(x=args.x, y=args.y, flavor=args.flavor)
        if args.mode == "related":
            related = service.handle_cmg_related(req)
            return 0, related.model_dump(), _bool_text(related.related)
        witness = service.handle_cmg_witness(req)
        return 0, witness.element.model_dump(), witness.compact

    if args.command == "congruence":
        if args.mode == "classify":
            if len(args.args) % 2 != 0 or not args.args:
                raise AlgebraError("classify needs a nonempty even list: x1 y1 ...")
            pairs = list(zip(args.args[0::2], args.args[1::2]))
            resp = service.handle_classify(
                service.ClassifyRequest(pairs=pairs, flavor=args.flavor)
            )
            payload = resp.model_dump(exclude_none=True)
            human = (
                "identity"
                if resp.kind == "identity"
                else f"group mod {resp.modulus}"
            )
            return 0, payload, human
        if len(args.args) != 3:
            raise AlgebraError("related needs: SPEC x y")
        rel = service.handle_congruence_related(
            service.CongruenceRelatedRequest(
                congruence=_congruence_spec(args.args[0]),
                x=args.args[1],
                y=args.args[2],
            )
        )
        return 0, rel.model_dump(), _bool_text(rel.related)

    if args.command == "reduce":
        resp = service.handle_reduce(
            service.ReduceRequest(
                first=args.first, second=args.second, flavor=args.flavor
            )
        )
        human = (
            f"conjugator {render(resp.conjugator.to_element())} -> "
            f"{render(resp.output[0].to_element())} ~ "
            f"{render(resp.output[1].to_element())}"
        )
        return 0, resp.model_dump(), human

    if args.command == "simple-witness":
        resp = service.handle_simple_witness(
            service.SimpleWitnessRequest(expr=args.expr, flavor=args.flavor)
        )
        human = (
            f"left {render(resp.left.to_element())} "
            f"right {render(resp.right.to_element())}"
        )
        return 0, resp.model_dump(), human

    if args.command == "solve":
        resp = service.handle_solve(
            service.SolveRequest(
                side=args.mode, a=args.a, b=args.b, flavor=args.flavor
            )
        )
        lines = [render(s.to_element()) for s in resp.solutions]
        human = "\n".join(lines) if lines else "no solutions"
        return 0, resp.model_dump(), human

    if args.command == "hclass":
        resp = service.handle_hclass(
            service.HClassRequest(
                dom_missing=_int_list(args.dom),
                ran_missing=_int_list(args.ran),
                tail_bound=args.bound,
                flavor=args.flavor,
            )
        )
        lines = [render(m.to_element()) for m in resp.members]
        human = "\n".join(lines) if lines else "no members"
        return 0, resp.model_dump(), human

    if args.command == "nbhd":
        anchors = _int_list(args.anchors)
        if args.mode == "contains":
            resp = service.handle_nbhd_contains(
                service.NbhdContainsRequest(
                    center=args.x, anchors=anchors, candidate=args.y
                )
            )
            return 0, resp.model_dump(), _bool_text(resp.contains)
        report = service.handle_nbhd_check(
            service.NbhdCheckRequest(
                a=args.x,
                b=args.y,
                anchors=anchors,
                samples=args.samples,
                seed=args.seed,
            )
        )
        code = 4 if report.violations else 0
        human = f"samples={report.samples} violations={len(report.violations)}"
        return code, report.model_dump(), human

    if args.command == "factorize-check":
        resp = service.handle_factorize_check(
            service.FactorizeCheckRequest(x=args.x, y=args.y, g=args.g)
        )
        return 0, resp.model_dump(), _bool_text(resp.holds)

    raise AlgebraError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload, human = dispatch(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except UnsupportedFlavor as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(payload) if args.json else human)
    return code


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
