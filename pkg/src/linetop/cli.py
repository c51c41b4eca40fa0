"""Command-line front end for the verification suites and finite oracle.

Exit codes: 0 all checks pass, 1 a claim or comparison failed, 2 usage
or configuration errors.  JSON output always has the shape
{config, records, summary}.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import List, Optional

from .completion import complete, point_cut
from .errors import LinetopError, ParseError
from .finite_explorer import MAX_POINTS, explorer_report
from .homeo import verify_homeo, same_chain_class
from .suites import CLAIM_IDS, SuiteConfig, render_text, run_suite
from .textio import cut_text, order_text, parse_cut, parse_order
from .topology import top_leq


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linetop",
        description="verify chain-of-topologies claims over computable linear orders",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run seeded claim-verification suites")
    verify.add_argument("--order", default="Q", help="order expression (Z, Q, lex(,), sum(,), rev())")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--samples", type=int, default=1000)
    verify.add_argument("--claims", default=",".join(CLAIM_IDS),
                        help="comma-separated subset of " + ",".join(CLAIM_IDS))
    verify.add_argument("--out", default=None, help="output path (default stdout)")
    verify.add_argument("--format", choices=("json", "text"), default="text")

    finite = sub.add_parser("finite", help="exhaustive finite-topology oracle")
    finite.add_argument("--n", type=int, default=4, help=f"max point count (1..{MAX_POINTS})")
    finite.add_argument("--out", default=None)
    finite.add_argument("--format", choices=("json", "text"), default="text")

    comp = sub.add_parser("complete", help="describe the completion of an order")
    comp.add_argument("--order", required=True)
    comp.add_argument("--format", choices=("json", "text"), default="text")
    comp.add_argument("--out", default=None)

    compare = sub.add_parser("compare", help="compare the topologies at two cuts")
    compare.add_argument("cut1")
    compare.add_argument("cut2")
    compare.add_argument("--order", required=True)
    compare.add_argument("--format", choices=("json", "text"), default="text")
    compare.add_argument("--out", default=None)

    homeo = sub.add_parser("homeo", help="construct and verify a homeomorphism between two cuts")
    homeo.add_argument("cut1")
    homeo.add_argument("cut2")
    homeo.add_argument("--order", required=True)
    homeo.add_argument("--seed", type=int, default=0)
    homeo.add_argument("--samples", type=int, default=200)
    homeo.add_argument("--format", choices=("json", "text"), default="text")
    homeo.add_argument("--out", default=None)
    return parser


def _write(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        raise LinetopError(f"cannot write report to {out}: {exc}")


def _emit(payload: dict, text: str, fmt: str, out: Optional[str]) -> None:
    if fmt == "json":
        _write(json.dumps(payload, indent=2, sort_keys=True) + "\n", out)
    else:
        _write(text, out)


def _cmd_verify(args) -> int:
    claims = tuple(c.strip() for c in args.claims.split(",") if c.strip())
    config = SuiteConfig(order_text=args.order, seed=args.seed,
                         samples=args.samples, claims=claims)
    report = run_suite(config)
    _emit(report.as_dict(), render_text(report), args.format, args.out)
    return 0 if report.passed else 1


def _cmd_finite(args) -> int:
    rows = explorer_report(args.n)
    records = [dataclasses.asdict(r) for r in rows]
    payload = {
        "config": {"n": args.n},
        "records": records,
        "summary": {
            "total": len(records),
            "allClassesMatch": all(r.condensationClassesEqualHomeoClasses for r in rows),
        },
    }
    lines = ["n topologies homeoClasses stronglyReversible classesMatch"]
    for r in rows:
        lines.append(f"{r.n} {r.topologyCount} {r.homeoClassCount} "
                     f"{r.stronglyReversibleCount} {r.condensationClassesEqualHomeoClasses}")
    _emit(payload, "\n".join(lines) + "\n", args.format, args.out)
    return 0 if payload["summary"]["allClassesMatch"] else 1


def _cmd_complete(args) -> int:
    order = parse_order(args.order)
    spec = complete(order)
    record = {
        "order": order_text(order),
        "isComplete": spec.is_complete,
        "gapFamilies": list(spec.gap_family),
    }
    payload = {"config": {"order": args.order}, "records": [record],
               "summary": {"isComplete": spec.is_complete}}
    text = (f"{record['order']}: "
            + ("already complete" if spec.is_complete
               else "gap families " + ", ".join(record["gapFamilies"])) + "\n")
    _emit(payload, text, args.format, args.out)
    return 0


def _cmd_compare(args) -> int:
    order = parse_order(args.order)
    c1 = parse_cut(order, args.cut1)
    c2 = parse_cut(order, args.cut2)
    result = top_leq(c1, c2)
    record = {
        "cut1": cut_text(c1),
        "cut2": cut_text(c2),
        "relation": result.relation,
        "witness": None if result.witness is None else cut_text(result.witness.cut),
        "separator": None if result.separator is None
        else cut_text(point_cut(order, result.separator)),
    }
    payload = {"config": {"order": args.order}, "records": [record],
               "summary": {"relation": result.relation}}
    text = f"{record['cut1']} vs {record['cut2']}: {result.relation}"
    if record["witness"] is not None:
        text += f" (witness punctured ray at {record['witness']}, separator {record['separator']})"
    _emit(payload, text + "\n", args.format, args.out)
    return 0


def _cmd_homeo(args) -> int:
    order = parse_order(args.order)
    c1 = parse_cut(order, args.cut1)
    c2 = parse_cut(order, args.cut2)
    answer = same_chain_class(c1, c2)
    record = {"cut1": cut_text(c1), "cut2": cut_text(c2), "verdict": answer.verdict}
    ok = False
    if answer.verdict == "yes":
        report = verify_homeo(answer.homeo, budget=args.samples, seed=args.seed)
        record["checks"] = [{"name": c.name, "passed": c.passed} for c in report.checks]
        ok = report.passed
        text = (f"homeomorphism constructed, verification "
                f"{'passed' if ok else 'FAILED'}\n")
    elif answer.verdict == "no":
        ok = answer.obstruction.validate(samples=args.samples, seed=args.seed)
        record["obstructionValidated"] = ok
        text = ("not homeomorphic: the punctured trace at the gap has no top "
                f"element (obstruction {'validated' if ok else 'FAILED'})\n")
    else:
        text = "unknown: no homogeneity witness relates these cuts\n"
    payload = {"config": {"order": args.order, "seed": args.seed,
                          "samples": args.samples},
               "records": [record], "summary": {"verdict": answer.verdict}}
    _emit(payload, text, args.format, args.out)
    return 0 if ok else 1


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"verify": _cmd_verify, "finite": _cmd_finite,
                "complete": _cmd_complete, "compare": _cmd_compare,
                "homeo": _cmd_homeo}
    try:
        return handlers[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LinetopError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
