#!/usr/bin/env python3
"""Run the full claim-verification suites over both stock orders.

Writes one JSON report per order next to this script (or under --outdir)
and prints the text summaries.  Equivalent to two `linetop verify` calls;
kept as a script so a full sweep is one command in a research loop.
"""

import argparse
import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from linetop.suites import SuiteConfig, render_text, run_suite  # noqa: E402

ORDERS = ("Q", "lex(Z,Z)")


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument("--samples", type=int, default=1000)
    parser.add_argument("--outdir", default=None)
    args = parser.parse_args()

    outdir = pathlib.Path(args.outdir) if args.outdir else pathlib.Path.cwd()
    outdir.mkdir(parents=True, exist_ok=True)
    all_ok = True
    for order in ORDERS:
        config = SuiteConfig(order_text=order, seed=args.seed, samples=args.samples)
        report = run_suite(config)
        all_ok &= report.passed
        stem = order.replace("(", "_").replace(")", "").replace(",", "_")
        path = outdir / f"verify_{stem}_seed{args.seed}.json"
        path.write_text(json.dumps(report.as_dict(), indent=2, sort_keys=True))
        print(render_text(report))
        print(f"wrote {path}\n")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
