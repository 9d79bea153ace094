#!/usr/bin/env python3
"""Run the full identity/umbral registry and print a summary table.

Examples:
  python scripts/verify_identities.py
  python scripts/verify_identities.py --n-max 6 --output report.json
  python scripts/verify_identities.py --include-negative-control
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from belleuler.cli import REGISTRY
from belleuler.identities import Grid, NEGATIVE_CONTROLS


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, dest="n_max")
    parser.add_argument("--output", help="write the JSON reports to this file")
    parser.add_argument("--include-negative-control", action="store_true",
                        help="also run the documented-failure check")
    args = parser.parse_args()

    grid = Grid(n_max=args.n_max) if args.n_max is not None else Grid()
    selected = [i for i in REGISTRY
                if args.include_negative_control or i not in NEGATIVE_CONTROLS]

    reports = []
    width = max(len(i) for i in selected)
    for check_id in selected:
        report = REGISTRY[check_id](grid)
        reports.append(report)
        flag = "pass" if report.passed else "FAIL"
        line = f"{check_id:<{width}}  {flag}  {report.checked:>4} cases  " \
               f"{report.elapsed * 1000:8.1f} ms"
        if report.counterexample is not None:
            line += f"  counterexample at {report.counterexample.params}"
        print(line)

    if args.output:
        Path(args.output).write_text(
            json.dumps([r.to_json_dict() for r in reports], indent=2) + "\n",
            encoding="utf-8")
        print(f"wrote {args.output}")

    expected_failures = {i for i in selected if i in NEGATIVE_CONTROLS}
    unexpected = [r.id for r in reports
                  if r.passed == (r.id in expected_failures)]
    return 1 if unexpected else 0


if __name__ == "__main__":
    sys.exit(main())
