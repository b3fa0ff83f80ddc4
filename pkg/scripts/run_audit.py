#!/usr/bin/env python3
"""Run every audit suite and write the JSON report.

    python scripts/run_audit.py --jobs 4 --out audit_report.json
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from k24minor.audit import run_suites
from k24minor.cli import DEFAULT_CORPUS, SUITES
from k24minor.core_graph import read_graphs


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--corpus", type=Path, default=DEFAULT_CORPUS)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=Path, default=Path("audit_report.json"))
    args = ap.parse_args()

    corpus = read_graphs(args.corpus.read_text(), "g6")
    t0 = time.time()
    report = run_suites(SUITES, corpus=corpus, seed=args.seed, jobs=args.jobs)
    report["seconds"] = round(time.time() - t0, 1)
    args.out.write_text(json.dumps(report, indent=1, sort_keys=True) + "\n")
    for name, part in report["suites"].items():
        print(f"{'PASS' if part['ok'] else 'FAIL'}  {name}: {part['summary']}")
    print(f"report written to {args.out} ({report['seconds']} s)", file=sys.stderr)
    return 0 if report["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
