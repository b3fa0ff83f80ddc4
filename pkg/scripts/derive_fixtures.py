#!/usr/bin/env python3
"""Regenerate src/k24minor/data/catalog_fixtures.json.

Maximal subdividable sets of the small special graphs are computed by brute
force against the oracle; one hamilton base per set and one hamilton cycle per
exception are found by exhaustive search.

    python scripts/derive_fixtures.py [--out PATH]
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from k24minor.audit import subdividable_bruteforce
from k24minor.catalog import EXCEPTION_NAMES, SPECIAL_FAMILY_IDS, named_graph
from k24minor.hamilton import find_hamilton_base, find_hamilton_cycle

DEFAULT_OUT = Path(__file__).resolve().parents[1] / "src" / "k24minor" / "data" / "catalog_fixtures.json"


def derive() -> dict:
    subd, bases, cycles = {}, {}, {}
    for cid in SPECIAL_FAMILY_IDS + tuple(EXCEPTION_NAMES):
        g = named_graph(cid)
        sets, calls = subdividable_bruteforce(g)
        subd[cid] = [sorted(list(e) for e in f) for f in sets]
        bases[cid] = []
        for f in sets:
            b = find_hamilton_base(g, f)
            if b is None:
                raise SystemExit(f"{cid}: no hamilton base for {sorted(f)}")
            bases[cid].append(b)
        if cid in EXCEPTION_NAMES:
            cycles[cid] = find_hamilton_cycle(g)
        print(f"{cid}: {len(sets)} maximal sets, {calls} oracle calls", file=sys.stderr)
    return {"subdividable": subd, "hamilton_bases": bases, "hamilton_cycles": cycles}


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=DEFAULT_OUT)
    args = ap.parse_args(argv)
    data = derive()
    args.out.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
