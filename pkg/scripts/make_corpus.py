#!/usr/bin/env python3
"""Generate all connected graphs on 1..N vertices up to isomorphism (graph6).

Every connected graph has a vertex whose deletion leaves it connected, so
extending each connected (n-1)-vertex graph by one vertex in every possible
way and deduplicating reaches all connected n-vertex graphs.  Counts are
checked against the known sequence 1, 1, 2, 6, 21, 112, 853, 11117.

    python scripts/make_corpus.py --max-n 8 --out corpus/connected_le8.g6
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from k24minor.core_graph import Graph, emit_graph6
from k24minor.iso import are_isomorphic, invariant

KNOWN_COUNTS = [1, 1, 2, 6, 21, 112, 853, 11117, 261080]


def extend(level: list[Graph], n: int) -> list[Graph]:
    buckets: dict[tuple, list[Graph]] = {}
    out = []
    for g in level:
        for nb in range(1, 1 << (n - 1)):
            adj = list(g.adj) + [nb]
            for v in range(n - 1):
                if nb >> v & 1:
                    adj[v] |= 1 << (n - 1)
            h = Graph.from_masks(adj)
            key = invariant(h)
            bucket = buckets.setdefault(key, [])
            if any(are_isomorphic(h, other) is not None for other in bucket):
                continue
            bucket.append(h)
            out.append(h)
    return out


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--out", type=Path, default=Path("corpus/connected_le8.g6"))
    args = ap.parse_args(argv)

    level = [Graph(1)]
    everything = list(level)
    for n in range(2, args.max_n + 1):
        t0 = time.time()
        level = extend(level, n)
        print(f"n={n}: {len(level)} graphs ({time.time() - t0:.1f}s)", file=sys.stderr)
        if n - 1 < len(KNOWN_COUNTS) and len(level) != KNOWN_COUNTS[n - 1]:
            print(f"count mismatch at n={n}: expected {KNOWN_COUNTS[n - 1]}", file=sys.stderr)
            return 1
        everything.extend(level)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text("".join(emit_graph6(g) + "\n" for g in everything))
    print(f"wrote {len(everything)} graphs to {args.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
