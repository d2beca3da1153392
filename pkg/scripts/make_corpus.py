"""Regenerate the bundled exhaustive corpora src/pminor/data/graphsN.g6.

Order n is built from order n-1 by adding one vertex with every possible
neighbourhood, then deduplicating up to isomorphism.  Every graph of order n
arises this way (delete any vertex).  Counts are checked against the known
totals before anything is written.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from pminor.graph import SimpleGraph
from pminor.graph6 import encode
from pminor.harness import KNOWN_COUNTS
from pminor.iso import invariant, is_isomorphic


def extend(prev: list[SimpleGraph], n: int) -> list[SimpleGraph]:
    buckets: dict[tuple, list[SimpleGraph]] = {}
    out = []
    for g in prev:
        for mask in range(1 << (n - 1)):
            adj = [a | (((mask >> v) & 1) << (n - 1)) for v, a in enumerate(g.adj)] + [mask]
            h = SimpleGraph.from_adjacency(adj)
            reps = buckets.setdefault(invariant(h), [])
            if any(is_isomorphic(h, r) is not None for r in reps):
                continue
            reps.append(h)
            out.append(h)
    return out


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=8)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[1] / "src/pminor/data")
    args = ap.parse_args(argv)
    level = [SimpleGraph(1)]
    for n in range(1, args.max_order + 1):
        if n > 1:
            level = extend(level, n)
        if len(level) != KNOWN_COUNTS[n]:
            print(f"order {n}: got {len(level)} graphs, expected {KNOWN_COUNTS[n]}", file=sys.stderr)
            return 1
        lines = sorted(encode(g) for g in level)
        (args.out / f"graphs{n}.g6").write_text("\n".join(lines) + "\n")
        print(f"order {n}: {len(level)} graphs")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
