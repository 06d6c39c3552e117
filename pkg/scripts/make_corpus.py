#!/usr/bin/env python3
"""Generate exhaustive unlabeled graph corpora in graph6 format.

Every graph on n vertices arises from one on n-1 vertices by adding a vertex
with some neighbourhood, so all isomorphism classes are built order by order
and deduplicated with nauty canonical certificates (via pynauty). Output is
one canonical graph6 string per line, sorted, in ``graph{n}c.g6`` (connected
graphs) and, with ``--all``, ``graph{n}.g6`` (all graphs).

Known counts (OEIS A000088 / A001349) are checked before anything is written.

Usage:
    python scripts/make_corpus.py [--max-n 9] [--out data]
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

import pynauty

from matchext.graph import Graph, is_connected, to_graph6

ALL_GRAPHS = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168]
CONNECTED = [1, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571]


def _certificate(n: int, rows: list[int]) -> bytes:
    adjacency = {v: [u for u in range(n) if rows[v] >> u & 1] for v in range(n)}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adjacency))


def _decode(n: int, cert: bytes) -> Graph:
    # certificate rows are nauty setwords, most significant bit = vertex 0
    width = len(cert) // n
    top = width * 8 - 1
    rows = []
    for v in range(n):
        word = int.from_bytes(cert[v * width:(v + 1) * width], sys.byteorder)
        rows.append(sum(1 << u for u in range(n) if word >> (top - u) & 1))
    return Graph(n, tuple(rows))


def extend(graphs: list[Graph]) -> list[Graph]:
    if not graphs:
        return [Graph(0, ())]
    n = graphs[0].n + 1
    if n == 1:
        return [Graph(1, (0,))]
    seen: set[bytes] = set()
    out = []
    new = n - 1
    for g in graphs:
        for nbrs in range(1 << new):
            rows = [row | ((nbrs >> v & 1) << new) for v, row in enumerate(g.adj)]
            rows.append(nbrs)
            cert = _certificate(n, rows)
            if cert not in seen:
                seen.add(cert)
                out.append(_decode(n, cert))
    return out


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--out", type=Path, default=Path("data"))
    ap.add_argument("--all", action="store_true", help="also write graph{n}.g6 with disconnected graphs")
    args = ap.parse_args(argv)
    if args.max_n >= len(ALL_GRAPHS):
        ap.error(f"--max-n is limited to {len(ALL_GRAPHS) - 1}")
    args.out.mkdir(parents=True, exist_ok=True)

    graphs: list[Graph] = []
    for n in range(0, args.max_n + 1):
        t0 = time.time()
        graphs = extend(graphs)
        if len(graphs) != ALL_GRAPHS[n]:
            print(f"n={n}: got {len(graphs)} graphs, expected {ALL_GRAPHS[n]}", file=sys.stderr)
            return 1
        lines = sorted(to_graph6(g) for g in graphs)
        conn = sorted(to_graph6(g) for g in graphs if n > 0 and is_connected(g))
        if n > 0 and len(conn) != CONNECTED[n]:
            print(f"n={n}: got {len(conn)} connected, expected {CONNECTED[n]}", file=sys.stderr)
            return 1
        if n > 0 and args.all:
            (args.out / f"graph{n}.g6").write_bytes(b"".join(l + b"\n" for l in lines))
        if n > 0:
            (args.out / f"graph{n}c.g6").write_bytes(b"".join(l + b"\n" for l in conn))
        print(f"n={n}: {len(lines)} graphs, {len(conn)} connected ({time.time() - t0:.1f}s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
