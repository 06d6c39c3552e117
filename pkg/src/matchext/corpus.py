"""Graph streams: every labelled graph of a given order, or a graph6 file."""

from __future__ import annotations

import gzip
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .graph import Graph, Graph6Error, bits, from_graph6, is_bipartite

BUILTIN_CEILING = 8
FILTERS = ("connected", "even-order", "odd-order", "non-bipartite", "min-degree")


class CorpusError(ValueError):
    pass


def parse_filters(text: str | None) -> tuple[str, ...]:
    """Parse ``"connected,non-bipartite,min-degree:3"`` into a sorted tuple."""
    if not text:
        return ()
    out = []
    for item in (t.strip() for t in text.split(",")):
        if not item:
            continue
        name, _, arg = item.partition(":")
        if name not in FILTERS:
            raise CorpusError(f"unknown filter {item!r}")
        if name == "min-degree":
            if not arg.isdigit():
                raise CorpusError("min-degree filter needs an integer, e.g. min-degree:3")
            item = f"min-degree:{int(arg)}"
        elif arg:
            raise CorpusError(f"filter {name!r} takes no argument")
        out.append(item)
    return tuple(sorted(set(out)))


@dataclass(frozen=True)
class CorpusSpec:
    source: str  # "builtin" or "graph6"
    order: int | None = None
    path: str | None = None
    filters: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.source == "builtin":
            if self.order is None or not 0 <= self.order <= BUILTIN_CEILING:
                raise CorpusError(
                    f"builtin enumeration supports orders 0..{BUILTIN_CEILING}, got {self.order}"
                )
        elif self.source == "graph6":
            if not self.path:
                raise CorpusError("graph6 corpus needs a path")
        else:
            raise CorpusError(f"unknown corpus source {self.source!r}")
        object.__setattr__(self, "filters", parse_filters(",".join(self.filters)))

    @classmethod
    def builtin(cls, order: int, filters=()) -> CorpusSpec:
        return cls("builtin", order=order, filters=tuple(filters))

    @classmethod
    def file(cls, path, filters=()) -> CorpusSpec:
        return cls("graph6", path=str(path), filters=tuple(filters))

    def describe(self) -> str:
        base = f"builtin-labeled({self.order})" if self.source == "builtin" else f"graph6({Path(self.path).name})"
        return f"{base}[{','.join(self.filters)}]" if self.filters else base


def _min_degree_bound(filters: tuple[str, ...]) -> int:
    bound = 0
    for f in filters:
        if f.startswith("min-degree:"):
            bound = max(bound, int(f.split(":")[1]))
    return bound


def _connected_rows(rows, n: int) -> bool:
    if n == 0:
        return False
    full = (1 << n) - 1
    seen = frontier = 1
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= rows[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def accepts(g: Graph, filters: tuple[str, ...]) -> bool:
    for f in filters:
        if f == "connected":
            if not _connected_rows(g.adj, g.n):
                return False
        elif f == "even-order":
            if g.n % 2:
                return False
        elif f == "odd-order":
            if g.n % 2 == 0:
                return False
        elif f == "non-bipartite":
            if is_bipartite(g) is not None:
                return False
        else:
            if g.n == 0 or min(r.bit_count() for r in g.adj) < int(f.split(":")[1]):
                return False
    return True


def labeled_graph(n: int, code: int) -> Graph:
    """The labelled graph whose edge set is ``code`` in graph6 bit order.

    Bit ``i`` of ``code`` is the ``i``-th pair of the column-major upper
    triangle, so ``code`` reads the graph6 edge field least-significant first.
    """
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        col = code >> pos & ((1 << j) - 1)
        pos += j
        rows[j] = col
        bit = 1 << j
        while col:
            low = col & -col
            rows[low.bit_length() - 1] |= bit
            col ^= low
    return Graph._trusted(n, rows)


def builtin_codes(n: int) -> range:
    return range(1 << (n * (n - 1) // 2))


def iter_builtin(n: int, filters: tuple[str, ...], codes: range | None = None) -> Iterator[Graph]:
    codes = builtin_codes(n) if codes is None else codes
    rest = tuple(f for f in filters if f != "connected")
    need_connected = "connected" in filters
    if ("even-order" in filters and n % 2) or ("odd-order" in filters and n % 2 == 0):
        return
    for code in codes:
        g = labeled_graph(n, code)
        if need_connected and not _connected_rows(g.adj, n):
            continue
        if rest and not accepts(g, rest):
            continue
        yield g


def read_graph6_lines(path) -> Iterator[tuple[int, bytes]]:
    path = Path(path)
    opener = gzip.open if path.suffix == ".gz" else open
    try:
        with opener(path, "rb") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if line:
                    yield lineno, line
    except OSError as exc:
        raise CorpusError(f"cannot read corpus {path}: {exc}") from exc


def decode_line(path, lineno: int, line: bytes) -> Graph:
    try:
        return from_graph6(line)
    except Graph6Error as exc:
        raise CorpusError(f"{path}:{lineno}: {exc}") from exc


def enumerate_corpus(spec: CorpusSpec) -> Iterator[Graph]:
    if spec.source == "builtin":
        yield from iter_builtin(spec.order, spec.filters)
        return
    for lineno, line in read_graph6_lines(spec.path):
        g = decode_line(spec.path, lineno, line)
        if accepts(g, spec.filters):
            yield g
