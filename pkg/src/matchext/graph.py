"""Simple undirected graphs on at most 64 vertices, stored as bitset rows.

Vertex sets are plain ``int`` bitmasks internally; public functions accept
any iterable of vertex indices wherever a vertex set is expected.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_ORDER = 64

Edge = tuple[int, int]


class CapacityError(ValueError):
    """Raised when a construction would exceed ``MAX_ORDER`` vertices."""


class MissingEdgeError(ValueError):
    pass


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _check_order(n: int) -> None:
    if n < 0:
        raise ValueError(f"negative order {n}")
    if n > MAX_ORDER:
        raise CapacityError(f"order {n} exceeds capacity {MAX_ORDER}")


def mask_of(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbourhood bitmask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_order(self.n)
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        _check_order(n)
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, rows)

    @classmethod
    def _trusted(cls, n: int, rows) -> Graph:
        # skips the O(n^2) validation; callers guarantee symmetry and no loops
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(rows))
        return g

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        out = []
        for u, row in enumerate(self.adj):
            out.extend((u, v) for v in bits(row >> (u + 1) << (u + 1)))
        return out

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, graph6={to_graph6(self).decode()!r})"


# -- constructions -----------------------------------------------------------


def complete(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph._trusted(n, [full ^ (1 << v) for v in range(n)])


def edgeless(n: int) -> Graph:
    _check_order(n)
    return Graph._trusted(n, [0] * n)


def build_basic(kind: str, n: int) -> Graph:
    if kind == "complete":
        return complete(n)
    if kind == "edgeless":
        return edgeless(n)
    raise ValueError(f"unknown basic graph kind {kind!r}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return join(edgeless(a), edgeless(b))


def union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertices of ``g2`` are shifted by ``g1.n``."""
    n = g1.n + g2.n
    _check_order(n)
    shift = g1.n
    return Graph._trusted(n, list(g1.adj) + [row << shift for row in g2.adj])


def join(g1: Graph, g2: Graph) -> Graph:
    n = g1.n + g2.n
    _check_order(n)
    shift = g1.n
    left = (1 << shift) - 1
    right = ((1 << g2.n) - 1) << shift
    rows = [row | right for row in g1.adj] + [(row << shift) | left for row in g2.adj]
    return Graph._trusted(n, rows)


def induced(g: Graph, keep: int) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by bitmask ``keep``, relabelled in ascending order.

    Returns the new graph and ``labels`` with ``labels[new] == old``.
    """
    labels = members(keep)
    index = {old: new for new, old in enumerate(labels)}
    rows = []
    for old in labels:
        row = 0
        for u in bits(g.adj[old] & keep):
            row |= 1 << index[u]
        rows.append(row)
    return Graph._trusted(len(labels), rows), labels


def delete_vertices(g: Graph, s: Iterable[int] | int) -> tuple[Graph, tuple[int, ...]]:
    """``G - S`` with compacted, order-preserving labels and the relabelling map."""
    drop = mask_of(s)
    if drop & ~g.full_mask:
        raise ValueError("vertex set is not contained in the graph")
    return induced(g, g.full_mask & ~drop)


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise MissingEdgeError(f"edge {e} is not in the graph")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph._trusted(g.n, rows)


# -- structural queries ------------------------------------------------------


def component_of(g: Graph, v: int, within: int | None = None) -> int:
    """Bitmask of the component containing ``v`` in ``g[within]``."""
    within = g.full_mask if within is None else within
    seen = 1 << v
    frontier = seen
    adj = g.adj
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= adj[u]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def components(g: Graph, within: int | None = None) -> list[int]:
    rest = g.full_mask if within is None else within
    out = []
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = component_of(g, v, rest)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise ValueError("connectivity is undefined for the null graph")
    return component_of(g, 0) == g.full_mask


def is_bipartite(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A 2-colouring ``(U, W)`` or ``None``.

    In every component the lowest-indexed vertex is placed in ``U``.
    """
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in bits(g.adj[v]):
                if colour[u] == -1:
                    colour[u] = colour[v] ^ 1
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return None
    U = frozenset(v for v in range(g.n) if colour[v] == 0)
    W = frozenset(v for v in range(g.n) if colour[v] == 1)
    return U, W


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree is undefined for the null graph")
    return min(row.bit_count() for row in g.adj)


def cross_edge_count(g: Graph, x: Iterable[int] | int, y: Iterable[int] | int) -> int:
    xm, ym = mask_of(x), mask_of(y)
    if xm & ym:
        raise ValueError("vertex sets overlap")
    return sum((g.adj[v] & ym).bit_count() for v in bits(xm))


def _max_vertex_disjoint_paths(g: Graph, s: int, t: int, cap: int):
    """Unit-capacity max flow on the vertex-split network of ``g``.

    Node ``2v`` is v_in and ``2v+1`` is v_out; the split arc of every vertex
    other than ``s`` and ``t`` carries capacity one. Stops once the flow
    reaches ``cap``. Returns the flow value and the set of nodes reachable
    from ``s_out`` in the final residual network.
    """
    n = g.n
    # residual capacities, sparse: cap_[(a, b)]
    res: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in res:
            out[a].append(b)
            out[b].append(a)
            res[(a, b)] = 0
            res.setdefault((b, a), 0)
        res[(a, b)] += c

    big = n + 1
    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in out[a]:
                if b not in parent and res[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow, set(parent)
        b = sink
        while b != source:
            a = parent[b]
            res[(a, b)] -= 1
            res[(b, a)] += 1
            b = a
        flow += 1
    return flow, None


def minimum_vertex_cut(g: Graph) -> frozenset[int] | None:
    """A minimum separating vertex set, or ``None`` for complete graphs.

    Disconnected graphs yield the empty set.
    """
    if g.n < 2:
        raise ValueError("vertex connectivity needs at least two vertices")
    if component_of(g, 0) != g.full_mask:
        return frozenset()
    best: frozenset[int] | None = None
    best_size = g.n - 1
    for s in range(g.n):
        # some vertex outside a minimum cut lies among the first best_size+1
        if s > best_size:
            break
        for t in range(g.n):
            if t == s or g.has_edge(s, t):
                continue
            flow, reach = _max_vertex_disjoint_paths(g, s, t, best_size)
            if reach is not None:
                best = frozenset(
                    v for v in range(g.n) if 2 * v in reach and 2 * v + 1 not in reach
                )
                best_size = len(best)
    return best


def vertex_connectivity(g: Graph) -> int:
    cut = minimum_vertex_cut(g)
    return g.n - 1 if cut is None else len(cut)


# -- graph6 ------------------------------------------------------------------


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    return b"~" + bytes([63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])


def to_graph6(g: Graph) -> bytes:
    """graph6 encoding without the trailing newline."""
    out = bytearray(_encode_order(g.n))
    acc = nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return bytes(out)


def from_graph6(text: bytes | str) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    if data.startswith(b">>graph6<<"):
        raise Graph6Error("header-prefixed input is not supported", 0)
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside printable range 63..126", i)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    else:
        if len(data) < 4:
            raise Graph6Error("truncated long-form order", len(data))
        if data[1] == 126:
            raise Graph6Error("orders above 258047 are unsupported", 1)
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        pos = 4
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds capacity {MAX_ORDER}", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated edge field: expected {need} bytes", len(data))
    if len(body) > need:
        raise Graph6Error("trailing bytes after edge field", pos + need)
    rows = [0] * n
    k = 0
    i, j = 0, 1
    for offset, b in enumerate(body):
        v = b - 63
        for shift in range(5, -1, -1):
            if k == nbits:
                if v & ((1 << (shift + 1)) - 1):
                    raise Graph6Error("non-zero padding bits", pos + offset)
                break
            if v >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph._trusted(n, rows)


def edge_pairs(n: int) -> list[Edge]:
    """Vertex pairs in graph6 bit order (column-major upper triangle)."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def all_subsets(n: int, size: int) -> Iterator[int]:
    """``size``-subsets of ``range(n)`` as bitmasks, lexicographic by sorted members."""
    for combo in combinations(range(n), size):
        m = 0
        for v in combo:
            m |= 1 << v
        yield m
