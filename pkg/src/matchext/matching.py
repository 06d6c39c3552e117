"""Maximum matching (Edmonds' blossom algorithm), k-matching enumeration and
perfect-matching tests."""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .graph import Edge, Graph, bits, induced

BRUTE_FORCE_LIMIT = 16
# masks up to this many vertices are decided by memoised recursion, larger
# ones by a fresh blossom run on the induced subgraph
_RECURSION_LIMIT = 16
_TABLE_LIMIT = 10


class BudgetError(RuntimeError):
    pass


class Matching(NamedTuple):
    edges: tuple[Edge, ...]
    covered: int

    def __len__(self) -> int:  # type: ignore[override]
        return len(self.edges)

    @classmethod
    def of(cls, edges: Iterable[tuple[int, int]]) -> Matching:
        norm = tuple(sorted((min(e), max(e)) for e in edges))
        covered = 0
        for u, v in norm:
            covered |= 1 << u | 1 << v
        return cls(norm, covered)


def _augmenting_path_end(adj, n: int, mate: list[int], root: int) -> tuple[int, list[int]]:
    # Edmonds' search from a single exposed root; blossoms are contracted by
    # relabelling their vertices with a common base.
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in bits(adj[v]):
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark(v, cur, to, blossom)
                mark(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    return to, parent
                used[mate[to]] = True
                queue.append(mate[to])
    return -1, parent


def _mates(g: Graph) -> list[int]:
    n, adj = g.n, g.adj
    mate = [-1] * n
    # greedy start: lowest free neighbour of each free vertex
    free = (1 << n) - 1
    for v in range(n):
        if free >> v & 1:
            cand = adj[v] & free & ~(1 << v)
            if cand:
                u = (cand & -cand).bit_length() - 1
                mate[v], mate[u] = u, v
                free &= ~(1 << v | 1 << u)
    for root in range(n):
        if mate[root] != -1 or not adj[root]:
            continue
        end, parent = _augmenting_path_end(adj, n, mate, root)
        while end != -1:
            pv = parent[end]
            nxt = mate[pv]
            mate[end], mate[pv] = pv, end
            end = nxt
    return mate


def maximum_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching; deterministic for a fixed labelling."""
    mate = _mates(g)
    return Matching.of((v, u) for v, u in enumerate(mate) if u > v)


def matching_number(g: Graph) -> int:
    return sum(1 for v, u in enumerate(_mates(g)) if u > v)


def has_perfect_matching(g: Graph) -> bool:
    if g.n % 2:
        return False
    return matching_number(g) * 2 == g.n


def _check_matching(g: Graph, m: Matching | Iterable[tuple[int, int]]) -> Matching:
    if not isinstance(m, Matching):
        m = Matching.of(m)
    covered = 0
    for u, v in m.edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise ValueError(f"edge {(u, v)} is not in the graph")
        if covered >> u & 1 or covered >> v & 1:
            raise ValueError("edges of a matching must be vertex-disjoint")
        covered |= 1 << u | 1 << v
    return m


def extends_to_perfect(g: Graph, m: Matching | Iterable[tuple[int, int]]) -> bool:
    m = _check_matching(g, m)
    if g.n % 2:
        return False
    rest, _ = induced(g, g.full_mask & ~m.covered)
    return has_perfect_matching(rest)


def _matching_stream(
    g: Graph, k: int, within: int | None = None
) -> Iterator[tuple[tuple[Edge, ...], int]]:
    """Size-``k`` matchings of ``g[within]`` as ``(edges, covered_mask)``.

    Lexicographic in the sorted edge list; built incrementally so consumers
    can stop early.
    """
    if k < 0:
        raise ValueError("matching size must be non-negative")
    if within is None:
        within = g.full_mask
    edges = [e for e in g.edges() if within >> e[0] & 1 and within >> e[1] & 1]
    masks = [1 << u | 1 << v for u, v in edges]
    m = len(edges)
    if k == 0:
        yield (), 0
        return
    if 2 * k > within.bit_count() or k > m:
        return

    chosen: list[Edge] = []

    def extend(start: int, covered: int, need: int):
        last = m - need
        if need == 1:
            for i in range(start, last + 1):
                if not covered & masks[i]:
                    yield (*chosen, edges[i]), covered | masks[i]
            return
        for i in range(start, last + 1):
            em = masks[i]
            if covered & em:
                continue
            chosen.append(edges[i])
            yield from extend(i + 1, covered | em, need - 1)
            chosen.pop()

    yield from extend(0, 0, k)


def enumerate_matchings(g: Graph, k: int) -> Iterator[Matching]:
    for edges, covered in _matching_stream(g, k):
        yield Matching(edges, covered)


def brute_force_max_matching(g: Graph) -> int:
    """Exhaustive maximum-matching size; an oracle independent of the blossom code."""
    if g.n > BRUTE_FORCE_LIMIT:
        raise BudgetError(f"brute force is limited to {BRUTE_FORCE_LIMIT} vertices")
    adj = g.adj
    memo: dict[int, int] = {}

    def best(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        if mask.bit_count() < 2:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        result = best(rest)  # v left uncovered
        for u in bits(adj[v] & rest):
            result = max(result, 1 + best(rest ^ (1 << u)))
        memo[mask] = result
        return result

    return best(g.full_mask)


class PerfectMatchingOracle:
    """Memoised test of whether ``g[mask]`` has a perfect matching.

    Small graphs get a full bottom-up table over all vertex masks unless
    ``table=False``; larger ones are answered lazily.
    """

    def __init__(self, g: Graph, table: bool | None = None):
        self.g = g
        self.adj = g.adj
        self.table: bytearray | None = None
        self._memo: dict[int, bool] = {0: True}
        if table or (table is None and g.n <= _TABLE_LIMIT):
            self.table = _pm_table(g)

    def __call__(self, mask: int) -> bool:
        if self.table is not None:
            return bool(self.table[mask])
        memo = self._memo
        hit = memo.get(mask)
        if hit is not None:
            return hit
        size = mask.bit_count()
        if size % 2:
            result = False
        elif size > _RECURSION_LIMIT:
            sub, _ = induced(self.g, mask)
            result = matching_number(sub) * 2 == size
        else:
            result = self._recurse(mask)
        memo[mask] = result
        return result

    def _recurse(self, mask: int) -> bool:
        memo = self._memo
        low = mask & -mask
        rest = mask ^ low
        cand = self.adj[low.bit_length() - 1] & rest
        result = False
        while cand:
            ub = cand & -cand
            cand ^= ub
            sub = rest ^ ub
            r = memo.get(sub)
            if r is None:
                r = self._recurse(sub)
            if r:
                result = True
                break
        memo[mask] = result
        return result


@lru_cache(maxsize=None)
def _table_plan(n: int) -> tuple[tuple[int, int, int], ...]:
    """(mask, lowest vertex, mask without it) for every even non-empty mask, ascending."""
    plan = []
    for mask in range(3, 1 << n):
        if mask.bit_count() & 1:
            continue
        low = mask & -mask
        plan.append((mask, low.bit_length() - 1, mask ^ low))
    return tuple(plan)


def _pm_table(g: Graph) -> bytearray:
    adj = g.adj
    table = bytearray(1 << g.n)
    table[0] = 1
    for mask, v, rest in _table_plan(g.n):
        cand = adj[v] & rest
        while cand:
            ub = cand & -cand
            if table[rest ^ ub]:
                table[mask] = 1
                break
            cand ^= ub
    return table
