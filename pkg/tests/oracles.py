"""Naive reference implementations used as test oracles.

They share nothing with the package beyond the edge list of a graph and
are written for clarity, not speed.
"""

from __future__ import annotations

from itertools import combinations


def edge_list(g) -> list[tuple[int, int]]:
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.adj[u] >> v & 1]


def connected_on(vertices, edges) -> bool:
    vertices = set(vertices)
    if not vertices:
        return False
    start = min(vertices)
    seen, stack = {start}, [start]
    while stack:
        u = stack.pop()
        for a, b in edges:
            for x, y in ((a, b), (b, a)):
                if x == u and y in vertices and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return seen == vertices


def has_pm_on(vertices, edges) -> bool:
    """Perfect matching of the subgraph induced on ``vertices`` by recursion."""
    vertices = frozenset(vertices)
    if not vertices:
        return True
    if len(vertices) % 2:
        return False
    v = min(vertices)
    for a, b in edges:
        if v in (a, b):
            u = b if a == v else a
            if u in vertices and has_pm_on(vertices - {u, v}, edges):
                return True
    return False


def max_matching_size(n, edges) -> int:
    for size in range(n // 2, 0, -1):
        for combo in combinations(edges, size):
            ends = [x for e in combo for x in e]
            if len(set(ends)) == len(ends):
                return size
    return 0


def matchings_of_size(edges, k, vertices=None):
    for combo in combinations(edges, k):
        ends = [x for e in combo for x in e]
        if len(set(ends)) != len(ends):
            continue
        if vertices is not None and not set(ends) <= set(vertices):
            continue
        yield combo


def k_extendable(g, k) -> bool:
    edges = edge_list(g)
    verts = set(range(g.n))
    if g.n % 2 or not connected_on(verts, edges):
        return False
    found = False
    for m in matchings_of_size(edges, k):
        found = True
        if not has_pm_on(verts - {x for e in m for x in e}, edges):
            return False
    return found


def half_extendable(g, k) -> bool:
    edges = edge_list(g)
    verts = set(range(g.n))
    if g.n % 2 == 0 or not connected_on(verts, edges):
        return False
    for v in range(g.n):
        rest = verts - {v}
        found = False
        for m in matchings_of_size(edges, k, rest):
            found = True
            if not has_pm_on(rest - {x for e in m for x in e}, edges):
                return False
        if not found:
            return False
    return True


def factor_critical(g, n) -> bool:
    edges = edge_list(g)
    verts = set(range(g.n))
    return all(has_pm_on(verts - set(s), edges) for s in combinations(range(g.n), n))


def brute_connectivity(g) -> int:
    """Smallest vertex set whose deletion disconnects; n-1 for complete graphs."""
    edges = edge_list(g)
    verts = set(range(g.n))
    if not connected_on(verts, edges):
        return 0
    for size in range(1, g.n - 1):
        for s in combinations(range(g.n), size):
            if not connected_on(verts - set(s), edges):
                return size
    return g.n - 1


def has_odd_closed_walk(g) -> bool:
    # reachability in the parity double cover
    for start in range(g.n):
        seen = {(start, 0)}
        stack = [(start, 0)]
        while stack:
            u, p = stack.pop()
            for w in range(g.n):
                if g.adj[u] >> w & 1 and (w, 1 - p) not in seen:
                    seen.add((w, 1 - p))
                    stack.append((w, 1 - p))
        if (start, 1) in seen:
            return True
    return False
