"""Deciders for extendability and factor-criticality.

Every decider returns a :class:`Verdict`. A failing verdict carries the
lexicographically first counterexample: a matching, a vertex set, an edge,
or a (vertex, matching) pair. Pass ``witness=False`` when only the boolean
matters; failing matchings are then not searched for. Ill-posed parameters (wrong parity, out of
range) raise :class:`PropertyDomainError` instead of returning ``False``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Any, Callable, Iterable, Iterator

from .graph import (
    Edge,
    Graph,
    component_of,
    delete_edge,
    is_bipartite,
    members,
)
from .matching import BudgetError, PerfectMatchingOracle, _matching_stream

OK = "ok"
DISCONNECTED = "disconnected"
WRONG_PARITY = "wrong-parity"
PARAM_OUT_OF_RANGE = "param-out-of-range"
NO_K_MATCHING = "no-k-matching"
NON_EXTENDABLE_MATCHING = "non-extendable-matching"
BAD_SUBSET = "bad-subset"
NOT_BIPARTITE = "not-bipartite"
UNBALANCED_BIPARTITION = "unbalanced-bipartition"
EDGE_REMOVAL_SURVIVES = "edge-removal-survives"

EXTENDABLE = "extendable"
HALF_EXTENDABLE = "half-extendable"
FACTOR_CRITICAL = "factor-critical"


class PropertyDomainError(ValueError):
    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class Verdict:
    holds: bool
    reason: str = OK
    witness_kind: str | None = None
    witness: Any = None

    def __bool__(self) -> bool:
        return self.holds


HOLDS = Verdict(True)


_CACHE_LIMIT = 100_000


@lru_cache(maxsize=512)
def _subset_tuple(n: int, size: int) -> tuple[int, ...]:
    return tuple(_subset_iter(n, size))


def _subset_iter(n: int, size: int) -> Iterator[int]:
    for combo in combinations(range(n), size):
        m = 0
        for v in combo:
            m |= 1 << v
        yield m


def subsets(n: int, size: int) -> Iterable[int]:
    """All ``size``-subsets of ``range(n)`` as masks, lexicographic by members."""
    if comb(n, size) <= _CACHE_LIMIT:
        return _subset_tuple(n, size)
    return _subset_iter(n, size)


class _Budget:
    __slots__ = ("left", "limit")

    def __init__(self, limit: int | None):
        self.limit = limit
        self.left = limit

    def spend(self, count: int = 1) -> None:
        if self.left is None:
            return
        self.left -= count
        if self.left < 0:
            raise BudgetError(f"enumeration budget of {self.limit} exceeded")


def _oracle(g: Graph, pm: PerfectMatchingOracle | None) -> PerfectMatchingOracle:
    if pm is None:
        return PerfectMatchingOracle(g)
    if pm.g is not g:
        raise ValueError("oracle belongs to a different graph")
    return pm


def _connected(g: Graph) -> bool:
    return g.n > 0 and component_of(g, 0) == g.full_mask


def _scan_extension(pm, within: int, size: int, n: int, budget: _Budget) -> tuple[bool, bool]:
    """Over ``size``-subsets X of ``within`` that carry a perfect matching,
    report (some X exists, some X has a non-matchable complement)."""
    found = False
    table = pm.table
    budget.spend(comb(n, size))
    cands = subsets(n, size)
    outside = ~within
    for x in cands:
        if x & outside:
            continue
        if table is not None:
            if not table[x]:
                continue
            found = True
            if not table[within ^ x]:
                return True, True
        else:
            if not pm(x):
                continue
            found = True
            if not pm(within ^ x):
                return True, True
    return found, False


def _first_bad_matching(g: Graph, pm, within: int, k: int) -> tuple[Edge, ...]:
    for edges, covered in _matching_stream(g, k, within):
        if not pm(within ^ covered):
            return edges
    raise AssertionError("subset scan and matching enumeration disagree")


def is_k_extendable(
    g: Graph,
    k: int,
    *,
    pm: PerfectMatchingOracle | None = None,
    budget: int | None = None,
    witness: bool = True,
) -> Verdict:
    """Connected, has a k-matching, and every k-matching lies in a perfect matching."""
    if g.n % 2:
        raise PropertyDomainError(WRONG_PARITY, f"k-extendability needs even order, got {g.n}")
    if not 0 <= 2 * k <= g.n - 2:
        raise PropertyDomainError(
            PARAM_OUT_OF_RANGE, f"k={k} outside 0..(n-2)/2 for n={g.n}"
        )
    if not _connected(g):
        return Verdict(False, DISCONNECTED)
    pm = _oracle(g, pm)
    found, bad = _scan_extension(pm, g.full_mask, 2 * k, g.n, _Budget(budget))
    if not found:
        return Verdict(False, NO_K_MATCHING)
    if not bad:
        return HOLDS
    if not witness:
        return Verdict(False, NON_EXTENDABLE_MATCHING)
    m = _first_bad_matching(g, pm, g.full_mask, k)
    return Verdict(False, NON_EXTENDABLE_MATCHING, "matching", m)


def is_half_extendable(
    g: Graph,
    k: int,
    *,
    pm: PerfectMatchingOracle | None = None,
    budget: int | None = None,
    witness: bool = True,
) -> Verdict:
    """For every vertex v, G-v has a k-matching and each one extends to a
    perfect matching of G-v. Connectivity is required; 0 <= k <= (n-3)/2."""
    if g.n % 2 == 0:
        raise PropertyDomainError(
            WRONG_PARITY, f"half-extendability needs odd order, got {g.n}"
        )
    if not 0 <= 2 * k <= g.n - 3:
        # at k = (n-1)/2 every k-matching of G-v is perfect and the notion
        # collapses to factor-criticality, which breaks monotonicity in k
        raise PropertyDomainError(
            PARAM_OUT_OF_RANGE, f"k={k} outside 0..(n-3)/2 for n={g.n}"
        )
    if not _connected(g):
        return Verdict(False, DISCONNECTED)
    pm = _oracle(g, pm)
    spent = _Budget(budget)
    full = g.full_mask
    for v in range(g.n):
        rest = full ^ (1 << v)
        found, bad = _scan_extension(pm, rest, 2 * k, g.n, spent)
        if not found:
            return Verdict(False, NO_K_MATCHING, "vertex-matching", (v, None))
        if bad:
            if not witness:
                return Verdict(False, NON_EXTENDABLE_MATCHING)
            m = _first_bad_matching(g, pm, rest, k)
            return Verdict(False, NON_EXTENDABLE_MATCHING, "vertex-matching", (v, m))
    return HOLDS


def is_factor_critical(
    g: Graph,
    n: int,
    *,
    pm: PerfectMatchingOracle | None = None,
    budget: int | None = None,
    witness: bool = True,
) -> Verdict:
    """Every ``n``-subset S leaves G-S with a perfect matching."""
    if not 0 <= n <= g.n - 2:
        raise PropertyDomainError(
            PARAM_OUT_OF_RANGE, f"n={n} outside 0..{g.n - 2}"
        )
    if (g.n - n) % 2:
        raise PropertyDomainError(WRONG_PARITY, f"n={n} and order {g.n} differ in parity")
    pm = _oracle(g, pm)
    _Budget(budget).spend(comb(g.n, n))
    cands = subsets(g.n, n)
    full = g.full_mask
    table = pm.table
    if table is not None:
        for s in cands:
            if not table[full ^ s]:
                return Verdict(False, BAD_SUBSET, "vertex-set", members(s))
    else:
        for s in cands:
            if not pm(full ^ s):
                return Verdict(False, BAD_SUBSET, "vertex-set", members(s))
    return HOLDS


_DECIDERS: dict[str, Callable[..., Verdict]] = {
    EXTENDABLE: is_k_extendable,
    HALF_EXTENDABLE: is_half_extendable,
    FACTOR_CRITICAL: is_factor_critical,
}


def decide(g: Graph, prop: str, param: int, **kw) -> Verdict:
    if prop not in _DECIDERS:
        raise ValueError(f"unknown property {prop!r}")
    return _DECIDERS[prop](g, param, **kw)


def is_minimal(
    g: Graph, prop: str, param: int, *, budget: int | None = None
) -> Verdict:
    """``g`` has the property and no single-edge deletion keeps it."""
    base = decide(g, prop, param, budget=budget)
    if not base:
        return base
    for e in g.edges():
        if decide(delete_edge(g, e), prop, param, budget=budget):
            return Verdict(False, EDGE_REMOVAL_SURVIVES, "edge", e)
    return HOLDS


def is_balanced_bipartite_critical(
    g: Graph, k: int, *, pm: PerfectMatchingOracle | None = None, budget: int | None = None
) -> Verdict:
    """Removing any k vertices from each side leaves a perfect matching."""
    parts = is_bipartite(g)
    if parts is None:
        raise PropertyDomainError(NOT_BIPARTITE, "graph is not bipartite")
    if not 1 <= k or 2 * k > g.n - 2:
        raise PropertyDomainError(PARAM_OUT_OF_RANGE, f"k={k} outside 1..n/2-1 for n={g.n}")
    if not _connected(g):
        return Verdict(False, DISCONNECTED)
    U, W = (sorted(p) for p in parts)
    if len(U) != len(W):
        return Verdict(False, UNBALANCED_BIPARTITION)
    pm = _oracle(g, pm)
    spent = _Budget(budget)
    full = g.full_mask
    for us in combinations(U, k):
        um = 0
        for u in us:
            um |= 1 << u
        for ws in combinations(W, k):
            spent.spend()
            s = um
            for w in ws:
                s |= 1 << w
            if not pm(full ^ s):
                return Verdict(False, BAD_SUBSET, "vertex-set", members(s))
    return HOLDS


@dataclass(frozen=True)
class Profile:
    max_extendability: int | None
    max_half_extendability: int | None
    max_factor_criticality: int | None


def profile(g: Graph) -> Profile:
    """Largest parameter for which each property holds (``None`` if none)."""
    pm = PerfectMatchingOracle(g)
    ext = half = None
    if g.n % 2 == 0:
        for k in range(0, (g.n - 2) // 2 + 1):
            if not is_k_extendable(g, k, pm=pm):
                break
            ext = k
    else:
        for k in range(0, (g.n - 3) // 2 + 1):
            if not is_half_extendable(g, k, pm=pm):
                break
            half = k
    fc = None
    for n in range(g.n % 2, g.n - 1, 2):
        if is_factor_critical(g, n, pm=pm):
            fc = n
    return Profile(ext, half, fc)
