"""Registry of checkable theorem, lemma and conjecture statements.

Each claim maps a graph order to the parameter values it quantifies over
and, for a given (graph, parameter), returns ``None`` when the hypothesis
is not met or an :class:`Outcome` for the conclusion. Every hypothesis
includes connectivity, which the results assume for all graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil
from typing import Any, Callable, Iterable

from .graph import Graph, delete_edge, is_bipartite, min_degree, minimum_vertex_cut, to_graph6
from .matching import PerfectMatchingOracle
from .properties import (
    EXTENDABLE,
    FACTOR_CRITICAL,
    HALF_EXTENDABLE,
    PropertyDomainError,
    Verdict,
    _connected,
    decide,
    is_balanced_bipartite_critical,
)


@dataclass(frozen=True)
class Outcome:
    holds: bool
    witness_kind: str = "none"
    witness: Any = None


PASS = Outcome(True)


def _failed(v: Verdict) -> Outcome:
    if v.witness_kind is None:
        return Outcome(False, "reason", v.reason)
    return Outcome(False, v.witness_kind, v.witness)


class GraphFacts:
    """Lazily computed, cached facts about one graph, shared by all claims."""

    def __init__(self, g: Graph, g6: bytes | None = None, *, table: bool | None = None):
        self.g = g
        self._g6 = g6
        self._table = table
        self._pm: PerfectMatchingOracle | None = None
        self._verdicts: dict[tuple[str, int], Verdict | None] = {}
        self._holds: dict[tuple[str, int], bool] = {}
        self._minimal: dict[tuple[str, int], bool] = {}
        self._without: dict[tuple[int, int], GraphFacts] = {}
        self._cache: dict[str, Any] = {}

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def g6(self) -> bytes:
        if self._g6 is None:
            self._g6 = to_graph6(self.g)
        return self._g6

    @property
    def pm(self) -> PerfectMatchingOracle:
        if self._pm is None:
            self._pm = PerfectMatchingOracle(self.g, self._table)
        return self._pm

    def _cached(self, key: str, fn: Callable[[], Any]) -> Any:
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def connected(self) -> bool:
        return self._cached("connected", lambda: _connected(self.g))

    @property
    def bipartition(self):
        return self._cached("bipartition", lambda: is_bipartite(self.g))

    @property
    def bipartite(self) -> bool:
        return self.bipartition is not None

    @property
    def delta(self) -> int:
        return self._cached("delta", lambda: min_degree(self.g))

    @property
    def min_cut(self):
        return self._cached("min_cut", lambda: minimum_vertex_cut(self.g))

    @property
    def kappa(self) -> int:
        cut = self.min_cut
        return self.n - 1 if cut is None else len(cut)

    def verdict(self, prop: str, param: int) -> Verdict | None:
        """Decider verdict with witness, or ``None`` for ill-posed parameters."""
        key = (prop, param)
        if key not in self._verdicts:
            try:
                self._verdicts[key] = decide(self.g, prop, param, pm=self.pm)
            except PropertyDomainError:
                self._verdicts[key] = None
        return self._verdicts[key]

    def has(self, prop: str, param: int) -> bool:
        key = (prop, param)
        hit = self._holds.get(key)
        if hit is None:
            if key in self._verdicts:
                v = self._verdicts[key]
                hit = v is not None and v.holds
            else:
                try:
                    hit = decide(self.g, prop, param, pm=self.pm, witness=False).holds
                except PropertyDomainError:
                    hit = False
            self._holds[key] = hit
        return hit

    def ext(self, k: int) -> bool:
        return self.has(EXTENDABLE, k)

    def half(self, k: int) -> bool:
        return self.has(HALF_EXTENDABLE, k)

    def fc(self, n: int) -> bool:
        return self.has(FACTOR_CRITICAL, n)

    def without(self, e: tuple[int, int]) -> GraphFacts:
        if e not in self._without:
            # one-off graphs: lazy oracle beats a full table
            self._without[e] = GraphFacts(delete_edge(self.g, e), table=False)
        return self._without[e]

    def first_edge_where(self, pred: Callable[[GraphFacts], bool]) -> tuple[int, int] | None:
        for e in self.g.edges():
            if pred(self.without(e)):
                return e
        return None

    def minimal(self, prop: str, param: int) -> bool:
        key = (prop, param)
        if key not in self._minimal:
            self._minimal[key] = self.has(prop, param) and (
                self.first_edge_where(lambda h: h.has(prop, param)) is None
            )
        return self._minimal[key]


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    params: Callable[[int], Iterable[int | None]]
    check: Callable[[GraphFacts, Any], Outcome | None]
    conjecture: bool = False
    sampled_only: bool = False
    note: str = field(default="", compare=False)


def _even(rule: Callable[[int], Iterable[int | None]]):
    return lambda nu: rule(nu) if nu % 2 == 0 else ()


def _odd(rule: Callable[[int], Iterable[int | None]]):
    return lambda nu: rule(nu) if nu % 2 == 1 else ()


def _once_if(cond: Callable[[int], bool]):
    return lambda nu: (None,) if cond(nu) else ()


def _ext_range(nu: int, lo: int = 0) -> range:
    return range(max(lo, 0), (nu - 2) // 2 + 1)


def fc_range(nu: int, lo: int = 0) -> range:
    """Values n of the right parity with 0 <= lo <= n <= nu - 2."""
    start = lo + ((nu - lo) % 2)
    return range(start, nu - 1, 2)


# -- claim bodies --------------------------------------------------------------


def _ob1(f: GraphFacts, k: int) -> Outcome | None:
    if f.n % 2 == 0:
        if not (f.connected and f.fc(2 * k)):
            return None
        return PASS if f.ext(k) else _failed(f.verdict(EXTENDABLE, k))
    if not (f.connected and f.fc(2 * k + 1)):
        return None
    return PASS if f.half(k) else _failed(f.verdict(HALF_EXTENDABLE, k))


def _p2ext(f: GraphFacts, _: None) -> Outcome | None:
    if not (f.connected and not f.bipartite and f.ext(2)):
        return None
    return PASS if f.fc(2) else _failed(f.verdict(FACTOR_CRITICAL, 2))


def _p3bic(f: GraphFacts, _: None) -> Outcome | None:
    if not (f.connected and f.ext(3) and f.fc(2)):
        return None
    e = f.first_edge_where(lambda h: not h.fc(2))
    return PASS if e is None else Outcome(False, "edge", e)


def _lmf1(f: GraphFacts, k: int) -> Outcome | None:
    if not (f.connected and not f.bipartite and f.ext(k)):
        return None
    return PASS if f.fc(k) else _failed(f.verdict(FACTOR_CRITICAL, k))


def _lmf2(f: GraphFacts, k: int) -> Outcome | None:
    if not (f.connected and not f.bipartite and f.ext(k + 1)):
        return None
    if not f.fc(k):
        return _failed(f.verdict(FACTOR_CRITICAL, k))
    e = f.first_edge_where(lambda h: not h.fc(k))
    return PASS if e is None else Outcome(False, "edge", e)


def _lmfs1(f: GraphFacts, _: None) -> Outcome | None:
    nu = f.n
    if not (f.connected and not f.bipartite and f.ext(nu // 2 - 2)):
        return None
    return PASS if f.fc(nu - 4) else _failed(f.verdict(FACTOR_CRITICAL, nu - 4))


def _lmy1(f: GraphFacts, k: int) -> Outcome | None:
    if not (f.connected and not f.bipartite and f.ext(k)):
        return None
    return PASS if f.fc(2 * k) else _failed(f.verdict(FACTOR_CRITICAL, 2 * k))


def _lmp1(f: GraphFacts, k: int) -> Outcome | None:
    if not (f.connected and f.ext(k)):
        return None
    return PASS if f.ext(k - 1) else _failed(f.verdict(EXTENDABLE, k - 1))


def _lmy4(f: GraphFacts, k: int) -> Outcome | None:
    if not (f.connected and f.half(k)):
        return None
    return PASS if f.half(k - 1) else _failed(f.verdict(HALF_EXTENDABLE, k - 1))


def _cut_outcome(f: GraphFacts) -> Outcome:
    cut = f.min_cut
    return Outcome(False, "vertex-set", tuple(sorted(cut)) if cut is not None else ())


def _lmly1(f: GraphFacts, k: int) -> Outcome | None:
    if not (f.connected and f.ext(k)):
        return None
    if f.bipartite or f.kappa >= 2 * k:
        return PASS
    return _cut_outcome(f)


def _lmz1(f: GraphFacts, k: int) -> Outcome | None:
    prop = EXTENDABLE if f.n % 2 == 0 else HALF_EXTENDABLE
    if not (f.connected and f.has(prop, k)):
        return None
    for m in range(k):
        if not f.has(prop, m):
            return Outcome(False, "param", m)
    return PASS


def _th21(f: GraphFacts, k: int) -> Outcome | None:
    if not (f.connected and not f.bipartite):
        return None
    ext, fc = f.ext(k), f.fc(2 * k)
    if ext == fc:
        return PASS
    return _failed(f.verdict(FACTOR_CRITICAL, 2 * k) if ext else f.verdict(EXTENDABLE, k))


def _th23(f: GraphFacts, k: int) -> Outcome | None:
    if not f.connected:
        return None
    half, fc = f.half(k), f.fc(2 * k + 1)
    if half == fc:
        return PASS
    return _failed(f.verdict(FACTOR_CRITICAL, 2 * k + 1) if half else f.verdict(HALF_EXTENDABLE, k))


def _lmp2(f: GraphFacts, k: int) -> Outcome | None:
    parts = f.bipartition
    if not (f.connected and parts is not None and len(parts[0]) == len(parts[1])):
        return None
    bbc = is_balanced_bipartite_critical(f.g, k, pm=f.pm)
    ext = f.ext(k)
    if ext == bbc.holds:
        return PASS
    return _failed(bbc if ext else f.verdict(EXTENDABLE, k))


def _lml1(f: GraphFacts, k: int) -> Outcome | None:
    if not (f.connected and f.bipartite and f.minimal(EXTENDABLE, k)):
        return None
    U, W = f.bipartition
    degs = f.g.degrees()
    cu = sum(1 for v in U if degs[v] == k + 1)
    cw = sum(1 for v in W if degs[v] == k + 1)
    if cu + cw >= 2 * k + 2 and cu >= k + 1 and cw >= k + 1:
        return PASS
    return Outcome(False, "degree-count", {"U": cu, "W": cw})


def _kappa(f: GraphFacts, k: int) -> Outcome | None:
    if not (f.connected and f.ext(k)):
        return None
    return PASS if f.kappa >= k + 1 else _cut_outcome(f)


def _bipnfc(f: GraphFacts, n: int) -> Outcome | None:
    if not (f.connected and f.bipartite):
        return None
    return Outcome(False, "none") if f.fc(n) else PASS


def conj1_degrees(k: int) -> frozenset[int]:
    return frozenset({k + 1, 2 * k, 2 * k + 1})


def _conj1(f: GraphFacts, k: int) -> Outcome | None:
    if not (f.connected and f.minimal(EXTENDABLE, k)):
        return None
    d = f.delta
    return PASS if d in conj1_degrees(k) else Outcome(False, "degree", d)


def _conj2(f: GraphFacts, n: int) -> Outcome | None:
    if not (f.connected and f.minimal(FACTOR_CRITICAL, n)):
        return None
    d = f.delta
    return PASS if d == n + 1 else Outcome(False, "degree", d)


def _ob1_params(nu: int) -> range:
    if nu % 2 == 0:
        return _ext_range(nu)
    return range(0, (nu - 3) // 2 + 1)


def _half_range(nu: int, lo: int = 0) -> range:
    return range(lo, (nu - 3) // 2 + 1)


CLAIMS: tuple[Claim, ...] = (
    Claim("C-OB1", "2k-factor-critical implies k-extendable; (2k+1)-factor-critical implies k-half-extendable",
          _ob1_params, _ob1),
    Claim("C-P2EXT", "2-extendable, non-bipartite, order >= 6 implies bicritical",
          _even(_once_if(lambda nu: nu >= 6)), _p2ext),
    Claim("C-P3BIC", "3-extendable and bicritical with order >= 8 implies every G-e is bicritical",
          _even(_once_if(lambda nu: nu >= 8)), _p3bic),
    Claim("C-LMF1", "even k: non-bipartite k-extendable with order > 2k implies k-factor-critical",
          _even(lambda nu: range(0, (nu - 2) // 2 + 1, 2)), _lmf1),
    Claim("C-LMF2", "even k: non-bipartite (k+1)-extendable with order >= 2k+4 implies G and every G-e k-factor-critical",
          _even(lambda nu: range(0, (nu - 4) // 2 + 1, 2)), _lmf2),
    Claim("C-LMFS1", "non-bipartite (order/2 - 2)-extendable with order >= 14 implies (order-4)-factor-critical",
          _even(_once_if(lambda nu: nu >= 14)), _lmfs1, sampled_only=True),
    Claim("C-LMY1", "non-bipartite k-extendable with k >= 2(order+1)/3 implies 2k-factor-critical",
          _even(lambda nu: _ext_range(nu, ceil(2 * (nu + 1) / 3))), _lmy1,
          note="hypothesis unsatisfiable: k >= 2(order+1)/3 exceeds the extendability range (order-2)/2"),
    Claim("C-LMP1", "k-extendable with order >= 2k+2 and k >= 1 implies (k-1)-extendable",
          _even(lambda nu: _ext_range(nu, 1)), _lmp1),
    Claim("C-LMY4", "k-half-extendable with k >= 1 implies (k-1)-half-extendable",
          _odd(lambda nu: _half_range(nu, 1)), _lmy4),
    Claim("C-LMLY1", "k-extendable with k >= order/4 implies bipartite or connectivity >= 2k",
          _even(lambda nu: _ext_range(nu, ceil(nu / 4))), _lmly1),
    Claim("C-LMZ1", "k-extendable implies m-extendable for all m <= k (and the half-extendable analogue)",
          lambda nu: _ext_range(nu) if nu % 2 == 0 else _half_range(nu), _lmz1),
    Claim("C-TH21", "k >= (order+2)/4: non-bipartite G is k-extendable iff 2k-factor-critical",
          _even(lambda nu: _ext_range(nu, ceil((nu + 2) / 4))), _th21),
    Claim("C-TH23", "k >= (order-3)/4: G is k-half-extendable iff (2k+1)-factor-critical",
          _odd(lambda nu: range(max(0, ceil((nu - 3) / 4)), (nu - 3) // 2 + 1)), _th23),
    Claim("C-LMP2", "connected balanced bipartite G: k-extendable iff deleting any k vertices from each side leaves a perfect matching",
          _even(lambda nu: _ext_range(nu, 1)), _lmp2),
    Claim("C-LML1", "minimal k-extendable bipartite G has >= k+1 vertices of degree k+1 on each side",
          _even(lambda nu: _ext_range(nu, 1)), _lml1),
    Claim("C-KAPPA", "k-extendable implies connectivity >= k+1",
          _even(lambda nu: _ext_range(nu) if nu >= 2 else ()), _kappa),
    Claim("C-BIPNFC", "a bipartite graph is not n-factor-critical for n >= 1",
          lambda nu: fc_range(nu, 1), _bipnfc),
    Claim("CONJ-1", "minimal k-extendable with order/2 + 1 <= 2k + 1 has minimum degree k+1, 2k or 2k+1",
          _even(lambda nu: _ext_range(nu, ceil(nu / 4))), _conj1, conjecture=True),
    Claim("CONJ-2", "minimal n-factor-critical has minimum degree n+1",
          lambda nu: fc_range(nu, 0), _conj2, conjecture=True),
)

REGISTRY: dict[str, Claim] = {c.id: c for c in CLAIMS}

EXPECTED_IDS = (
    "C-OB1", "C-P2EXT", "C-P3BIC", "C-LMF1", "C-LMF2", "C-LMFS1", "C-LMY1",
    "C-LMP1", "C-LMY4", "C-LMLY1", "C-LMZ1", "C-TH21", "C-TH23", "C-LMP2",
    "C-LML1", "C-KAPPA", "C-BIPNFC", "CONJ-1", "CONJ-2",
)


def registry_self_test() -> None:
    ids = [c.id for c in CLAIMS]
    if len(ids) != len(set(ids)):
        raise AssertionError("duplicate claim ids in registry")
    if set(ids) != set(EXPECTED_IDS):
        missing = set(EXPECTED_IDS) - set(ids)
        extra = set(ids) - set(EXPECTED_IDS)
        raise AssertionError(f"claim registry mismatch: missing {missing}, unexpected {extra}")


def get_claim(claim_id: str) -> Claim:
    try:
        return REGISTRY[claim_id]
    except KeyError:
        raise KeyError(f"unknown claim {claim_id!r}") from None
