"""Run registered claims over graph corpora and collect reports.

Scanning is data-parallel over batches of graphs; batch results are merged
in submission order and counterexamples are sorted by graph6 bytes and
parameter, so a report does not depend on the worker count.
"""

from __future__ import annotations

import json
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import islice
from math import comb
from multiprocessing import get_context
from typing import Any, Iterable, Sequence

from .claims import (
    CLAIMS,
    Claim,
    GraphFacts,
    Outcome,
    conj1_degrees,
    get_claim,
)
from .corpus import CorpusSpec, accepts, builtin_codes, decode_line, iter_builtin, read_graph6_lines
from .families import FamilySpec, tightness_witness
from .graph import Graph, delete_vertices, is_connected, to_graph6
from .matching import (
    BudgetError,
    PerfectMatchingOracle,
    _matching_stream,
    brute_force_max_matching,
    has_perfect_matching,
    matching_number,
)
from .properties import EXTENDABLE, FACTOR_CRITICAL, is_factor_critical, is_half_extendable

SAMPLE_SEED = 1729
EXHAUSTIVE_K_MAX = 4
BATCH_GRAPH6 = 2000
BATCH_BUILTIN = 1 << 15
FULL_DECIDER_LIMIT = 2_000_000

SCAN_MODES = {"minimal-extendable": EXTENDABLE, "minimal-factor-critical": FACTOR_CRITICAL}


@dataclass(frozen=True)
class Counterexample:
    graph6: str
    param: int | None
    witness_kind: str
    witness: Any

    def sort_key(self):
        return (self.graph6.encode(), -1 if self.param is None else self.param)


@dataclass
class Report:
    claim: str
    corpus: str
    mode: str = "exhaustive"
    scanned: int = 0
    hits: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    findings: list[Counterexample] = field(default_factory=list)
    vacuous: bool = False
    elapsed_ms: int | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def failures(self) -> int:
        return len(self.counterexamples)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def records(self, timing: bool = False) -> list[dict[str, Any]]:
        out = []
        for kind, items in (("failure", self.counterexamples), ("finding", self.findings)):
            for c in items:
                out.append({
                    "record": kind,
                    "claim": self.claim,
                    "graph6": c.graph6,
                    "param": c.param,
                    "witness_kind": c.witness_kind,
                    "witness": witness_json(c.witness_kind, c.witness),
                })
        summary = {
            "record": "summary",
            "claim": self.claim,
            "corpus": self.corpus,
            "scanned": self.scanned,
            "hits": self.hits,
            "failures": self.failures,
            "findings": len(self.findings),
            "vacuous": self.vacuous,
            "mode": self.mode,
            "elapsed_ms": self.elapsed_ms if timing else None,
        }
        summary.update(self.extra)
        out.append(summary)
        return out

    def to_jsonl(self, timing: bool = False) -> str:
        return "".join(
            json.dumps(r, separators=(",", ":")) + "\n" for r in self.records(timing)
        )

    def summary_line(self) -> str:
        text = (
            f"{self.claim}: {self.corpus}: scanned {self.scanned} graphs, "
            f"{self.hits} hypothesis hits, {self.failures} counterexamples"
        )
        if self.findings:
            text += f", {len(self.findings)} notable findings"
        if self.vacuous:
            text += " (vacuous)"
        if self.mode != "exhaustive":
            text += f" [{self.mode}]"
        return text


def _plain(x: Any) -> Any:
    if isinstance(x, (tuple, list, frozenset, set)):
        items = sorted(x) if isinstance(x, (frozenset, set)) else x
        return [_plain(i) for i in items]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return x


def witness_json(kind: str, witness: Any) -> Any:
    if kind == "vertex-matching":
        v, m = witness
        return {"vertex": v, "matching": _plain(m)}
    return _plain(witness)


def write_jsonl(reports: Iterable[Report], path, timing: bool = False) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for r in reports:
            fh.write(r.to_jsonl(timing))


# -- claim resolution (registry ids plus minimal-degree scans) ----------------


def scan_claim_id(mode: str, param: int) -> str:
    if mode not in SCAN_MODES:
        raise ValueError(f"unknown scan mode {mode!r}")
    return f"SCAN:{mode}:{param}"


def _scan_expected(prop: str, param: int, nu: int) -> frozenset[int] | None:
    if prop == FACTOR_CRITICAL:
        return frozenset({param + 1})
    # the conjectured degree set applies for k >= nu/4; for k = 1 the same
    # set {2, 3} is the known range of minimum degrees
    if param == 1 or 4 * param >= nu:
        return conj1_degrees(param)
    return None


def _make_scan_claim(mode: str, param: int) -> Claim:
    prop = SCAN_MODES[mode]

    def params(nu: int):
        if prop == EXTENDABLE:
            ok = nu % 2 == 0 and 0 <= 2 * param <= nu - 2
        else:
            ok = 0 <= param <= nu - 2 and (nu - param) % 2 == 0
        return (param,) if ok else ()

    def check(f: GraphFacts, p: int) -> Outcome | None:
        if not (f.connected and f.minimal(prop, p)):
            return None
        d = f.delta
        expected = _scan_expected(prop, p, f.n)
        if expected is None or d in expected:
            return Outcome(True, "degree", d)
        return Outcome(False, "degree", d)

    return Claim(scan_claim_id(mode, param), f"{mode}({param}) minimum-degree scan",
                 params, check, conjecture=True)


def resolve_claim(claim_id: str) -> Claim:
    if claim_id.startswith("SCAN:"):
        _, mode, param = claim_id.split(":")
        return _make_scan_claim(mode, int(param))
    return get_claim(claim_id)


# -- scanning ------------------------------------------------------------------


def _tally(outcome: Outcome) -> Any:
    return outcome.witness if outcome.witness_kind == "degree" else None


def _scan_graphs(claims: Sequence[Claim], graphs: Iterable[tuple[Graph, bytes | None]],
                 param_filter) -> list[dict]:
    parts = [{"scanned": 0, "hits": 0, "bad": [], "tally": Counter()} for _ in claims]
    for g, g6 in graphs:
        facts = GraphFacts(g, g6)
        for claim, part in zip(claims, parts):
            part["scanned"] += 1
            for p in claim.params(g.n):
                if param_filter is not None and p not in param_filter:
                    continue
                outcome = claim.check(facts, p)
                if outcome is None:
                    continue
                part["hits"] += 1
                t = _tally(outcome)
                if t is not None:
                    part["tally"][t] += 1
                if not outcome.holds:
                    part["bad"].append(Counterexample(
                        facts.g6.decode("ascii"), p, outcome.witness_kind, outcome.witness))
    return parts


def _run_task(task) -> list[dict]:
    claim_ids, kind, payload, filters, param_filter = task
    claims = [resolve_claim(c) for c in claim_ids]
    if kind == "builtin":
        n, start, stop = payload
        graphs = ((g, None) for g in iter_builtin(n, filters, range(start, stop)))
    else:
        path, lines = payload

        def decoded():
            for lineno, line in lines:
                g = decode_line(path, lineno, line)
                if accepts(g, filters):
                    yield g, line
        graphs = decoded()
    return _scan_graphs(claims, graphs, param_filter)


def _tasks(claim_ids, corpus: CorpusSpec, param_filter):
    if corpus.source == "builtin":
        codes = builtin_codes(corpus.order)
        for start in range(0, len(codes), BATCH_BUILTIN):
            stop = min(start + BATCH_BUILTIN, len(codes))
            yield (claim_ids, "builtin", (corpus.order, start, stop), corpus.filters, param_filter)
        return
    lines = read_graph6_lines(corpus.path)
    while True:
        chunk = list(islice(lines, BATCH_GRAPH6))
        if not chunk:
            return
        yield (claim_ids, "lines", (corpus.path, chunk), corpus.filters, param_filter)


def verify_claims(
    claim_ids: Sequence[str],
    corpora: CorpusSpec | Sequence[CorpusSpec],
    *,
    threads: int = 1,
    params: Iterable[int] | None = None,
) -> list[Report]:
    """Check several claims in one pass over the corpora."""
    if isinstance(corpora, CorpusSpec):
        corpora = [corpora]
    claim_ids = list(claim_ids)
    claims = [resolve_claim(c) for c in claim_ids]
    param_filter = None if params is None else frozenset(params)
    t0 = time.perf_counter()
    totals = [{"scanned": 0, "hits": 0, "bad": [], "tally": Counter()} for _ in claims]

    def merge(parts):
        for total, part in zip(totals, parts):
            total["scanned"] += part["scanned"]
            total["hits"] += part["hits"]
            total["bad"].extend(part["bad"])
            total["tally"].update(part["tally"])

    tasks = (t for c in corpora for t in _tasks(claim_ids, c, param_filter))
    if threads <= 1:
        for task in tasks:
            merge(_run_task(task))
    else:
        with get_context("fork").Pool(threads) as pool:
            for parts in pool.imap(_run_task, tasks):
                merge(parts)
    elapsed = round((time.perf_counter() - t0) * 1000)

    desc = "+".join(c.describe() for c in corpora)
    reports = []
    for claim, total in zip(claims, totals):
        bad = sorted(total["bad"], key=Counterexample.sort_key)
        rep = Report(
            claim=claim.id,
            corpus=desc,
            mode="sampled" if claim.sampled_only else "exhaustive",
            scanned=total["scanned"],
            hits=total["hits"],
            vacuous=total["hits"] == 0,
            elapsed_ms=elapsed,
        )
        if claim.conjecture:
            rep.findings = bad
        else:
            rep.counterexamples = bad
        if total["tally"]:
            rep.extra["delta_histogram"] = {str(d): c for d, c in sorted(total["tally"].items())}
        if rep.vacuous and claim.note:
            rep.extra["note"] = claim.note
        reports.append(rep)
    return reports


def verify_claim(claim_id: str, corpus, **kw) -> Report:
    return verify_claims([claim_id], corpus, **kw)[0]


def all_claim_ids() -> list[str]:
    return [c.id for c in CLAIMS]


def scan_minimal_degrees(corpus, mode: str, param: int, *, threads: int = 1) -> Report:
    """Minimum-degree distribution of the minimal graphs of a property.

    Graphs whose minimum degree falls outside the conjectured values are
    listed as findings; they never count as failures.
    """
    rep = verify_claim(scan_claim_id(mode, param), corpus, threads=threads)
    rep.extra.setdefault("delta_histogram", {})
    return rep


# -- matching oracle -------------------------------------------------------------


def _oracle_task(task) -> tuple[int, list[tuple[bytes, int, int]]]:
    n, start, stop, filters = task
    scanned, bad = 0, []
    for g in iter_builtin(n, filters, range(start, stop)):
        scanned += 1
        fast = matching_number(g)
        slow = brute_force_max_matching(g)
        if fast != slow:
            bad.append((to_graph6(g), fast, slow))
    return scanned, bad


def verify_matching_oracle(corpora: CorpusSpec | Sequence[CorpusSpec], *, threads: int = 1) -> Report:
    """Compare the blossom matching number with exhaustive search on builtin corpora."""
    if isinstance(corpora, CorpusSpec):
        corpora = [corpora]
    for c in corpora:
        if c.source != "builtin":
            raise ValueError("the matching oracle check runs on builtin corpora")
    t0 = time.perf_counter()
    tasks = [
        (c.order, start, min(start + BATCH_BUILTIN, len(builtin_codes(c.order))), c.filters)
        for c in corpora
        for start in range(0, len(builtin_codes(c.order)), BATCH_BUILTIN)
    ]
    scanned, bad = 0, []
    if threads <= 1:
        results = map(_oracle_task, tasks)
        for part_scanned, part_bad in results:
            scanned += part_scanned
            bad += part_bad
    else:
        with get_context("fork").Pool(threads) as pool:
            for part_scanned, part_bad in pool.imap(_oracle_task, tasks):
                scanned += part_scanned
                bad += part_bad
    cx = [Counterexample(g6.decode("ascii"), None, "sizes", {"blossom": a, "brute_force": b})
          for g6, a, b in bad]
    return Report(
        claim="MATCHING-ORACLE",
        corpus="+".join(c.describe() for c in corpora),
        scanned=scanned,
        hits=scanned,
        counterexamples=sorted(cx, key=Counterexample.sort_key),
        elapsed_ms=round((time.perf_counter() - t0) * 1000),
    )


# -- extremal families ----------------------------------------------------------


def _exhaustive_extension(g: Graph, pm, k: int, within: int) -> tuple[int, Any]:
    """Count k-matchings of g[within]; return the first that does not extend."""
    count = 0
    for edges, covered in _matching_stream(g, k, within):
        count += 1
        if not pm(within ^ covered):
            return count, edges
    return count, None


def _sampled_extension(g: Graph, pm, k: int, budget: int, rng: random.Random, per_vertex: bool):
    full = g.full_mask
    edge_lists = {}

    def edges_for(within):
        if within not in edge_lists:
            es = [e for e in g.edges() if within >> e[0] & 1 and within >> e[1] & 1]
            edge_lists[within] = (es, [1 << u | 1 << v for u, v in es])
        return edge_lists[within]

    draws = attempts = 0
    while draws < budget:
        attempts += 1
        if attempts > 1000 * budget:
            raise RuntimeError("rejection sampling made no progress")
        if per_vertex:
            v = rng.randrange(g.n)
            within = full ^ (1 << v)
        else:
            v, within = None, full
        es, masks = edges_for(within)
        if len(es) < k:
            return draws, (v, None)
        pick = rng.sample(range(len(es)), k)
        covered = 0
        for i in pick:
            covered |= masks[i]
        if covered.bit_count() != 2 * k:
            continue
        draws += 1
        if not pm(within ^ covered):
            m = tuple(sorted(es[i] for i in pick))
            return draws, (m if v is None else (v, m))
    return draws, None


def verify_family_tightness(
    k_max: int,
    sample_budget: int = 100_000,
    *,
    seed: int = SAMPLE_SEED,
    families: Sequence[str] = ("G", "H"),
    exhaustive_k_max: int = EXHAUSTIVE_K_MAX,
) -> Report:
    """Check that G^(k) and H^(k) have the extension property but miss the
    matching factor-criticality, for k = 2..k_max."""
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    t0 = time.perf_counter()
    rng = random.Random(seed)
    checks: list[dict[str, Any]] = []
    bad: list[Counterexample] = []
    sampled = False

    def record(spec, g6, check, mode, examined, witness_kind=None, witness=None, passed=None):
        ok = witness_kind is None if passed is None else passed
        checks.append({"family": spec.family, "k": spec.k, "check": check, "mode": mode,
                       "examined": examined, "passed": ok})
        if not ok:
            bad.append(Counterexample(g6, spec.k, witness_kind or "none", witness))

    for k in range(2, k_max + 1):
        for fam in families:
            spec = FamilySpec(fam, k)
            g = spec.build()
            g6 = to_graph6(g).decode("ascii")
            nu = g.n
            pm = PerfectMatchingOracle(g)
            full = g.full_mask

            # parameter sits strictly below the equivalence threshold
            below = 4 * k < nu + 2 if fam == "G" else 4 * k < nu - 3
            record(spec, g6, "below-threshold", "exact", 1, passed=below)

            if fam == "G":
                name = "extendable"
                if not is_connected(g):
                    record(spec, g6, name, "exact", 0, "reason", "disconnected")
                elif k <= exhaustive_k_max:
                    count, w = _exhaustive_extension(g, pm, k, full)
                    if count == 0:
                        record(spec, g6, name, "exhaustive", 0, "reason", "no-k-matching")
                    else:
                        record(spec, g6, name, "exhaustive", count,
                               "matching" if w else None, w)
                else:
                    sampled = True
                    draws, w = _sampled_extension(g, pm, k, sample_budget, rng, False)
                    record(spec, g6, name, "sampled", draws, "matching" if w else None, w)
            else:
                name = "half-extendable"
                if k <= exhaustive_k_max - 1:
                    total, failure = 0, None
                    for v in range(nu):
                        within = full ^ (1 << v)
                        count, w = _exhaustive_extension(g, pm, k, within)
                        total += count
                        if count == 0 or w is not None:
                            failure = (v, w)
                            break
                    record(spec, g6, name, "exhaustive", total,
                           "vertex-matching" if failure else None, failure)
                elif k <= exhaustive_k_max:
                    # per-vertex matching counts are too large to list; the
                    # decider covers every k-matching through its vertex set
                    v = is_half_extendable(g, k, pm=pm)
                    record(spec, g6, name, "exhaustive-subsets", comb(nu - 1, 2 * k) * nu,
                           v.witness_kind if not v.holds else None, v.witness)
                else:
                    sampled = True
                    draws, w = _sampled_extension(g, pm, k, sample_budget, rng, True)
                    record(spec, g6, name, "sampled", draws,
                           "vertex-matching" if w else None, w)

            s = tightness_witness(spec)
            size = 2 * k if fam == "G" else 2 * k + 1
            rest, _ = delete_vertices(g, s)
            witness_ok = len(s) == size and not has_perfect_matching(rest)
            record(spec, g6, "paper-witness", "exact", 1,
                   None if witness_ok else "vertex-set", None if witness_ok else s)

            try:
                verdict = is_factor_critical(g, size, pm=pm, budget=FULL_DECIDER_LIMIT)
            except BudgetError:
                record(spec, g6, "not-factor-critical", "skipped", 0, passed=True)
            else:
                record(spec, g6, "not-factor-critical", "exhaustive", comb(nu, size),
                       None if not verdict.holds else "none", None)
                checks[-1]["first_bad_subset"] = list(verdict.witness or ())

    return Report(
        claim="FAMILIES",
        corpus=f"families[{','.join(families)}] k=2..{k_max}",
        mode="sampled" if sampled else "exhaustive",
        scanned=len({(c['family'], c['k']) for c in checks}),
        hits=len(checks),
        counterexamples=sorted(bad, key=Counterexample.sort_key),
        elapsed_ms=round((time.perf_counter() - t0) * 1000),
        extra={"checks": checks, "seed": seed, "sample_budget": sample_budget},
    )
