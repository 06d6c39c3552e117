"""Command-line front end.

Exit codes: 0 when every check holds, 1 when a property fails or a claim
has a counterexample, 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from typing import Iterator, Sequence

from . import verify as V
from .claims import registry_self_test
from .corpus import BUILTIN_CEILING, CorpusError, CorpusSpec, parse_filters
from .families import FamilySpec, tightness_witness
from .graph import (
    CapacityError,
    Graph,
    Graph6Error,
    complete,
    cycle,
    edgeless,
    from_graph6,
    join,
    path,
    to_graph6,
    union,
)
from .matching import BudgetError
from .properties import (
    EXTENDABLE,
    FACTOR_CRITICAL,
    HALF_EXTENDABLE,
    PropertyDomainError,
    Verdict,
    decide,
    is_balanced_bipartite_critical,
    is_minimal,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# property name -> (parameter flag, decider key)
PROPERTIES = {
    "extendable": ("k", EXTENDABLE),
    "half-extendable": ("k", HALF_EXTENDABLE),
    "factor-critical": ("n", FACTOR_CRITICAL),
    "minimal-extendable": ("k", EXTENDABLE),
    "minimal-factor-critical": ("n", FACTOR_CRITICAL),
    "balanced-bipartite": ("k", None),
}
MAX_PRINTED = 20


class UsageError(Exception):
    pass


# -- formatting ------------------------------------------------------------------


def format_matching(m) -> str:
    return " ".join(f"({u},{v})" for u, v in sorted(m))


def format_witness(kind: str | None, w) -> str:
    if kind == "matching":
        return format_matching(w)
    if kind == "vertex-set":
        return str(sorted(w))
    if kind == "edge":
        return f"({w[0]},{w[1]})"
    if kind == "vertex-matching":
        v, m = w
        return f"vertex {v}: " + ("no k-matching in G-v" if m is None else format_matching(m))
    if kind == "reason":
        return str(w)
    return "" if w is None else str(w)


def format_verdict(v: Verdict) -> str:
    if v.holds:
        return "holds"
    text = f"fails ({v.reason})"
    if v.witness_kind:
        text += f" witness {v.witness_kind} {format_witness(v.witness_kind, v.witness)}"
    return text


# -- encode: a tiny prefix notation ------------------------------------------------

_ATOMS = {"K": complete, "I": edgeless, "C": cycle, "P": path}
_BINARY = {"union": union, "join": join}


def parse_expression(text: str) -> Graph:
    """Parse e.g. ``join union K 3 K 1 union K 3 K 1``; parentheses and commas
    are accepted as decoration: ``join(union(K 3, K 1), union(K 3, K 1))``."""
    tokens = re.sub(r"[(),]", " ", text).split()
    if not tokens:
        raise UsageError("empty construction expression")
    pos = 0

    def take() -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise UsageError("construction expression ends early")
        pos += 1
        return tokens[pos - 1]

    def expr() -> Graph:
        tok = take()
        if tok in _BINARY:
            left = expr()
            right = expr()
            return _BINARY[tok](left, right)
        if tok in _ATOMS:
            arg = take()
            if not arg.isdigit():
                raise UsageError(f"{tok} needs a vertex count, got {arg!r}")
            return _ATOMS[tok](int(arg))
        raise UsageError(f"unknown token {tok!r} (expected K, I, C, P, union or join)")

    g = expr()
    if pos != len(tokens):
        raise UsageError(f"unexpected trailing tokens: {' '.join(tokens[pos:])}")
    return g


# -- graph input ---------------------------------------------------------------------


def _graph_lines(args) -> Iterator[tuple[str, bytes]]:
    if args.graph6 is not None:
        yield "--graph6", args.graph6.strip().encode("ascii", "replace")
        return
    if args.file is not None and args.file != "-":
        try:
            fh = open(args.file, "rb")
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc}") from exc
        label = args.file
    else:
        if args.file is None and sys.stdin.isatty():
            raise UsageError("no graph given (use --graph6, --file or standard input)")
        fh = sys.stdin.buffer
        label = "stdin"
    try:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if line:
                yield f"{label}:{lineno}", line
    finally:
        if fh is not sys.stdin.buffer:
            fh.close()


def _decide(g: Graph, prop: str, param: int, budget: int | None) -> Verdict:
    if prop == "balanced-bipartite":
        return is_balanced_bipartite_critical(g, param, budget=budget)
    key = PROPERTIES[prop][1]
    if prop.startswith("minimal-"):
        return is_minimal(g, key, param, budget=budget)
    return decide(g, key, param, budget=budget)


def cmd_check(args) -> int:
    flag, _ = PROPERTIES[args.property]
    other = "n" if flag == "k" else "k"
    if getattr(args, other) is not None:
        raise UsageError(f"--{other} does not apply to {args.property}; use --{flag}")
    param = getattr(args, flag)
    if param is None:
        raise UsageError(f"{args.property} needs --{flag}")
    worst = EXIT_OK
    for where, line in _graph_lines(args):
        try:
            g = from_graph6(line)
        except Graph6Error as exc:
            raise UsageError(f"{where}: {exc}") from exc
        try:
            v = _decide(g, args.property, param, args.budget)
        except PropertyDomainError as exc:
            raise UsageError(f"{where}: {exc.reason}: {exc}") from exc
        except BudgetError as exc:
            raise UsageError(f"{where}: budget exceeded: {exc}") from exc
        print(f"{line.decode('ascii')}: {format_verdict(v)}")
        if not v.holds:
            worst = EXIT_FAIL
    return worst


def cmd_family(args) -> int:
    try:
        spec = FamilySpec(args.family, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.emit == "graph6":
        print(to_graph6(spec.build()).decode("ascii"))
    else:
        print(" ".join(map(str, sorted(tightness_witness(spec)))))
    return EXIT_OK


def _corpora(args) -> list[CorpusSpec]:
    filters = parse_filters(args.filters)
    out = [CorpusSpec.builtin(n, filters) for n in args.builtin or ()]
    out += [CorpusSpec.file(p, filters) for p in args.corpus or ()]
    if not out:
        raise UsageError("no corpus given (use --builtin N or --corpus FILE)")
    for c in out:
        if c.source == "graph6" and not os.path.isfile(c.path):
            raise UsageError(f"cannot read corpus {c.path}")
    return out


def _emit(reports: Sequence[V.Report], args) -> int:
    for rep in reports:
        print(rep.summary_line())
        shown = rep.counterexamples[:MAX_PRINTED] or rep.findings[:MAX_PRINTED]
        label = "counterexample" if rep.counterexamples else "finding"
        for c in shown:
            print(f"  {label} {c.graph6} param={c.param} {c.witness_kind} "
                  f"{format_witness(c.witness_kind, c.witness)}")
        hidden = max(rep.failures, len(rep.findings)) - len(shown)
        if hidden > 0:
            print(f"  ... {hidden} more")
        hist = rep.extra.get("delta_histogram")
        if hist is not None:
            text = ", ".join(f"{d}: {c}" for d, c in hist.items()) or "no minimal graphs"
            print(f"  min-degree distribution: {text}")
    if args.out:
        V.write_jsonl(reports, args.out, timing=args.timing)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_verify(args) -> int:
    ids = [c for c in args.claim]
    if "families" in (c.lower() for c in ids):
        if len(ids) != 1 or args.builtin or args.corpus:
            raise UsageError("--claim families takes no corpus and no other claims")
        rep = V.verify_family_tightness(args.k_max, args.sample_budget)
        code = _emit([rep], args)
        for c in rep.extra["checks"]:
            state = "ok" if c["passed"] else "FAILED"
            print(f"  {c['family']}^({c['k']}) {c['check']}: {state} "
                  f"[{c['mode']}, {c['examined']} examined]")
        return code
    if "matching-oracle" in (c.lower() for c in ids):
        if len(ids) != 1:
            raise UsageError("--claim matching-oracle cannot be combined with other claims")
        try:
            rep = V.verify_matching_oracle(_corpora(args), threads=args.threads)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        return _emit([rep], args)
    if "all" in ids:
        ids = V.all_claim_ids()
    known = set(V.all_claim_ids())
    for c in ids:
        if c not in known:
            raise UsageError(f"unknown claim id {c!r}")
    reports = V.verify_claims(ids, _corpora(args), threads=args.threads, params=args.param)
    return _emit(reports, args)


def cmd_scan(args) -> int:
    flag = "k" if args.mode == "minimal-extendable" else "n"
    other = "n" if flag == "k" else "k"
    if getattr(args, other) is not None:
        raise UsageError(f"--{other} does not apply to {args.mode}; use --{flag}")
    param = getattr(args, flag)
    if param is None:
        raise UsageError(f"{args.mode} needs --{flag}")
    reports = [V.scan_minimal_degrees(c, args.mode, param, threads=args.threads)
               for c in _corpora(args)]
    _emit(reports, args)
    # conjecture scans report findings; they never fail the run
    return EXIT_OK


def cmd_encode(args) -> int:
    g = parse_expression(" ".join(args.expr))
    print(to_graph6(g).decode("ascii"))
    return EXIT_OK


# -- parser ----------------------------------------------------------------------------


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _add_corpus(p: argparse.ArgumentParser) -> None:
    p.add_argument("--builtin", type=_nonneg, action="append", metavar="ORDER",
                   help=f"every labelled graph of this order (<= {BUILTIN_CEILING}); repeatable")
    p.add_argument("--corpus", action="append", metavar="FILE",
                   help="graph6 file, optionally gzipped; repeatable")
    p.add_argument("--filters", default="",
                   help="comma list of connected, even-order, odd-order, non-bipartite, min-degree:D")
    p.add_argument("--threads", type=_positive, default=os.cpu_count() or 1)
    p.add_argument("--out", metavar="FILE", help="write a JSON Lines report")
    p.add_argument("--timing", action="store_true",
                   help="record elapsed_ms in the report (makes it run-dependent)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchext",
        description="Decide matching extendability and factor-criticality; verify claims over graph corpora.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check", help="decide a property for one or more graphs")
    p.add_argument("--property", required=True, choices=sorted(PROPERTIES))
    p.add_argument("--k", type=_nonneg)
    p.add_argument("--n", type=_nonneg)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph6", help="a single graph6 string")
    src.add_argument("--file", help="graph6 file, one graph per line ('-' for stdin)")
    p.add_argument("--budget", type=_positive, help="cap on enumerated subsets or matchings")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("family", help="build an extremal family member or its witness")
    p.add_argument("--family", required=True, choices=["G", "H"])
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--emit", choices=["graph6", "witness"], default="graph6")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="check registered claims over corpora")
    p.add_argument("--claim", action="append", required=True,
                   help="claim id, 'all', 'families' or 'matching-oracle'; repeatable")
    p.add_argument("--param", type=_nonneg, action="append",
                   help="restrict to these parameter values; repeatable")
    p.add_argument("--k-max", type=int, default=3, help="largest k for --claim families")
    p.add_argument("--sample-budget", type=_positive, default=100_000,
                   help="random matchings drawn per sampled family check")
    _add_corpus(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="minimum-degree scan of minimal graphs")
    p.add_argument("--mode", required=True, choices=sorted(V.SCAN_MODES))
    p.add_argument("--k", type=_nonneg)
    p.add_argument("--n", type=_nonneg)
    _add_corpus(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("encode", help="graph6 of a construction such as 'join K 1 C 4'")
    p.add_argument("expr", nargs="+")
    p.set_defaults(func=cmd_encode)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    registry_self_test()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, CorpusError, CapacityError, ValueError) as exc:
        print(f"matchext: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetError as exc:
        print(f"matchext: error: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


def main() -> None:
    sys.exit(run())
