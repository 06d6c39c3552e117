#!/usr/bin/env python3
"""Write the JSON Lines reports for every registered claim, the minimal-degree
scans and the family tightness checks into one directory.

Reports carry no timing, so reruns are byte-identical.

Usage:
    python scripts/write_reports.py [--data data] [--out reports] [--max-n 9] [--threads N]
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from matchext.corpus import CorpusSpec
from matchext.verify import (
    all_claim_ids,
    scan_minimal_degrees,
    verify_claims,
    verify_family_tightness,
    write_jsonl,
)

SCANS = (("minimal-extendable", 1), ("minimal-extendable", 2),
         ("minimal-factor-critical", 1), ("minimal-factor-critical", 2))


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--data", type=Path, default=Path("data"))
    ap.add_argument("--out", type=Path, default=Path("reports"))
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    args = ap.parse_args(argv)

    corpora = [CorpusSpec.file(args.data / f"graph{n}c.g6") for n in range(1, args.max_n + 1)]
    args.out.mkdir(parents=True, exist_ok=True)

    claims = verify_claims(all_claim_ids(), corpora, threads=args.threads)
    write_jsonl(claims, args.out / "claims.jsonl")
    scans = [scan_minimal_degrees(corpora, mode, p, threads=args.threads) for mode, p in SCANS]
    write_jsonl(scans, args.out / "scans.jsonl")
    families = verify_family_tightness(5)
    write_jsonl([families], args.out / "families.jsonl")

    for rep in [*claims, *scans, families]:
        print(rep.summary_line())
    return 0 if all(r.passed for r in claims) and families.passed else 1


if __name__ == "__main__":
    sys.exit(main())
