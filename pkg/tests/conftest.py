import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from matchext.graph import Graph  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=9, density=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    if density is None:
        keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        keep = [draw(st.floats(0, 1)) < density for _ in pairs]
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


def corpus(n: int) -> Path:
    path = DATA / f"graph{n}c.g6"
    if not path.exists():
        pytest.skip(f"{path.name} missing; run scripts/make_corpus.py")
    return path


def pytest_terminal_summary(terminalreporter):
    lines = getattr(sys.modules.get("test_acceptance"), "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
